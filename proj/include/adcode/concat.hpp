#pragma once

#include <string>

#include "adcode/distance.hpp"

namespace adcode {

struct BlockInfo {
  std::size_t n_blocks = 0;
  std::size_t block_size = 0;
  std::size_t delta = 0;
};

// A stabilizer code with a declared block structure: n_blocks contiguous
// blocks of block_size qubits, and a blockwise distance delta (the minimum
// number of blocks touched by any element of C(S)\S). This is the
// binary-expanded form of a qudit code over dimension 2^block_size.
struct BlockCode {
  StabilizerCode code;
  std::size_t n_blocks = 0;
  std::size_t block_size = 0;
  std::size_t delta = 0;
  bool delta_verified = false;

  std::size_t k_qudits() const { return code.k() / block_size; }
  BlockLayout layout() const { return BlockLayout{n_blocks, block_size}; }
  BlockInfo info() const { return BlockInfo{n_blocks, block_size, delta}; }
};

// Checks the block structure and verifies the declared delta by brute force
// when n + k fits under opts.centralizer_cap; larger codes keep delta as
// declared (delta_verified stays false).
BlockCode make_block_code(StabilizerCode code, std::size_t n_blocks,
                          std::size_t block_size, std::size_t delta,
                          const SearchOptions& opts = {});

// The [[r, r-1]] code spanned by the even-weight computational basis states:
// single stabilizer generator Z^r, logicals Xbar_j = X_j X_{r-1} and
// Zbar_j = Z_j for j = 0..r-2. Its effective distance is 2.
StabilizerCode even_weight_code(std::size_t r);

// Image of a k1-qubit Pauli under the inner code's logical operators: the
// product over j of Xbar_j^(x_j) Zbar_j^(z_j). Identity maps to identity.
PauliString logical_image(const StabilizerCode& inner,
                          const PauliString& block_pauli);

enum class Variant { Full, FirstBlockTrivial };

struct ConcatSpec {
  StabilizerCode inner;  // logical count must equal the outer block size
  BlockCode outer;
  Variant variant = Variant::Full;
};

// Concatenated stabilizer code built from two generator groups: the outer
// generators with each block factor replaced by its logical image, and the
// inner generators embedded on every encoded block.
//
// Full encodes all n2 blocks with the inner code (length n1*n2);
// FirstBlockTrivial keeps block 1 on k1 physical qubits (length
// n1*(n2-1) + k1). Both encode k1*k2 qubits.
StabilizerCode concatenate(const ConcatSpec& spec);

enum class Provenance { Constructed, Arithmetic, Declared };

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_e_bound = 0;  // effective-distance lower bound
  std::size_t t = 0;          // damping errors corrected: (d_e_bound - 1) / 2
  Provenance provenance = Provenance::Arithmetic;
  bool conditional_on_delta = false;  // outer delta declared but not verified
};

// Parameter arithmetic for the concatenation, from an inner [[n1,k1]] code of
// effective distance inner_de and an outer [[n2,k2,delta]] block code:
//   Full:              (n1*n2,          k1*k2, inner_de*delta)
//   FirstBlockTrivial: (n1*(n2-1)+k1,   k1*k2, inner_de*(delta-1)+1)
CodeParams concat_params(std::size_t n1, std::size_t k1, std::size_t inner_de,
                         std::size_t n2, std::size_t k2, std::size_t delta,
                         Variant variant,
                         Provenance provenance = Provenance::Arithmetic);
CodeParams concat_params(const ConcatSpec& spec, std::size_t inner_de);

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);
std::string to_string(Provenance p);

}  // namespace adcode
