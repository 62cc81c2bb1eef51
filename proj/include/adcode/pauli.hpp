#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "adcode/gf2.hpp"

namespace adcode {

// n-qubit Pauli operator modulo global phase, stored as paired X/Z
// bit-vectors: position i is (x,z) = (0,0) -> I, (1,0) -> X, (1,1) -> Y,
// (0,1) -> Z. Equality is equality of the bit-vectors; no phase is tracked.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : n_(n), x_(n), z_(n) {}
  PauliString(BitVec x, BitVec z);

  // Text form: uppercase I/X/Y/Z, one character per qubit, no separators.
  static PauliString parse(std::string_view text);
  std::string str() const;

  std::size_t num_qubits() const { return n_; }

  bool x_bit(std::size_t i) const { return x_.get(i); }
  bool z_bit(std::size_t i) const { return z_.get(i); }
  char at(std::size_t i) const;
  void set(std::size_t i, char pauli);

  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }

  bool is_identity() const { return !x_.any() && !z_.any(); }

  // Count of non-identity factors.
  std::size_t hamming_weight() const;

  // X and Y factors count 1, Z factors count 2.
  std::size_t effective_weight() const;

  // Symplectic inner product sum_i (a.x_i b.z_i + a.z_i b.x_i) mod 2 == 0.
  bool commutes_with(const PauliString& o) const;

  // Product modulo phase: componentwise XOR of the X and Z bit-vectors.
  PauliString& operator*=(const PauliString& o);
  friend PauliString operator*(PauliString a, const PauliString& b) {
    a *= b;
    return a;
  }

  // Length-2n vector (x-part then z-part) used for stabilizer linear algebra.
  BitVec symplectic() const;
  static PauliString from_symplectic(const BitVec& v);

  // Sub-operator on qubits [offset, offset+len).
  PauliString slice(std::size_t offset, std::size_t len) const;
  // Overwrites qubits [offset, offset+sub.num_qubits()) with sub.
  void embed(const PauliString& sub, std::size_t offset);

  static PauliString single(std::size_t n, std::size_t i, char pauli);

  // Ordering on the symplectic vector; used for deterministic tie-breaking.
  bool lex_less(const PauliString& o) const;

  bool operator==(const PauliString&) const = default;

  std::size_t hash() const { return x_.hash() * 0x9e3779b97f4a7c15ull ^ z_.hash(); }

 private:
  std::size_t n_ = 0;
  BitVec x_, z_;
};

struct PauliHash {
  std::size_t operator()(const PauliString& p) const { return p.hash(); }
};

}  // namespace adcode
