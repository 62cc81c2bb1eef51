#pragma once

#include <optional>
#include <span>
#include <vector>

#include "adcode/pauli.hpp"

namespace adcode {

// An [[n,k]] stabilizer code: n - k independent, pairwise commuting
// generators, with optional logical operator pairs. Immutable once created;
// create() validates everything, so an instance always satisfies:
//   - generators pairwise commute and are independent (symplectic rank n-k),
//   - logical_x[i] anticommutes with logical_z[i] and commutes with every
//     other logical and with every generator.
class StabilizerCode {
 public:
  static StabilizerCode create(std::size_t n, std::vector<PauliString> generators);
  static StabilizerCode create(std::size_t n, std::vector<PauliString> generators,
                               std::vector<PauliString> logical_x,
                               std::vector<PauliString> logical_z);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  std::span<const PauliString> generators() const { return generators_; }

  bool has_logicals() const { return !logical_x_.empty() || k_ == 0; }
  std::span<const PauliString> logical_x() const { return logical_x_; }
  std::span<const PauliString> logical_z() const { return logical_z_; }

  // Membership in the stabilizer group modulo phase.
  bool in_stabilizer(const PauliString& p) const;

  // Commutes with every generator.
  bool in_centralizer(const PauliString& p) const;

  // An error is detectable iff it anticommutes with some stabilizer element
  // or lies in the stabilizer itself; the undetectable errors are exactly
  // the nontrivial logical operators C(S)\S.
  bool is_detectable(const PauliString& e) const;

  // RREF of the generators' symplectic vectors (canonical for the group).
  const RowEchelon& stabilizer_space() const { return stab_space_; }

  // Returns a copy with logical pairs filled in by canonical symplectic
  // completion. Deterministic, and invariant under generator reordering.
  StabilizerCode with_logicals() const;

 private:
  StabilizerCode(std::size_t n, std::size_t k, std::vector<PauliString> gens,
                 std::vector<PauliString> lx, std::vector<PauliString> lz,
                 RowEchelon space);

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<PauliString> generators_;
  std::vector<PauliString> logical_x_, logical_z_;
  RowEchelon stab_space_;
};

// Convenience constructor from Pauli text strings.
StabilizerCode code_from_strings(std::size_t n,
                                 const std::vector<std::string>& generators);

// Basis of the centralizer C(S): the stabilizer's RREF rows plus 2k vectors
// completing them. complement spans C(S)/S.
struct CentralizerBasis {
  std::vector<PauliString> stabilizer;
  std::vector<PauliString> complement;
};
CentralizerBasis centralizer_basis(const StabilizerCode& code);

// Checks every error in order; nullopt means all detectable. `errors` is
// expected in lexicographic order (ErrorSet elements are), making the result
// the lexicographically smallest undetectable element.
std::optional<PauliString> find_undetectable(const StabilizerCode& code,
                                             std::span<const PauliString> errors);

}  // namespace adcode
