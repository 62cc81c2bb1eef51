#pragma once

#include <string>
#include <vector>

#include "adcode/distance.hpp"

namespace adcode {

// A finite collection of Pauli errors, stored lexicographically sorted and
// deduplicated (set semantics on the symplectic vectors).
struct ErrorSet {
  std::size_t n = 0;
  std::string label;
  std::vector<PauliString> elements;

  bool contains(const PauliString& p) const;
};

// Pauli error model of amplitude damping. t = 1 is
//   {I} u {X_i, Y_i, Z_i} u {two-qubit operators with both factors in {X,Y}},
// and larger t is the set of products of t such elements (it contains all
// products of fewer, since the identity is a member).
ErrorSet ad_error_set(std::size_t n, std::size_t t = 1);

// |ad_error_set(n, 1)| without enumerating: 1 + 3n + 2n(n-1).
std::size_t ad_single_error_count(std::size_t n);

enum class CertifyMode { Direct, ByDistance };

// Evidence that a code corrects t damping errors. Direct mode tests
// detectability of each element of ad_error_set(n, t) exhaustively;
// ByDistance establishes effective distance >= 2t+1, which is sufficient
// (a direct certificate can exist without it).
struct Certificate {
  std::size_t t = 0;
  CertifyMode mode{};
  bool certified = false;
  std::optional<PauliString> counterexample;  // Direct failure witness
  std::optional<DistanceReport> distance;     // ByDistance evidence
  std::size_t errors_checked = 0;             // Direct set size
};

Certificate certify_t_code(const StabilizerCode& code, std::size_t t,
                           CertifyMode mode, const SearchOptions& opts = {});

std::string to_string(CertifyMode m);
CertifyMode certify_mode_from_string(const std::string& s);

}  // namespace adcode
