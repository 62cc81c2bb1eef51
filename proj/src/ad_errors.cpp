#include "adcode/ad_errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace adcode {

bool ErrorSet::contains(const PauliString& p) const {
  auto it = std::lower_bound(
      elements.begin(), elements.end(), p,
      [](const PauliString& a, const PauliString& b) { return a.lex_less(b); });
  return it != elements.end() && *it == p;
}

std::size_t ad_single_error_count(std::size_t n) {
  return 1 + 3 * n + 2 * n * (n - 1);
}

namespace {

std::vector<PauliString> single_damping_errors(std::size_t n) {
  std::vector<PauliString> out;
  out.push_back(PauliString(n));  // identity
  for (std::size_t i = 0; i < n; ++i)
    for (char p : {'X', 'Y', 'Z'}) out.push_back(PauliString::single(n, i, p));
  // both orderings of the mixed pairs, i.e. all {X,Y}x{X,Y} on distinct sites
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (char a : {'X', 'Y'}) {
        for (char b : {'X', 'Y'}) {
          PauliString p(n);
          p.set(i, a);
          p.set(j, b);
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

}  // namespace

ErrorSet ad_error_set(std::size_t n, std::size_t t) {
  if (n == 0) throw std::invalid_argument("error set needs n >= 1");
  if (t == 0) throw std::invalid_argument("error set needs t >= 1");

  std::vector<PauliString> base = single_damping_errors(n);
  std::unordered_set<PauliString, PauliHash> seen(base.begin(), base.end());

  for (std::size_t round = 2; round <= t; ++round) {
    std::vector<PauliString> current(seen.begin(), seen.end());
    for (const PauliString& e : current)
      for (const PauliString& f : base) seen.insert(e * f);
  }

  ErrorSet set;
  set.n = n;
  set.label = "A^" + std::to_string(t) + "(" + std::to_string(n) + ")";
  set.elements.assign(seen.begin(), seen.end());
  std::sort(set.elements.begin(), set.elements.end(),
            [](const PauliString& a, const PauliString& b) { return a.lex_less(b); });
  return set;
}

Certificate certify_t_code(const StabilizerCode& code, std::size_t t,
                           CertifyMode mode, const SearchOptions& opts) {
  if (t == 0) throw std::invalid_argument("certification needs t >= 1");
  Certificate cert;
  cert.t = t;
  cert.mode = mode;

  if (mode == CertifyMode::Direct) {
    ErrorSet errors = ad_error_set(code.n(), t);
    cert.errors_checked = errors.elements.size();
    cert.counterexample = find_undetectable(code, errors.elements);
    cert.certified = !cert.counterexample.has_value();
    return cert;
  }

  // Effective distance >= 2t+1 suffices. When the search falls back to
  // weight-ordered enumeration, shells above 2t are irrelevant, so cap them.
  SearchOptions bounded = opts;
  bounded.budget = 2 * t;
  if (code.n() + code.k() <= opts.centralizer_cap) bounded.budget.reset();
  DistanceReport rep = min_distance(code, Metric::Effective, bounded);
  cert.certified = rep.exceeded_budget() || *rep.value >= 2 * t + 1;
  cert.distance = std::move(rep);
  return cert;
}

std::string to_string(CertifyMode m) {
  return m == CertifyMode::Direct ? "direct" : "by_distance";
}

CertifyMode certify_mode_from_string(const std::string& s) {
  if (s == "direct") return CertifyMode::Direct;
  if (s == "by_distance" || s == "by-distance") return CertifyMode::ByDistance;
  throw std::invalid_argument("unknown certification mode '" + s + "'");
}

}  // namespace adcode
