#include "adcode/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adcode {

namespace {

void check_logical_pairs(std::size_t n, std::size_t k,
                         const std::vector<PauliString>& gens,
                         const std::vector<PauliString>& lx,
                         const std::vector<PauliString>& lz) {
  if (lx.size() != k || lz.size() != k)
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " logical pairs, got " + std::to_string(lx.size()) +
                                "/" + std::to_string(lz.size()));
  for (std::size_t i = 0; i < k; ++i)
    if (lx[i].num_qubits() != n || lz[i].num_qubits() != n)
      throw std::invalid_argument("logical operator length mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    for (const PauliString& g : gens) {
      if (!lx[i].commutes_with(g) || !lz[i].commutes_with(g))
        throw std::invalid_argument("logical pair " + std::to_string(i) +
                                    " does not commute with the stabilizer");
    }
    for (std::size_t j = 0; j < k; ++j) {
      bool want_anti = (i == j);
      if (lx[i].commutes_with(lz[j]) == want_anti)
        throw std::invalid_argument("logical X" + std::to_string(i) + "/Z" +
                                    std::to_string(j) + " commutation is wrong");
      if (j > i) {
        if (!lx[i].commutes_with(lx[j]) || !lz[i].commutes_with(lz[j]))
          throw std::invalid_argument("logical operators " + std::to_string(i) +
                                      " and " + std::to_string(j) +
                                      " of the same type anticommute");
      }
    }
  }
}

}  // namespace

StabilizerCode::StabilizerCode(std::size_t n, std::size_t k,
                               std::vector<PauliString> gens,
                               std::vector<PauliString> lx,
                               std::vector<PauliString> lz, RowEchelon space)
    : n_(n),
      k_(k),
      generators_(std::move(gens)),
      logical_x_(std::move(lx)),
      logical_z_(std::move(lz)),
      stab_space_(std::move(space)) {}

StabilizerCode StabilizerCode::create(std::size_t n,
                                      std::vector<PauliString> generators) {
  return create(n, std::move(generators), {}, {});
}

StabilizerCode StabilizerCode::create(std::size_t n,
                                      std::vector<PauliString> generators,
                                      std::vector<PauliString> logical_x,
                                      std::vector<PauliString> logical_z) {
  if (n == 0) throw std::invalid_argument("code length must be positive");
  if (generators.size() > n)
    throw std::invalid_argument("more generators than qubits");
  for (const PauliString& g : generators)
    if (g.num_qubits() != n)
      throw std::invalid_argument("generator length differs from code length");

  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].commutes_with(generators[j]))
        throw std::invalid_argument("generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " anticommute");

  RowEchelon space(2 * n);
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!space.insert(generators[i].symplectic()))
      throw std::invalid_argument("generator " + std::to_string(i) +
                                  " is dependent on the others");

  std::size_t k = n - space.rank();
  if (!logical_x.empty() || !logical_z.empty())
    check_logical_pairs(n, k, generators, logical_x, logical_z);

  return StabilizerCode(n, k, std::move(generators), std::move(logical_x),
                        std::move(logical_z), std::move(space));
}

bool StabilizerCode::in_stabilizer(const PauliString& p) const {
  if (p.num_qubits() != n_) throw std::invalid_argument("Pauli length mismatch");
  return stab_space_.contains(p.symplectic());
}

bool StabilizerCode::in_centralizer(const PauliString& p) const {
  for (const PauliString& g : generators_)
    if (!p.commutes_with(g)) return false;
  return true;
}

bool StabilizerCode::is_detectable(const PauliString& e) const {
  if (!in_centralizer(e)) return true;  // anticommutes: nonzero syndrome
  return in_stabilizer(e);              // acts trivially on the code space
}

CentralizerBasis centralizer_basis(const StabilizerCode& code) {
  const std::size_t n = code.n();
  // v commutes with g iff (z_g|x_g) . v = 0, so C(S) is the nullspace of the
  // swapped generator matrix.
  Gf2Matrix constraints{2 * n, {}};
  for (const PauliString& g : code.generators()) {
    BitVec row(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.z_bit(i)) row.set(i, true);
      if (g.x_bit(i)) row.set(n + i, true);
    }
    constraints.rows.push_back(std::move(row));
  }

  CentralizerBasis basis;
  for (const BitVec& r : code.stabilizer_space().rows())
    basis.stabilizer.push_back(PauliString::from_symplectic(r));

  RowEchelon grown = code.stabilizer_space();
  for (const BitVec& v : nullspace(constraints))
    if (grown.insert(v)) basis.complement.push_back(PauliString::from_symplectic(v));

  return basis;
}

StabilizerCode StabilizerCode::with_logicals() const {
  if (k_ == 0 || has_logicals()) return *this;

  // Symplectic Gram-Schmidt over the complement of S in C(S): repeatedly take
  // the first remaining vector, find its first anticommuting partner, and
  // strip both from the rest. The complement basis is canonical (it depends
  // only on the row space of the generators), so the result is deterministic.
  std::vector<PauliString> rem = centralizer_basis(*this).complement;
  std::vector<PauliString> lx, lz;
  while (!rem.empty()) {
    PauliString v = rem.front();
    rem.erase(rem.begin());
    std::size_t partner = rem.size();
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (!v.commutes_with(rem[j])) {
        partner = j;
        break;
      }
    }
    if (partner == rem.size())
      throw std::logic_error("symplectic completion failed to pair a vector");
    PauliString w = rem[partner];
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(partner));
    for (PauliString& u : rem) {
      if (!u.commutes_with(w)) u *= v;
      if (!u.commutes_with(v)) u *= w;
    }
    lx.push_back(std::move(v));
    lz.push_back(std::move(w));
  }
  return create(n_, generators_, std::move(lx), std::move(lz));
}

StabilizerCode code_from_strings(std::size_t n,
                                 const std::vector<std::string>& generators) {
  std::vector<PauliString> gens;
  gens.reserve(generators.size());
  for (const std::string& s : generators) gens.push_back(PauliString::parse(s));
  return StabilizerCode::create(n, std::move(gens));
}

std::optional<PauliString> find_undetectable(const StabilizerCode& code,
                                             std::span<const PauliString> errors) {
  for (const PauliString& e : errors)
    if (!code.is_detectable(e)) return e;
  return std::nullopt;
}

}  // namespace adcode
