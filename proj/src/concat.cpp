#include "adcode/concat.hpp"

#include <stdexcept>

namespace adcode {

BlockCode make_block_code(StabilizerCode code, std::size_t n_blocks,
                          std::size_t block_size, std::size_t delta,
                          const SearchOptions& opts) {
  if (n_blocks == 0 || block_size == 0)
    throw std::invalid_argument("block structure must be non-empty");
  if (n_blocks * block_size != code.n())
    throw std::invalid_argument("block structure does not cover the code: " +
                                std::to_string(n_blocks) + " x " +
                                std::to_string(block_size) + " != " +
                                std::to_string(code.n()));
  if (code.k() % block_size != 0)
    throw std::invalid_argument(
        "k = " + std::to_string(code.k()) +
        " is not a multiple of the block size; not a qudit expansion");
  if (delta == 0 || delta > n_blocks)
    throw std::invalid_argument("block distance must be in [1, n_blocks]");

  BlockCode bc{std::move(code), n_blocks, block_size, delta, false};
  if (bc.code.k() > 0 && bc.code.n() + bc.code.k() <= opts.centralizer_cap) {
    SearchOptions verify = opts;
    verify.layout = bc.layout();
    verify.budget.reset();
    DistanceReport rep = min_distance(bc.code, Metric::Block, verify);
    if (*rep.value != delta)
      throw std::invalid_argument("declared block distance " +
                                  std::to_string(delta) +
                                  " but enumeration gives " +
                                  std::to_string(*rep.value));
    bc.delta_verified = true;
  }
  return bc;
}

StabilizerCode even_weight_code(std::size_t r) {
  if (r < 2) throw std::invalid_argument("even-weight code needs r >= 2");
  PauliString all_z(r);
  for (std::size_t i = 0; i < r; ++i) all_z.set(i, 'Z');

  std::vector<PauliString> lx, lz;
  for (std::size_t j = 0; j + 1 < r; ++j) {
    PauliString x(r);
    x.set(j, 'X');
    x.set(r - 1, 'X');
    lx.push_back(std::move(x));
    lz.push_back(PauliString::single(r, j, 'Z'));
  }
  return StabilizerCode::create(r, {all_z}, std::move(lx), std::move(lz));
}

PauliString logical_image(const StabilizerCode& inner,
                          const PauliString& block_pauli) {
  if (!inner.has_logicals() || inner.k() == 0)
    throw std::invalid_argument("inner code has no logical operators");
  if (block_pauli.num_qubits() != inner.k())
    throw std::invalid_argument("block operator length " +
                                std::to_string(block_pauli.num_qubits()) +
                                " != inner logical count " +
                                std::to_string(inner.k()));
  PauliString out(inner.n());
  for (std::size_t j = 0; j < inner.k(); ++j) {
    if (block_pauli.x_bit(j)) out *= inner.logical_x()[j];
    if (block_pauli.z_bit(j)) out *= inner.logical_z()[j];
  }
  return out;
}

StabilizerCode concatenate(const ConcatSpec& spec) {
  const StabilizerCode& inner = spec.inner;
  const BlockCode& outer = spec.outer;
  if (inner.k() == 0 || !inner.has_logicals())
    throw std::invalid_argument("inner code must provide logical operators");
  if (outer.block_size != inner.k())
    throw std::invalid_argument("outer block size " +
                                std::to_string(outer.block_size) +
                                " != inner logical count " +
                                std::to_string(inner.k()));

  const std::size_t n1 = inner.n();
  const std::size_t k1 = inner.k();
  const std::size_t n2 = outer.n_blocks;
  const bool trivial_first = spec.variant == Variant::FirstBlockTrivial;

  std::vector<std::size_t> offset(n2);
  std::size_t total = 0;
  for (std::size_t j = 0; j < n2; ++j) {
    offset[j] = total;
    total += (trivial_first && j == 0) ? k1 : n1;
  }

  std::vector<PauliString> gens;
  for (const PauliString& g : outer.code.generators()) {
    PauliString p(total);
    for (std::size_t j = 0; j < n2; ++j) {
      PauliString sub = g.slice(j * k1, k1);
      if (trivial_first && j == 0)
        p.embed(sub, offset[j]);
      else
        p.embed(logical_image(inner, sub), offset[j]);
    }
    gens.push_back(std::move(p));
  }
  for (std::size_t j = 0; j < n2; ++j) {
    if (trivial_first && j == 0) continue;
    for (const PauliString& g : inner.generators()) {
      PauliString p(total);
      p.embed(g, offset[j]);
      gens.push_back(std::move(p));
    }
  }

  StabilizerCode result = StabilizerCode::create(total, std::move(gens));
  std::size_t expected_k = k1 * outer.k_qudits();
  if (result.k() != expected_k)
    throw std::logic_error("concatenation produced k = " +
                           std::to_string(result.k()) + ", expected " +
                           std::to_string(expected_k));
  return result;
}

CodeParams concat_params(std::size_t n1, std::size_t k1, std::size_t inner_de,
                         std::size_t n2, std::size_t k2, std::size_t delta,
                         Variant variant, Provenance provenance) {
  if (n1 == 0 || k1 == 0 || inner_de == 0 || n2 == 0 || delta == 0)
    throw std::invalid_argument("concatenation parameters must be positive");
  CodeParams p;
  if (variant == Variant::Full) {
    p.n = n1 * n2;
    p.d_e_bound = inner_de * delta;
  } else {
    p.n = n1 * (n2 - 1) + k1;
    p.d_e_bound = inner_de * (delta - 1) + 1;
  }
  p.k = k1 * k2;
  p.t = (p.d_e_bound - 1) / 2;
  p.provenance = provenance;
  return p;
}

CodeParams concat_params(const ConcatSpec& spec, std::size_t inner_de) {
  CodeParams p = concat_params(spec.inner.n(), spec.inner.k(), inner_de,
                               spec.outer.n_blocks, spec.outer.k_qudits(),
                               spec.outer.delta, spec.variant,
                               Provenance::Constructed);
  p.conditional_on_delta = !spec.outer.delta_verified;
  return p;
}

std::string to_string(Variant v) {
  return v == Variant::Full ? "full" : "first-trivial";
}

Variant variant_from_string(const std::string& s) {
  if (s == "full") return Variant::Full;
  if (s == "first-trivial" || s == "first_block_trivial")
    return Variant::FirstBlockTrivial;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Constructed:
      return "constructed";
    case Provenance::Arithmetic:
      return "arithmetic";
    case Provenance::Declared:
      return "declared";
  }
  return "?";
}

}  // namespace adcode
