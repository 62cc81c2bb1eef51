#include "adcode/distance.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

namespace adcode {

namespace {

std::size_t block_weight(const PauliString& p, const BlockLayout& layout) {
  std::size_t touched = 0;
  for (std::size_t b = 0; b < layout.n_blocks; ++b) {
    std::size_t off = b * layout.block_size;
    for (std::size_t i = 0; i < layout.block_size; ++i) {
      if (p.x_bit(off + i) || p.z_bit(off + i)) {
        ++touched;
        break;
      }
    }
  }
  return touched;
}

struct Best {
  bool found = false;
  std::size_t weight = 0;
  PauliString witness;

  void offer(std::size_t w, const PauliString& p) {
    if (!found || w < weight || (w == weight && p.lex_less(witness))) {
      found = true;
      weight = w;
      witness = p;
    }
  }

  void merge(const Best& o) {
    if (o.found) offer(o.weight, o.witness);
  }
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

// --- full centralizer enumeration -----------------------------------------
//
// Walks all 2^(n+k) elements of C(S) in Gray-code order over a basis laid out
// as [complement of S | stabilizer rows]; masks whose complement part is zero
// are elements of S and are skipped. Each chunk of the mask range is walked
// independently, so the scan parallelizes without affecting the result.

DistanceReport centralizer_search(const StabilizerCode& code, Metric metric,
                                  const SearchOptions& opts) {
  CentralizerBasis cb = centralizer_basis(code);
  std::vector<PauliString> basis = cb.complement;
  basis.insert(basis.end(), cb.stabilizer.begin(), cb.stabilizer.end());

  const std::size_t m = basis.size();  // n + k
  const std::uint64_t total = std::uint64_t(1) << m;
  const std::uint64_t comp_mask = (std::uint64_t(1) << cb.complement.size()) - 1;

  auto walk = [&](std::uint64_t lo, std::uint64_t hi, Best& best) {
    PauliString cur(code.n());
    std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t b = 0; b < m; ++b)
      if ((g >> b) & 1u) cur *= basis[b];
    if (g & comp_mask) best.offer(metric_weight(cur, metric, opts.layout), cur);
    for (std::uint64_t mask = lo + 1; mask < hi; ++mask) {
      cur *= basis[static_cast<std::size_t>(std::countr_zero(mask))];
      g = mask ^ (mask >> 1);
      if (g & comp_mask) best.offer(metric_weight(cur, metric, opts.layout), cur);
    }
  };

  unsigned threads = resolve_threads(opts.threads);
  if (total < 4096 || threads == 1) {
    Best best;
    walk(1, total, best);
    if (!best.found) throw std::logic_error("centralizer scan found no logical");
    DistanceReport rep{metric, SearchMethod::CentralizerEnumeration,
                       best.weight, best.witness, opts.budget};
    if (opts.budget && best.weight > *opts.budget) {
      rep.value.reset();
      rep.witness.reset();
    }
    return rep;
  }

  std::vector<Best> partial(threads);
  std::vector<std::thread> pool;
  std::uint64_t span = (total - 1) / threads + 1;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = 1 + t * span;
    std::uint64_t hi = std::min<std::uint64_t>(lo + span, total);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, t] { walk(lo, hi, partial[t]); });
  }
  for (std::thread& th : pool) th.join();

  Best best;
  for (const Best& p : partial) best.merge(p);
  if (!best.found) throw std::logic_error("centralizer scan found no logical");
  DistanceReport rep{metric, SearchMethod::CentralizerEnumeration, best.weight,
                     best.witness, opts.budget};
  if (opts.budget && best.weight > *opts.budget) {
    rep.value.reset();
    rep.witness.reset();
  }
  return rep;
}

// --- weight-ordered enumeration --------------------------------------------

class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), k_(k) {}

  // Fills idx with the next k-subset of [0,n); false when exhausted.
  bool next(std::vector<std::size_t>& idx) {
    if (k_ > n_) return false;
    if (!started_) {
      started_ = true;
      idx.resize(k_);
      for (std::size_t i = 0; i < k_; ++i) idx[i] = i;
      return true;
    }
    std::size_t i = k_;
    while (i > 0) {
      --i;
      if (idx[i] != i + n_ - k_) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k_; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t n_, k_;
  bool started_ = false;
};

class ShellSearch {
 public:
  ShellSearch(const StabilizerCode& code, const SearchOptions& opts)
      : code_(code), opts_(opts), scratch_(code.n()) {}

  std::uint64_t candidates_seen() const { return seen_; }
  const Best& best() const { return best_; }

  // Scans every Pauli of the given metric weight; returns true if the shell
  // produced a witness (best() then holds the lexicographically smallest).
  bool scan(Metric metric, std::size_t w) {
    best_ = Best{};
    switch (metric) {
      case Metric::Hamming:
        scan_hamming(w);
        break;
      case Metric::Effective:
        scan_effective(w);
        break;
      case Metric::Block:
        scan_block(w);
        break;
    }
    return best_.found;
  }

 private:
  void consider() {
    ++seen_;
    if (!code_.in_centralizer(scratch_)) return;
    if (code_.in_stabilizer(scratch_)) return;
    best_.offer(0, scratch_);  // weight is constant within a shell
  }

  void scan_hamming(std::size_t w) {
    const std::size_t n = code_.n();
    if (w > n) return;
    static constexpr char letters[3] = {'X', 'Y', 'Z'};
    Combinations combs(n, w);
    std::vector<std::size_t> pos;
    while (combs.next(pos)) {
      std::vector<std::size_t> digit(w, 0);
      for (std::size_t i = 0; i < w; ++i) scratch_.set(pos[i], 'X');
      for (;;) {
        consider();
        std::size_t i = 0;
        while (i < w && digit[i] == 2) {
          digit[i] = 0;
          scratch_.set(pos[i], 'X');
          ++i;
        }
        if (i == w) break;
        ++digit[i];
        scratch_.set(pos[i], letters[digit[i]]);
      }
      for (std::size_t i = 0; i < w; ++i) scratch_.set(pos[i], 'I');
    }
  }

  void scan_effective(std::size_t w) {
    const std::size_t n = code_.n();
    // Exactly the weight-w shell: a X/Y factors plus b Z factors, a + 2b = w.
    for (std::size_t b = 0; b <= w / 2; ++b) {
      std::size_t a = w - 2 * b;
      if (a + b > n) continue;
      Combinations xy_combs(n, a);
      std::vector<std::size_t> xy;
      while (xy_combs.next(xy)) {
        std::vector<std::size_t> rest;
        rest.reserve(n - a);
        std::size_t next = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (next < a && xy[next] == i)
            ++next;
          else
            rest.push_back(i);
        }
        Combinations z_combs(rest.size(), b);
        std::vector<std::size_t> zsel;
        while (z_combs.next(zsel)) {
          for (std::size_t i = 0; i < a; ++i) scratch_.set(xy[i], 'X');
          for (std::size_t i = 0; i < b; ++i) scratch_.set(rest[zsel[i]], 'Z');
          // Gray walk over X<->Y choices on the a sites.
          consider();
          std::uint64_t patterns = std::uint64_t(1) << a;
          for (std::uint64_t p = 1; p < patterns; ++p) {
            std::size_t flip = static_cast<std::size_t>(std::countr_zero(p));
            scratch_.set(xy[flip], scratch_.at(xy[flip]) == 'X' ? 'Y' : 'X');
            consider();
          }
          for (std::size_t i = 0; i < a; ++i) scratch_.set(xy[i], 'I');
          for (std::size_t i = 0; i < b; ++i) scratch_.set(rest[zsel[i]], 'I');
        }
      }
    }
  }

  void scan_block(std::size_t w) {
    const BlockLayout& layout = *opts_.layout;
    const std::size_t bs = layout.block_size;
    const std::uint64_t patterns = (std::uint64_t(1) << (2 * bs)) - 1;
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    auto write_block = [&](std::size_t block, std::uint64_t pat) {
      std::size_t off = block * bs;
      for (std::size_t q = 0; q < bs; ++q)
        scratch_.set(off + q, table[(pat >> (2 * q)) & 3]);
    };
    Combinations combs(layout.n_blocks, w);
    std::vector<std::size_t> blocks;
    while (combs.next(blocks)) {
      std::vector<std::uint64_t> digit(w, 1);
      for (std::size_t i = 0; i < w; ++i) write_block(blocks[i], 1);
      for (;;) {
        consider();
        std::size_t i = 0;
        while (i < w && digit[i] == patterns) {
          digit[i] = 1;
          write_block(blocks[i], 1);
          ++i;
        }
        if (i == w) break;
        ++digit[i];
        write_block(blocks[i], digit[i]);
      }
      for (std::size_t i = 0; i < w; ++i) write_block(blocks[i], 0);
    }
  }

  const StabilizerCode& code_;
  const SearchOptions& opts_;
  PauliString scratch_;
  Best best_;
  std::uint64_t seen_ = 0;
};

DistanceReport weight_search(const StabilizerCode& code, Metric metric,
                             const SearchOptions& opts) {
  std::size_t max_w = 0;
  switch (metric) {
    case Metric::Hamming:
      max_w = code.n();
      break;
    case Metric::Effective:
      max_w = 2 * code.n();
      break;
    case Metric::Block:
      max_w = opts.layout->n_blocks;
      break;
  }
  std::size_t limit = opts.budget ? std::min(*opts.budget, max_w) : max_w;

  ShellSearch search(code, opts);
  for (std::size_t w = 1; w <= limit; ++w) {
    if (search.scan(metric, w))
      return DistanceReport{metric, SearchMethod::WeightEnumeration, w,
                            search.best().witness, opts.budget};
    if (!opts.budget && search.candidates_seen() > opts.max_candidates)
      throw std::runtime_error(
          "weight-ordered search too large at weight " + std::to_string(w) +
          "; rerun with a budget");
  }
  if (opts.budget)
    return DistanceReport{metric, SearchMethod::WeightEnumeration, std::nullopt,
                          std::nullopt, opts.budget};
  throw std::logic_error("exhausted weight shells without finding a logical");
}

}  // namespace

std::size_t metric_weight(const PauliString& p, Metric metric,
                          const std::optional<BlockLayout>& layout) {
  switch (metric) {
    case Metric::Hamming:
      return p.hamming_weight();
    case Metric::Effective:
      return p.effective_weight();
    case Metric::Block:
      if (!layout) throw std::invalid_argument("block metric needs a layout");
      return block_weight(p, *layout);
  }
  throw std::logic_error("bad metric");
}

DistanceReport min_distance(const StabilizerCode& code, Metric metric,
                            const SearchOptions& opts) {
  if (code.k() == 0)
    throw std::invalid_argument("distance is undefined for k = 0 (no logicals)");
  if (metric == Metric::Block) {
    if (!opts.layout) throw std::invalid_argument("block metric needs a layout");
    if (opts.layout->n_blocks * opts.layout->block_size != code.n())
      throw std::invalid_argument("block layout does not cover the code");
  }
  std::size_t m = code.n() + code.k();
  if (m <= opts.centralizer_cap && m <= 62)
    return centralizer_search(code, metric, opts);
  return weight_search(code, metric, opts);
}

std::string to_string(Metric m) {
  switch (m) {
    case Metric::Hamming:
      return "hamming";
    case Metric::Effective:
      return "effective";
    case Metric::Block:
      return "block";
  }
  return "?";
}

std::string to_string(SearchMethod m) {
  return m == SearchMethod::CentralizerEnumeration ? "centralizer_enumeration"
                                                   : "weight_enumeration";
}

Metric metric_from_string(const std::string& s) {
  if (s == "hamming") return Metric::Hamming;
  if (s == "effective") return Metric::Effective;
  if (s == "block") return Metric::Block;
  throw std::invalid_argument("unknown metric '" + s + "'");
}

}  // namespace adcode
