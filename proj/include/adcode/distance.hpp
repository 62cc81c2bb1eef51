#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "adcode/stabilizer.hpp"

namespace adcode {

enum class Metric { Hamming, Effective, Block };

// Uniform partition of the qubits into n_blocks contiguous blocks; the block
// metric counts the blocks an operator touches.
struct BlockLayout {
  std::size_t n_blocks = 0;
  std::size_t block_size = 0;
};

enum class SearchMethod { CentralizerEnumeration, WeightEnumeration };

struct SearchOptions {
  // Full centralizer enumeration (2^(n+k) vectors) is used when n+k stays at
  // or below this cap; otherwise candidates are enumerated in weight order.
  std::size_t centralizer_cap = 26;
  unsigned threads = 0;  // 0 = pick from hardware_concurrency
  std::optional<std::size_t> budget;
  std::optional<BlockLayout> layout;  // required for Metric::Block
  // Weight-ordered search without a budget aborts past this many candidates.
  std::uint64_t max_candidates = std::uint64_t(1) << 31;
};

// Exact minimum weight over C(S)\S under the chosen metric. value/witness are
// empty iff a budget was given and every weight <= budget was ruled out.
// Results are deterministic: ties are broken toward the lexicographically
// smallest witness, independent of strategy and thread count.
struct DistanceReport {
  Metric metric{};
  SearchMethod method{};
  std::optional<std::size_t> value;
  std::optional<PauliString> witness;
  std::optional<std::size_t> budget;

  bool exceeded_budget() const { return !value.has_value(); }
};

DistanceReport min_distance(const StabilizerCode& code, Metric metric,
                            const SearchOptions& opts = {});

std::size_t metric_weight(const PauliString& p, Metric metric,
                          const std::optional<BlockLayout>& layout = {});

std::string to_string(Metric m);
std::string to_string(SearchMethod m);
Metric metric_from_string(const std::string& s);

}  // namespace adcode
