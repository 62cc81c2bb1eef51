#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adcode/concat.hpp"

namespace adcode {

// Registry of built-in codes:
//   five_one_three   [[5,1]] with Hamming distance 3
//   four_two_two     [[4,2]] with generators XXXX, ZZZZ
//   eight_three_css  [[8,3]] CSS code with effective distance 4
//   qr:<r>           the [[r, r-1]] even-weight code, with logicals
StabilizerCode builtin_code(const std::string& name);

// Block structure for built-ins usable as outer codes (one qubit per block).
std::optional<BlockCode> builtin_block_code(const std::string& name);

std::vector<std::string> builtin_names();

struct QmdsParams {
  std::size_t n = 0, k = 0, d = 0, q = 0;
};

// Result of the existence check; rejection names the violated bound.
struct QmdsResult {
  std::optional<QmdsParams> params;
  std::string rejection;
  bool ok() const { return params.has_value(); }
};

// Parameters [[n, n-2t, t+1]]_q of a distance-optimal qudit code meeting
// k + 2d = n + 2, admitted when d <= q+1 and n <= q^2+1 (plus the known
// length-(q^2+2), d=4 family); q must be a power of two.
QmdsResult qmds_params(std::size_t q, std::size_t t, std::size_t n);

struct OuterParams {
  std::size_t n = 0, k = 0, delta = 0, q = 0;
};

// Concatenation arithmetic with the inner [[r, r-1]] even-weight code applied
// to each outer code: (rn-1, (r-1)k, 2*delta-1), t = delta-1. Outer qudit
// dimension must equal 2^(r-1).
std::vector<CodeParams> table_rows(std::span<const OuterParams> outer,
                                   std::size_t r);

// One transcribed row of the published parameter tables. d_lb is the
// published reference distance of the best known comparable stabilizer code;
// it is echoed, never recomputed.
struct TableRow {
  std::size_t t = 0;
  std::size_t n_outer = 0, k_outer = 0, delta = 0, q = 0;
  std::size_t n = 0, k = 0, d_e = 0;
  std::size_t d_lb = 0;
};

// Fixture line format: `t n_outer k_outer delta q -> n k de dlb`.
std::vector<TableRow> parse_table_fixture(std::istream& in);

// A name without a slash ("table1") resolves to <data-dir>/<name>.params,
// where the data dir comes from $ADCODE_DATA_DIR or the build-time default.
std::vector<TableRow> load_table_fixture(const std::string& name_or_path);

std::vector<std::string> fixture_names();

}  // namespace adcode
