#include "adcode/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adcode {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t parse_qr_size(const std::string& name) {
  std::size_t r = 0;
  try {
    std::size_t pos = 0;
    r = std::stoul(name.substr(3), &pos);
    if (pos != name.size() - 3) r = 0;
  } catch (const std::exception&) {
    r = 0;
  }
  if (r < 2) throw std::invalid_argument("bad code size in '" + name + "'");
  return r;
}

}  // namespace

StabilizerCode builtin_code(const std::string& name) {
  if (name.rfind("qr:", 0) == 0) return even_weight_code(parse_qr_size(name));
  if (name == "five_one_three")
    return code_from_strings(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  if (name == "four_two_two") return code_from_strings(4, {"XXXX", "ZZZZ"});
  if (name == "eight_three_css")
    return code_from_strings(8, {"ZZZZIIII", "ZZIIZZII", "ZIZIZIZI",
                                 "ZZZZZZZZ", "XXXXXXXX"});
  throw std::invalid_argument("unknown built-in code '" + name + "'");
}

std::optional<BlockCode> builtin_block_code(const std::string& name) {
  if (name == "five_one_three")
    return make_block_code(builtin_code(name), 5, 1, 3);
  if (name == "four_two_two")
    return make_block_code(builtin_code(name), 4, 1, 2);
  return std::nullopt;
}

std::vector<std::string> builtin_names() {
  return {"five_one_three", "four_two_two", "eight_three_css", "qr:<r>"};
}

QmdsResult qmds_params(std::size_t q, std::size_t t, std::size_t n) {
  if (!is_power_of_two(q) || q < 2)
    throw std::invalid_argument("qudit dimension must be a power of two");
  if (t == 0) throw std::invalid_argument("t must be positive");

  std::size_t d = t + 1;
  if (d > q + 1)
    return {std::nullopt, "d = " + std::to_string(d) + " > q+1 = " +
                              std::to_string(q + 1)};
  if (n < 2 * t)
    return {std::nullopt,
            "k = n-2t would be negative (n = " + std::to_string(n) + ")"};
  bool exception_family = (n == q * q + 2 && d == 4);
  if (n > q * q + 1 && !exception_family)
    return {std::nullopt, "n = " + std::to_string(n) + " > q^2+1 = " +
                              std::to_string(q * q + 1)};
  return {QmdsParams{n, n - 2 * t, d, q}, ""};
}

std::vector<CodeParams> table_rows(std::span<const OuterParams> outer,
                                   std::size_t r) {
  if (r < 2) throw std::invalid_argument("inner size r must be >= 2");
  std::size_t q = std::size_t(1) << (r - 1);
  std::vector<CodeParams> rows;
  rows.reserve(outer.size());
  for (const OuterParams& o : outer) {
    if (o.q != q)
      throw std::invalid_argument(
          "outer qudit dimension " + std::to_string(o.q) +
          " does not match 2^(r-1) = " + std::to_string(q));
    rows.push_back(concat_params(r, r - 1, 2, o.n, o.k, o.delta,
                                 Variant::FirstBlockTrivial,
                                 Provenance::Arithmetic));
  }
  return rows;
}

std::vector<TableRow> parse_table_fixture(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    TableRow r;
    std::string arrow;
    if (!(ss >> r.t)) continue;  // blank line
    if (!(ss >> r.n_outer >> r.k_outer >> r.delta >> r.q >> arrow >> r.n >>
          r.k >> r.d_e >> r.d_lb) ||
        arrow != "->")
      throw std::runtime_error("malformed fixture row at line " +
                               std::to_string(lineno));
    rows.push_back(r);
  }
  return rows;
}

namespace {

std::string resolve_fixture_path(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  if (name_or_path.find('/') != std::string::npos || fs::exists(name_or_path))
    return name_or_path;
  std::string dir;
  if (const char* env = std::getenv("ADCODE_DATA_DIR"))
    dir = env;
#ifdef ADCODE_DATA_DIR
  if (dir.empty()) dir = ADCODE_DATA_DIR;
#endif
  if (dir.empty()) dir = "data";
  return dir + "/" + name_or_path + ".params";
}

}  // namespace

std::vector<TableRow> load_table_fixture(const std::string& name_or_path) {
  std::string path = resolve_fixture_path(name_or_path);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file '" + path + "'");
  return parse_table_fixture(in);
}

std::vector<std::string> fixture_names() { return {"table1", "table2", "table3"}; }

}  // namespace adcode
