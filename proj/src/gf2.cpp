#include "adcode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace adcode {

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.n_ != n_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool BitVec::any() const {
  for (std::uint64_t w : w_)
    if (w) return true;
  return false;
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
  return n_;
}

bool BitVec::lex_less(const BitVec& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t diff = w_[i] ^ o.w_[i];
    if (diff) {
      // the first differing bit decides; 0 precedes 1
      return (o.w_[i] >> std::countr_zero(diff)) & 1u;
    }
  }
  return false;
}

std::size_t BitVec::hash() const {
  std::size_t h = 0xcbf29ce484222325ull ^ n_;
  for (std::uint64_t w : w_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ull;
  }
  return h;
}

bool dot_parity(const BitVec& a, const BitVec& b) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.num_words(); ++i) acc ^= a.word(i) & b.word(i);
  return std::popcount(acc) & 1u;
}

std::size_t popcount_and(const BitVec& a, const BitVec& b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.num_words(); ++i)
    c += std::popcount(a.word(i) & b.word(i));
  return c;
}

RowEchelon::RowEchelon(const Gf2Matrix& m) : cols_(m.cols) {
  for (const BitVec& r : m.rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged GF(2) matrix");
    insert(r);
  }
}

bool RowEchelon::insert(BitVec v) {
  v = reduce(std::move(v));
  std::size_t p = v.first_set();
  if (p == v.size()) return false;
  // clear the new pivot from existing rows, then keep rows pivot-sorted
  for (BitVec& r : rows_)
    if (r.get(p)) r ^= v;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

BitVec RowEchelon::reduce(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

std::pair<Gf2Matrix, std::size_t> rref(const Gf2Matrix& m) {
  RowEchelon e(m);
  Gf2Matrix out = e.matrix();
  // preserve the input row count; trailing zero rows mark dependencies
  while (out.rows.size() < m.rows.size()) out.rows.emplace_back(m.cols);
  return {std::move(out), e.rank()};
}

bool in_rowspace(const Gf2Matrix& m, const BitVec& v) {
  if (v.size() != m.cols) throw std::invalid_argument("vector/matrix width mismatch");
  return RowEchelon(m).contains(v);
}

std::vector<BitVec> nullspace(const Gf2Matrix& m) {
  RowEchelon e(m);
  const auto& pivots = e.pivots();
  std::vector<BitVec> basis;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < m.cols; ++col) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    BitVec v(m.cols);
    v.set(col, true);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (e.rows()[i].get(col)) v.set(pivots[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace adcode
