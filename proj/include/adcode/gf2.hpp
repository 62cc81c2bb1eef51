#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace adcode {

// Packed bit-vector over GF(2). Bit i lives in word i/64 at position i%64;
// tail bits above size() are kept zero so whole-word operations are safe.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_(word_count(n), 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= mask;
    else
      w_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool any() const;
  std::size_t popcount() const;

  // Index of the lowest set bit; size() if none.
  std::size_t first_set() const;

  // Ordering that reads bits from index 0 upward, 0 before 1.
  bool lex_less(const BitVec& o) const;

  bool operator==(const BitVec&) const = default;

  std::size_t num_words() const { return w_.size(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }
  const std::vector<std::uint64_t>& words() const { return w_; }

  std::size_t hash() const;

  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// popcount(a & b) mod 2; the GF(2) inner product.
bool dot_parity(const BitVec& a, const BitVec& b);

// popcount(a & b).
std::size_t popcount_and(const BitVec& a, const BitVec& b);

struct Gf2Matrix {
  std::size_t cols = 0;
  std::vector<BitVec> rows;
};

// Reduced row-echelon form over GF(2), maintained incrementally. Rows are kept
// fully reduced and sorted by pivot column, so two row spaces are equal iff
// their RowEchelon rows compare equal.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}
  explicit RowEchelon(const Gf2Matrix& m);

  // Reduces v against the current rows and inserts the remainder if nonzero.
  // Returns true if the rank grew.
  bool insert(BitVec v);

  bool contains(const BitVec& v) const { return !reduce(v).any(); }
  BitVec reduce(BitVec v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Gf2Matrix matrix() const { return Gf2Matrix{cols_, rows_}; }

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

// RREF of m and its rank; the row space is preserved.
std::pair<Gf2Matrix, std::size_t> rref(const Gf2Matrix& m);

// True iff v is a GF(2) linear combination of the rows of m.
bool in_rowspace(const Gf2Matrix& m, const BitVec& v);

// Canonical basis of {v : m v = 0}, one vector per free column of rref(m),
// in ascending free-column order.
std::vector<BitVec> nullspace(const Gf2Matrix& m);

}  // namespace adcode
