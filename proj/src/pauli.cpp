#include "adcode/pauli.hpp"

#include <stdexcept>

namespace adcode {

PauliString::PauliString(BitVec x, BitVec z)
    : n_(x.size()), x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size())
    throw std::invalid_argument("PauliString: X and Z bit-vector lengths differ");
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  PauliString p(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'I':
        break;
      case 'X':
        p.x_.set(i, true);
        break;
      case 'Y':
        p.x_.set(i, true);
        p.z_.set(i, true);
        break;
      case 'Z':
        p.z_.set(i, true);
        break;
      default:
        throw std::invalid_argument("invalid Pauli character '" +
                                    std::string(1, text[i]) + "' at position " +
                                    std::to_string(i));
    }
  }
  return p;
}

std::string PauliString::str() const {
  std::string s(n_, 'I');
  for (std::size_t i = 0; i < n_; ++i) s[i] = at(i);
  return s;
}

char PauliString::at(std::size_t i) const {
  static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
  return table[(x_.get(i) ? 1 : 0) | (z_.get(i) ? 2 : 0)];
}

void PauliString::set(std::size_t i, char pauli) {
  switch (pauli) {
    case 'I':
      x_.set(i, false);
      z_.set(i, false);
      break;
    case 'X':
      x_.set(i, true);
      z_.set(i, false);
      break;
    case 'Y':
      x_.set(i, true);
      z_.set(i, true);
      break;
    case 'Z':
      x_.set(i, false);
      z_.set(i, true);
      break;
    default:
      throw std::invalid_argument("invalid Pauli character");
  }
}

std::size_t PauliString::hamming_weight() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < x_.num_words(); ++i)
    c += std::popcount(x_.word(i) | z_.word(i));
  return c;
}

std::size_t PauliString::effective_weight() const {
  // |X| + |Y| + 2|Z|  =  popcount(x) + 2 (popcount(z) - popcount(x & z))
  return x_.popcount() + 2 * (z_.popcount() - popcount_and(x_, z_));
}

bool PauliString::commutes_with(const PauliString& o) const {
  if (o.n_ != n_) throw std::invalid_argument("Pauli length mismatch");
  return !(dot_parity(x_, o.z_) ^ dot_parity(z_, o.x_));
}

PauliString& PauliString::operator*=(const PauliString& o) {
  if (o.n_ != n_) throw std::invalid_argument("Pauli length mismatch");
  x_ ^= o.x_;
  z_ ^= o.z_;
  return *this;
}

BitVec PauliString::symplectic() const {
  BitVec v(2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x_.get(i)) v.set(i, true);
    if (z_.get(i)) v.set(n_ + i, true);
  }
  return v;
}

PauliString PauliString::from_symplectic(const BitVec& v) {
  if (v.size() % 2 != 0)
    throw std::invalid_argument("symplectic vector length must be even");
  std::size_t n = v.size() / 2;
  PauliString p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v.get(i)) p.x_.set(i, true);
    if (v.get(n + i)) p.z_.set(i, true);
  }
  return p;
}

PauliString PauliString::slice(std::size_t offset, std::size_t len) const {
  if (offset + len > n_) throw std::out_of_range("Pauli slice out of range");
  PauliString p(len);
  for (std::size_t i = 0; i < len; ++i) {
    p.x_.set(i, x_.get(offset + i));
    p.z_.set(i, z_.get(offset + i));
  }
  return p;
}

void PauliString::embed(const PauliString& sub, std::size_t offset) {
  if (offset + sub.n_ > n_) throw std::out_of_range("Pauli embed out of range");
  for (std::size_t i = 0; i < sub.n_; ++i) {
    x_.set(offset + i, sub.x_.get(i));
    z_.set(offset + i, sub.z_.get(i));
  }
}

PauliString PauliString::single(std::size_t n, std::size_t i, char pauli) {
  if (i >= n) throw std::out_of_range("qubit index out of range");
  PauliString p(n);
  p.set(i, pauli);
  return p;
}

bool PauliString::lex_less(const PauliString& o) const {
  if (x_ == o.x_) return z_.lex_less(o.z_);
  return x_.lex_less(o.x_);
}

}  // namespace adcode
