#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "vko/errors.hpp"

namespace vko {

// Dense bit-packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= bit; else w_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void xor_with(const BitVector& o) {
    if (o.n_ != n_) throw input_error("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  bool is_zero() const {
    for (std::uint64_t w : w_) if (w) return false;
    return true;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  friend class BitMatrix;
  friend BitVector apply(const BitMatrix&, const BitVector&);
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Dense row-major bit-packed matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t bit = std::uint64_t(1) << (c & 63);
    if (v) w_[r * stride_ + (c >> 6)] |= bit;
    else w_[r * stride_ + (c >> 6)] &= ~bit;
  }

  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < stride_; ++i)
      w_[dst * stride_ + i] ^= w_[src * stride_ + i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < stride_; ++i)
      std::swap(w_[a * stride_ + i], w_[b * stride_ + i]);
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  // Column weight (number of ones) of column c.
  std::size_t column_weight(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r) n += get(r, c);
    return n;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  friend int rank(BitMatrix);
  friend BitVector apply(const BitMatrix&, const BitVector&);
  friend std::optional<BitVector> solve_in_image(const BitMatrix&, const BitVector&);

  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<std::uint64_t> w_;
};

// GF(2) rank by forward elimination, first-nonzero pivots.
inline int rank(BitMatrix a) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols_ && pr < a.rows_; ++c) {
    std::size_t pivot = pr;
    while (pivot < a.rows_ && !a.get(pivot, c)) ++pivot;
    if (pivot == a.rows_) continue;
    a.swap_rows(pr, pivot);
    for (std::size_t r = pr + 1; r < a.rows_; ++r)
      if (a.get(r, c)) a.xor_row(r, pr);
    ++pr;
  }
  return static_cast<int>(pr);
}

// Matrix-vector product over GF(2).
inline BitVector apply(const BitMatrix& a, const BitVector& x) {
  if (x.size() != a.cols_) throw input_error("apply: vector length != matrix cols");
  BitVector out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.stride_; ++i) acc ^= a.w_[r * a.stride_ + i] & x.w_[i];
    out.set(r, std::popcount(acc) & 1);
  }
  return out;
}

// Solves A x = b over GF(2). Returns a solution (free variables zero,
// deterministic lowest-index pivots) or nullopt when b is not in the image.
inline std::optional<BitVector> solve_in_image(const BitMatrix& a, const BitVector& b) {
  if (b.size() != a.rows_) throw input_error("solve_in_image: rhs length != matrix rows");
  BitMatrix m = a;
  BitVector rhs = b;
  std::vector<std::size_t> pivot_col;
  pivot_col.reserve(std::min(m.rows_, m.cols_));

  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols_ && pr < m.rows_; ++c) {
    std::size_t pivot = pr;
    while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows_) continue;
    m.swap_rows(pr, pivot);
    const bool bp = rhs.get(pr), bq = rhs.get(pivot);
    rhs.set(pr, bq); rhs.set(pivot, bp);
    for (std::size_t r = 0; r < m.rows_; ++r) {
      if (r != pr && m.get(r, c)) {
        m.xor_row(r, pr);
        if (rhs.get(pr)) rhs.flip(r);
      }
    }
    pivot_col.push_back(c);
    ++pr;
  }
  for (std::size_t r = pr; r < m.rows_; ++r)
    if (rhs.get(r)) return std::nullopt;

  BitVector x(m.cols_);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    if (rhs.get(i)) x.set(pivot_col[i], true);
  return x;
}

}  // namespace vko
