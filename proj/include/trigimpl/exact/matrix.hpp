#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/multipoly.hpp"
#include "trigimpl/exact/rational.hpp"
#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

/// Row-major dense matrix over an arbitrary commutative ring.
template <class Ring>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Ring& fill = Ring())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Ring& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Ring& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const Ring&>()))> {
    Matrix<decltype(f(std::declval<const Ring&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Ring> data_;
};

// Ring glue used by the fraction-free elimination.
inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_zero(const Integer& x) { return x == 0; }
inline bool ring_is_zero(const ZPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const QPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const MultiPoly& x) { return x.is_zero(); }

inline Rational ring_divide_exact(const Rational& a, const Rational& b) { return a / b; }
inline Integer ring_divide_exact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline ZPoly ring_divide_exact(const ZPoly& a, const ZPoly& b) { return divide_exact(a, b); }
inline QPoly ring_divide_exact(const QPoly& a, const QPoly& b) { return divide_exact(a, b); }
inline MultiPoly ring_divide_exact(const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); }

/// Determinant by Bareiss fraction-free elimination. Every intermediate
/// entry is a minor of the input, and each division is exact, so entries
/// never leave the ring. Row swaps pick the first nonzero pivot below the
/// diagonal; the sign is tracked.
template <class Ring>
Ring bareiss_determinant(Matrix<Ring> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw MathError("determinant of a non-square matrix");
  if (n == 0) throw MathError("determinant of an empty matrix");
  bool negate = false;
  std::optional<Ring> previous;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(m(k, k))) {
      std::size_t pivot = k + 1;
      while (pivot < n && ring_is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return m(k, k);  // zero column
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    const Ring& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Ring& a_ik = m(i, k);
      const bool row_zero = ring_is_zero(a_ik);
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring v = p * m(i, j);
        if (!row_zero && !ring_is_zero(m(k, j))) v = v - a_ik * m(k, j);
        if (previous && !ring_is_zero(v)) v = ring_divide_exact(v, *previous);
        m(i, j) = std::move(v);
      }
    }
    previous = m(k, k);
  }
  Ring det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace trigimpl
