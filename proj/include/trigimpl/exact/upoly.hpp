#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/multipoly.hpp"
#include "trigimpl/exact/rational.hpp"

namespace trigimpl {

/// Dense univariate polynomial, coefficients stored from the constant term
/// upwards with no trailing zeros. Used for the hot loops (determinants
/// over Z[t], univariate gcds, root isolation) where the sparse MultiPoly
/// would be wasteful.
template <class Coeff>
class UPoly {
 public:
  UPoly() = default;
  UPoly(Coeff constant) {  // NOLINT(implicit)
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(Coeff c, int degree) {
    if (c == 0) return {};
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0));
    v.back() = std::move(c);
    return UPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Coeff& lc() const {
    if (c_.empty()) throw MathError("zero polynomial");
    return c_.back();
  }
  Coeff coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Coeff(0);
  }
  const std::vector<Coeff>& coefficients() const { return c_; }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const Coeff& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend UPoly operator*(UPoly a, const Coeff& s) { return a *= s; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  template <class Value>
  Value operator()(const Value& x) const {
    Value r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Value(c_[i]);
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Coeff(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly pow(unsigned e) const {
    UPoly r(Coeff(1)), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using ZPoly = UPoly<Integer>;
using QPoly = UPoly<Rational>;

/// Quotient and remainder over Q.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Exact quotient in Z[t]; throws MathError when b does not divide a.
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);
QPoly divide_exact(const QPoly& a, const QPoly& b);

/// gcd of the coefficients (non-negative; 0 for the zero polynomial).
Integer content(const ZPoly& p);
/// p / content(p) with a positive leading coefficient.
ZPoly primitive_part(const ZPoly& p);
/// Primitive integer polynomial proportional to p.
ZPoly to_primitive_integer(const QPoly& p);
QPoly to_rational(const ZPoly& p);

/// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// gcd over Q, returned as a primitive integer polynomial mapped back to Q.
QPoly gcd(const QPoly& a, const QPoly& b);
/// Product of the distinct irreducible factors, primitive.
ZPoly square_free_part(const ZPoly& p);

/// Conversions between a MultiPoly that involves at most `var` and a dense
/// univariate polynomial.
QPoly to_upoly(const MultiPoly& p, std::size_t var);
MultiPoly to_multipoly(const QPoly& p, const Variables& vars, std::size_t var);

}  // namespace trigimpl
