#pragma once

#include <map>
#include <utility>

#include "trigimpl/exact/rational.hpp"
#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

/// P_l^m(u) = s^m W(u) with s = sqrt(1 - u²), where
/// W = (-1)^{m+l} / (2^l l!) · d^{l+m}/du^{l+m} (1 - u²)^l.
QPoly legendre_W(int l, int m);

/// P_l^m(u) = s^parity · poly(u), parity = m mod 2.
struct LegendreForm {
  int parity = 0;
  QPoly poly;
};
LegendreForm legendre_assoc(int l, int m);

/// h(θ, φ) = Σ P_l^m(cos θ)(a_{l,m} cos mφ + b_{l,m} sin mφ).
class SphericalSupport {
 public:
  void set(int l, int m, Rational a, Rational b = 0);
  void set_a(int l, int m, Rational a);
  void set_b(int l, int m, Rational b);

  /// Nonzero entries keyed by (l, m).
  const std::map<std::pair<int, int>, std::pair<Rational, Rational>>& coefficients() const { return c_; }
  /// Largest l with a nonzero coefficient (-1 when empty).
  int degree() const;
  bool is_zero() const { return c_.empty(); }
  std::string to_string() const;

  friend bool operator==(const SphericalSupport&, const SphericalSupport&) = default;

 private:
  void check(int l, int m) const;
  void prune(const std::pair<int, int>& key);

  std::map<std::pair<int, int>, std::pair<Rational, Rational>> c_;
};

}  // namespace trigimpl
