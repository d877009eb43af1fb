#pragma once

#include <string>
#include <vector>

#include "trigimpl/exact/multipoly.hpp"
#include "trigimpl/exact/rational.hpp"
#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

/// p(θ) = a0 + Σ_{k=1..N} (a_k cos kθ + b_k sin kθ) with exact rational
/// coefficients. Trailing zero harmonics are trimmed, so degree() is the
/// largest k with a_k or b_k nonzero (0 for a constant).
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(Rational a0) : a0_(std::move(a0)) { a0_.canonicalize(); }

  static TrigPoly cosine(int k, Rational c = 1);
  static TrigPoly sine(int k, Rational c = 1);

  void set_a0(Rational v) {
    a0_ = std::move(v);
    a0_.canonicalize();
  }
  void set_cos(int k, Rational v);
  void set_sin(int k, Rational v);

  const Rational& a0() const { return a0_; }
  /// Zero for k outside 1..degree().
  Rational a(int k) const;
  Rational b(int k) const;
  int degree() const { return static_cast<int>(a_.size()); }

  bool is_zero() const { return a0_ == 0 && a_.empty(); }
  bool is_constant() const { return a_.empty(); }
  /// Indices k >= 1 with a_k or b_k nonzero, ascending.
  std::vector<int> spectrum() const;

  TrigPoly derivative() const;
  /// θ -> θ + π: harmonic k picks up (-1)^k.
  TrigPoly shifted_by_pi() const;

  /// Exact value at the angle whose unit vector is (c, s), c² + s² = 1.
  Rational value_at(const Rational& c, const Rational& s) const;
  double operator()(double theta) const;

  friend TrigPoly operator+(const TrigPoly& p, const TrigPoly& q);
  friend TrigPoly operator-(const TrigPoly& p, const TrigPoly& q);
  friend TrigPoly operator*(const Rational& c, const TrigPoly& p);
  friend bool operator==(const TrigPoly& p, const TrigPoly& q) = default;

  /// e.g. "1/2 + 1/16*cos(3θ) - 2/7*sin(5θ)".
  std::string to_string() const;

 private:
  void trim();

  Rational a0_;
  std::vector<Rational> a_;  // a_[k-1]
  std::vector<Rational> b_;
};

/// ρ = p + p''.
TrigPoly curvature_radius(const TrigPoly& p);

enum class Parity { has_even_harmonic, odd_only };
Parity parity_class(const TrigPoly& p);
const char* to_string(Parity p);

/// Tangent half-angle forms, t = tan(θ/2):
/// cos nθ = C_n(t)/(1+t²)^n and sin nθ = S_n(t)/(1+t²)^n.
ZPoly cheb_C_dense(int n);
ZPoly cheb_S_dense(int n);
/// Same polynomials in the single variable "t".
MultiPoly cheb_C(int n);
MultiPoly cheb_S(int n);

/// The univariate ring Q[t] used by the curve formulas.
const Variables& t_variables();

}  // namespace trigimpl
