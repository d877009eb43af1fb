#include "trigimpl/trig/trigpoly.hpp"

#include <cmath>

#include "trigimpl/errors.hpp"

namespace trigimpl {

namespace {

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer pow2(int e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

// (1 - t²)^e
ZPoly one_minus_t2(int e) { return ZPoly(std::vector<Integer>{1, 0, -1}).pow(static_cast<unsigned>(e)); }

void append_term(std::string& out, const Rational& c, const std::string& basis) {
  if (c == 0) return;
  Rational mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (basis.empty()) {
    out += to_string(mag);
  } else {
    if (mag != 1) out += to_string(mag) + "*";
    out += basis;
  }
}

}  // namespace

TrigPoly TrigPoly::cosine(int k, Rational c) {
  TrigPoly p;
  if (k == 0) {
    p.set_a0(std::move(c));
  } else {
    p.set_cos(k, std::move(c));
  }
  return p;
}

TrigPoly TrigPoly::sine(int k, Rational c) {
  TrigPoly p;
  p.set_sin(k, std::move(c));
  return p;
}

void TrigPoly::set_cos(int k, Rational v) {
  if (k < 1) throw MathError("harmonic index must be >= 1");
  if (static_cast<int>(a_.size()) < k) {
    a_.resize(static_cast<std::size_t>(k), Rational(0));
    b_.resize(static_cast<std::size_t>(k), Rational(0));
  }
  v.canonicalize();
  a_[static_cast<std::size_t>(k - 1)] = std::move(v);
  trim();
}

void TrigPoly::set_sin(int k, Rational v) {
  if (k < 1) throw MathError("harmonic index must be >= 1");
  if (static_cast<int>(b_.size()) < k) {
    a_.resize(static_cast<std::size_t>(k), Rational(0));
    b_.resize(static_cast<std::size_t>(k), Rational(0));
  }
  v.canonicalize();
  b_[static_cast<std::size_t>(k - 1)] = std::move(v);
  trim();
}

Rational TrigPoly::a(int k) const {
  if (k == 0) return a0_;
  return (k >= 1 && k <= degree()) ? a_[static_cast<std::size_t>(k - 1)] : Rational(0);
}

Rational TrigPoly::b(int k) const {
  return (k >= 1 && k <= degree()) ? b_[static_cast<std::size_t>(k - 1)] : Rational(0);
}

std::vector<int> TrigPoly::spectrum() const {
  std::vector<int> out;
  for (int k = 1; k <= degree(); ++k)
    if (a(k) != 0 || b(k) != 0) out.push_back(k);
  return out;
}

void TrigPoly::trim() {
  while (!a_.empty() && a_.back() == 0 && b_.back() == 0) {
    a_.pop_back();
    b_.pop_back();
  }
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly d;
  for (int k = 1; k <= degree(); ++k) {
    d.set_cos(k, Rational(k) * b(k));
    d.set_sin(k, Rational(-k) * a(k));
  }
  return d;
}

TrigPoly TrigPoly::shifted_by_pi() const {
  TrigPoly s(a0_);
  for (int k = 1; k <= degree(); ++k) {
    Rational sign = (k % 2 == 0) ? 1 : -1;
    s.set_cos(k, sign * a(k));
    s.set_sin(k, sign * b(k));
  }
  return s;
}

Rational TrigPoly::value_at(const Rational& c, const Rational& s) const {
  GaussianRational z(c, s), zk(Rational(1));
  Rational v = a0_;
  for (int k = 1; k <= degree(); ++k) {
    zk = zk * z;
    v += a(k) * zk.re() + b(k) * zk.im();
  }
  return v;
}

double TrigPoly::operator()(double theta) const {
  double v = a0_.get_d();
  for (int k = 1; k <= degree(); ++k) v += a(k).get_d() * std::cos(k * theta) + b(k).get_d() * std::sin(k * theta);
  return v;
}

TrigPoly operator+(const TrigPoly& p, const TrigPoly& q) {
  TrigPoly r(p.a0() + q.a0());
  const int n = std::max(p.degree(), q.degree());
  for (int k = 1; k <= n; ++k) {
    r.set_cos(k, p.a(k) + q.a(k));
    r.set_sin(k, p.b(k) + q.b(k));
  }
  return r;
}

TrigPoly operator-(const TrigPoly& p, const TrigPoly& q) { return p + Rational(-1) * q; }

TrigPoly operator*(const Rational& c, const TrigPoly& p) {
  TrigPoly r(c * p.a0());
  for (int k = 1; k <= p.degree(); ++k) {
    r.set_cos(k, c * p.a(k));
    r.set_sin(k, c * p.b(k));
  }
  return r;
}

std::string TrigPoly::to_string() const {
  std::string out;
  append_term(out, a0_, "");
  for (int k = 1; k <= degree(); ++k) {
    const std::string arg = k == 1 ? "θ" : std::to_string(k) + "θ";
    append_term(out, a(k), "cos(" + arg + ")");
    append_term(out, b(k), "sin(" + arg + ")");
  }
  return out.empty() ? "0" : out;
}

TrigPoly curvature_radius(const TrigPoly& p) {
  TrigPoly r(p.a0());
  for (int k = 1; k <= p.degree(); ++k) {
    Rational f(1 - k * k);
    r.set_cos(k, f * p.a(k));
    r.set_sin(k, f * p.b(k));
  }
  return r;
}

Parity parity_class(const TrigPoly& p) {
  if (p.a0() != 0) return Parity::has_even_harmonic;
  for (int k = 2; k <= p.degree(); k += 2)
    if (p.a(k) != 0 || p.b(k) != 0) return Parity::has_even_harmonic;
  return Parity::odd_only;
}

const char* to_string(Parity p) { return p == Parity::odd_only ? "odd_only" : "has_even_harmonic"; }

ZPoly cheb_C_dense(int n) {
  if (n < 0) throw MathError("negative Chebyshev index");
  ZPoly r;
  for (int k = 0; 2 * k <= n; ++k) {
    Integer c = binomial(n, 2 * k) * pow2(2 * k);
    if (k % 2) c = -c;
    r += ZPoly::monomial(c, 2 * k) * one_minus_t2(n - 2 * k);
  }
  return r;
}

ZPoly cheb_S_dense(int n) {
  if (n < 0) throw MathError("negative Chebyshev index");
  ZPoly r;
  for (int k = 0; 2 * k + 1 <= n; ++k) {
    Integer c = binomial(n, 2 * k + 1) * pow2(2 * k + 1);
    if (k % 2) c = -c;
    r += ZPoly::monomial(c, 2 * k + 1) * one_minus_t2(n - 1 - 2 * k);
  }
  return r;
}

const Variables& t_variables() {
  static const Variables vars{"t"};
  return vars;
}

MultiPoly cheb_C(int n) { return to_multipoly(to_rational(cheb_C_dense(n)), t_variables(), 0); }
MultiPoly cheb_S(int n) { return to_multipoly(to_rational(cheb_S_dense(n)), t_variables(), 0); }

}  // namespace trigimpl
