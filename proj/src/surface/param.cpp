#include <algorithm>

#include "trigimpl/curve/curve.hpp"
#include "trigimpl/errors.hpp"
#include "trigimpl/exact/gcd.hpp"
#include "trigimpl/surface/surface.hpp"

namespace trigimpl {

namespace {

constexpr std::size_t kT1 = 0;
constexpr std::size_t kT2 = 1;

MultiPoly var(std::size_t i) { return MultiPoly::variable(t1t2_variables(), i); }
MultiPoly constant(const Rational& c) { return MultiPoly(t1t2_variables(), c); }
MultiPoly in_var(const QPoly& p, std::size_t v) { return to_multipoly(p, t1t2_variables(), v); }

/// num / ((1+t1²)^e1 (1+t2²)^e2).
struct Frac {
  MultiPoly num;
  int e1 = 0;
  int e2 = 0;
};

MultiPoly D(std::size_t v) { return constant(1) + var(v) * var(v); }

MultiPoly lifted(const Frac& f, int e1, int e2) {
  MultiPoly n = f.num;
  if (e1 > f.e1) n *= D(kT1).pow(static_cast<unsigned>(e1 - f.e1));
  if (e2 > f.e2) n *= D(kT2).pow(static_cast<unsigned>(e2 - f.e2));
  return n;
}

Frac operator+(const Frac& a, const Frac& b) {
  const int e1 = std::max(a.e1, b.e1), e2 = std::max(a.e2, b.e2);
  return {lifted(a, e1, e2) + lifted(b, e1, e2), e1, e2};
}
Frac operator-(const Frac& a, const Frac& b) {
  const int e1 = std::max(a.e1, b.e1), e2 = std::max(a.e2, b.e2);
  return {lifted(a, e1, e2) - lifted(b, e1, e2), e1, e2};
}
Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.e1 + b.e1, a.e2 + b.e2}; }
Frac operator*(const Rational& c, const Frac& a) { return {a.num * c, a.e1, a.e2}; }

Frac pow(const Frac& f, int e) {
  Frac r{constant(1)};
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

Frac horner(const QPoly& w, const Frac& x) {
  Frac r{constant(0)};
  const auto& c = w.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) r = r * x + Frac{constant(c[i])};
  return r;
}

std::pair<MultiPoly, MultiPoly> as_quotient(const Frac& f) {
  return {f.num, D(kT1).pow(static_cast<unsigned>(f.e1)) * D(kT2).pow(static_cast<unsigned>(f.e2))};
}

/// Pure t2 coefficient of the degree form.
Rational infinity_coefficient(const MultiPoly& p) {
  const int d = p.total_degree();
  for (const auto& t : p.terms())
    if (t.exponents[kT2] == d) return t.coefficient;
  return 0;
}

MultiPoly jacobian_numerator(const SurfaceParam& P) {
  auto num_d = [&](int i, std::size_t v) {
    return P.p[i].derivative(v) * P.q[i] - P.p[i] * P.q[i].derivative(v);
  };
  return num_d(0, kT1) * num_d(1, kT2) - num_d(0, kT2) * num_d(1, kT1);
}

bool infinity_ok(const SurfaceParam& P, std::string* detail) {
  for (int i = 0; i < 3; ++i) {
    if (infinity_coefficient(P.p[i]) == 0) {
      if (detail) *detail = "p" + std::to_string(i + 1);
      return false;
    }
    if (infinity_coefficient(P.q[i]) == 0) {
      if (detail) *detail = "q" + std::to_string(i + 1);
      return false;
    }
  }
  return true;
}

AssumptionCheck settled_check(const SurfaceParam& P) {
  AssumptionCheck r;
  if (P.p[2].is_constant() && P.q[2].is_constant()) {
    r.ok = false;
    r.clause = AssumptionClause::constant_third;
    return r;
  }
  if (jacobian_numerator(P).is_zero()) {
    r.ok = false;
    r.clause = AssumptionClause::dependent_gradients;
  }
  return r;
}

}  // namespace

const Variables& t1t2_variables() {
  static const Variables v{"t1", "t2"};
  return v;
}

const Variables& xyz_variables() {
  static const Variables v{"x", "y", "z"};
  return v;
}

SurfaceParam SurfaceParam::reduced(std::array<MultiPoly, 3> p, std::array<MultiPoly, 3> q) {
  SurfaceParam out;
  for (int i = 0; i < 3; ++i) {
    if (q[i].is_zero()) throw DegenerateInput("zero denominator");
    if (p[i].is_zero()) {
      out.p[i] = constant(0);
      out.q[i] = constant(1);
      continue;
    }
    const MultiPoly g = gcd(p[i], q[i]);
    MultiPoly pi = divide_exact(p[i], g), qi = divide_exact(q[i], g);
    const MultiPoly qn = normalized(qi);
    pi *= qn.leading_coefficient() / qi.leading_coefficient();
    out.p[i] = std::move(pi);
    out.q[i] = qn;
  }
  return out;
}

std::optional<std::array<Rational, 3>> SurfaceParam::point(const Rational& t1, const Rational& t2) const {
  const Rational at[2] = {t1, t2};
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Rational d = q[i].evaluate(std::span<const Rational>(at, 2));
    if (d == 0) return std::nullopt;
    out[i] = p[i].evaluate(std::span<const Rational>(at, 2)) / d;
  }
  return out;
}

SurfaceParam SurfaceParam::permuted(const std::array<int, 3>& perm) const {
  SurfaceParam out;
  for (int k = 0; k < 3; ++k) {
    out.p[k] = p[perm[k]];
    out.q[k] = q[perm[k]];
  }
  return out;
}

SurfaceParam SurfaceParam::mirrored() const {
  const Variables swapped{"t2", "t1"};
  SurfaceParam out;
  auto swap = [&](const MultiPoly& f) {
    return MultiPoly::from_terms(swapped, f.terms()).with_variables(t1t2_variables());
  };
  for (int i = 0; i < 3; ++i) {
    out.p[i] = swap(p[i]);
    out.q[i] = swap(q[i]);
  }
  return out;
}

SurfaceParam SurfaceParam::sheared(int c) const {
  if (c == 0) return *this;
  const MultiPoly shift = var(kT1) + var(kT2) * Rational(c);
  SurfaceParam out;
  for (int i = 0; i < 3; ++i) {
    out.p[i] = p[i].substitute(kT1, shift);
    out.q[i] = q[i].substitute(kT1, shift);
  }
  return out;
}

int SurfaceParam::max_total_degree() const {
  int d = 0;
  for (int i = 0; i < 3; ++i) d = std::max({d, p[i].total_degree(), q[i].total_degree()});
  return d;
}

SurfaceParam revolution_surface(const TrigPoly& p) {
  const RationalCurveParam c = rational_parametrization(p);
  const MultiPoly P1 = in_var(c.p1(), kT2), P2 = in_var(c.p2(), kT2), Q = in_var(c.q(), kT2);
  if (P2.is_zero()) throw DegenerateInput("degenerate revolution");
  const MultiPoly D1 = D(kT1);
  return SurfaceParam::reduced({P1, P2 * var(kT1) * Rational(2), P2 * (constant(1) - var(kT1) * var(kT1))},
                               {Q, Q * D1, Q * D1});
}

SurfaceParam harmonic_surface(const SphericalSupport& h) {
  if (h.is_zero()) throw DegenerateInput("empty support function");
  const Frac s{var(kT2) * Rational(2), 0, 1};
  const Frac c{constant(1) - var(kT2) * var(kT2), 0, 1};
  const Frac cphi{constant(1) - var(kT1) * var(kT1), 1, 0};
  const Frac sphi{var(kT1) * Rational(2), 1, 0};

  Frac H{constant(0)}, Ht{constant(0)}, Hp{constant(0)};
  for (const auto& [key, ab] : h.coefficients()) {
    const auto [l, m] = key;
    const auto& [a, b] = ab;
    const QPoly W = legendre_W(l, m);
    const Frac Wc = horner(W, c), dWc = horner(W.derivative(), c);
    const Frac Cm{in_var(to_rational(cheb_C_dense(m)), kT1), m, 0};
    const Frac Sm{in_var(to_rational(cheb_S_dense(m)), kT1), m, 0};
    const Frac ang = a * Cm + b * Sm;
    H = H + pow(s, m) * Wc * ang;
    Frac dtheta = Rational(-1) * (pow(s, m + 1) * dWc);
    if (m > 0) {
      dtheta = dtheta + Rational(m) * (pow(s, m - 1) * c * Wc);
      Hp = Hp + pow(s, m - 1) * Wc * (Rational(m) * ((b * Cm) - (a * Sm)));
    }
    Ht = Ht + dtheta * ang;
  }
  const Frac u[3] = {s * cphi, s * sphi, c};
  const Frac v[3] = {c * cphi, c * sphi, Rational(-1) * s};
  const Frac w[3] = {Rational(-1) * sphi, cphi, Frac{constant(0)}};
  std::array<MultiPoly, 3> num, den;
  for (int k = 0; k < 3; ++k) {
    auto [n, d] = as_quotient(H * u[k] + Ht * v[k] + Hp * w[k]);
    num[k] = std::move(n);
    den[k] = std::move(d);
  }
  return SurfaceParam::reduced(num, den);
}

const char* to_string(AssumptionClause c) {
  switch (c) {
    case AssumptionClause::none: return "none";
    case AssumptionClause::dependent_gradients: return "dependent gradients";
    case AssumptionClause::constant_third: return "constant third component";
    case AssumptionClause::point_at_infinity: return "point at infinity";
  }
  return "?";
}

AssumptionCheck general_assumptions_check(const SurfaceParam& P) {
  AssumptionCheck r = settled_check(P);
  if (!r.ok) return r;
  if (!infinity_ok(P, &r.detail)) {
    r.ok = false;
    r.clause = AssumptionClause::point_at_infinity;
  }
  return r;
}

int infinity_shear(const SurfaceParam& P) {
  for (int c = 0; c <= 64; ++c)
    if (infinity_ok(P.sheared(c), nullptr)) return c;
  throw AssumptionViolation("point at infinity: no shear t1 -> t1 + c*t2 with c <= 64 clears it");
}

Settled settle(const SurfaceParam& P) {
  std::array<int, 3> perm{0, 1, 2};
  AssumptionCheck first;
  do {
    const SurfaceParam Q = P.permuted(perm);
    const AssumptionCheck r = settled_check(Q);
    if (r.ok) {
      Settled s;
      s.permutation = perm;
      s.c = infinity_shear(Q);
      s.param = Q.sheared(s.c);
      return s;
    }
    if (first.ok) first = r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw AssumptionViolation(std::string("assumption failure: ") + to_string(first.clause));
}

}  // namespace trigimpl
