#include "trigimpl/curve/curve.hpp"

#include <stdexcept>
#include <string>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/gcd.hpp"
#include "trigimpl/exact/resultant.hpp"

namespace trigimpl {

namespace {

const ZPoly kOnePlusT2(std::vector<Integer>{1, 0, 1});
const ZPoly kOneMinusT2(std::vector<Integer>{1, 0, -1});
const ZPoly kTwoT(std::vector<Integer>{0, 2});

QPoly q_of(const ZPoly& z) { return to_rational(z); }

MultiPoly in_t(const QPoly& p) { return to_multipoly(p, t_variables(), 0); }

MultiPoly lift(const MultiPoly& p, const Variables& vars) { return p.with_variables(vars); }

}  // namespace

const Variables& xy_variables() {
  static const Variables vars{"x", "y"};
  return vars;
}

QPoly RationalCurveParam::p1() const { return to_upoly(P1, 0); }
QPoly RationalCurveParam::p2() const { return to_upoly(P2, 0); }
QPoly RationalCurveParam::q() const { return to_upoly(Q, 0); }

std::pair<Rational, Rational> RationalCurveParam::point(const Rational& t) const {
  Rational den = q()(t);
  return {p1()(t) / den, p2()(t) / den};
}

RationalCurveParam rational_parametrization(const TrigPoly& p) {
  if (p.is_zero()) throw DegenerateInput("empty support function");
  const int n = std::max(p.degree(), 0);
  QPoly p1 = q_of(kOneMinusT2 * kOnePlusT2.pow(static_cast<unsigned>(n))) * p.a0();
  QPoly p2 = q_of(kTwoT * kOnePlusT2.pow(static_cast<unsigned>(n))) * p.a0();
  for (int k = 1; k <= n; ++k) {
    const QPoly c = q_of(cheb_C_dense(k)), s = q_of(cheb_S_dense(k));
    const QPoly w = q_of(kOnePlusT2.pow(static_cast<unsigned>(n - k)));
    const QPoly val = (c * p.a(k) + s * p.b(k)) * w;               // (1+t²)^N p
    const QPoly der = (s * (-k * p.a(k)) + c * (k * p.b(k))) * w;  // (1+t²)^N p'
    p1 += q_of(kOneMinusT2) * val - q_of(kTwoT) * der;
    p2 += q_of(kTwoT) * val + q_of(kOneMinusT2) * der;
  }
  QPoly q = q_of(kOnePlusT2.pow(static_cast<unsigned>(n + 1)));

  if (n >= 2) {
    // P_i(i) != 0 means gcd(P_i, Q) = 1 since Q = (t - i)^{N+1}(t + i)^{N+1}
    const GaussianRational i = GaussianRational::i();
    GaussianRational v1 = p1(i), v2 = p2(i);
    GaussianRational want = GaussianRational(p.a(n), p.b(n)) * GaussianRational(Rational(1 - n)) *
                            GaussianRational(Rational(Integer(1) << (2 * n)));
    if (v1 != want) throw std::logic_error("P1(i) disagrees with its closed form");
    if (v1 == GaussianRational() || v2 == GaussianRational())
      throw std::logic_error("parametrization not reduced");
  } else {
    QPoly g = gcd(gcd(p1, p2), q);
    if (g.degree() > 0) {
      p1 = divide_exact(p1, g);
      p2 = divide_exact(p2, g);
      q = divide_exact(q, g);
    }
  }
  return {in_t(p1), in_t(p2), in_t(q), n};
}

std::pair<Rational, Rational> point_at_pi(const TrigPoly& p) {
  return {-p.value_at(Rational(-1), Rational(0)), -p.derivative().value_at(Rational(-1), Rational(0))};
}

int tracing_index(const TrigPoly& p) {
  if (p.degree() <= 1) throw MathError("circle case: use classify");
  return parity_class(p) == Parity::odd_only ? 2 : 1;
}

PredictedDegree predicted_total_degree(const TrigPoly& p) {
  const int n = p.degree();
  if (n <= 1) return {2, true};
  PredictedDegree out{parity_class(p) == Parity::odd_only ? n + 1 : 2 * n + 2, false};
  const Classification c = classify(p);
  if (c.kind == CurveKind::constant_width) {
    const int m = (n - 1) / 2;
    if (out.degree != 4 * m + 4) throw std::logic_error("constant-width degree law violated");
  }
  if (c.kind == CurveKind::rotor) {
    if ((n - 1) % c.n == 0 && out.degree != 2 * c.n * ((n - 1) / c.n) + 4)
      throw std::logic_error("rotor degree law violated");
    if ((n + 1) % c.n == 0 && out.degree != 2 * c.n * ((n + 1) / c.n))
      throw std::logic_error("rotor degree law violated");
  }
  return out;
}

std::span<const Rational> vanishing_samples() {
  static const std::vector<Rational> samples = [] {
    std::vector<Rational> v;
    for (const char* s : {"0", "1", "-1", "2", "-2", "1/2", "-1/3", "3", "-3", "7/5", "-5/7", "4", "-9/4", "11/3",
                          "-13/6", "5", "-6", "17/10", "-1/7", "23/8"})
      v.push_back(parse_rational(s));
    return v;
  }();
  return samples;
}

std::optional<Rational> verify_vanishing(const MultiPoly& f, const TrigPoly& p, std::span<const Rational> samples) {
  const RationalCurveParam param = rational_parametrization(p);
  for (const auto& t : samples) {
    auto [x, y] = param.point(t);
    std::map<std::string, Rational> pt{{"x", x}, {"y", y}};
    if (f.evaluate(pt) != 0) return t;
  }
  return std::nullopt;
}

ImplicitReport implicitize(const TrigPoly& p) {
  if (p.is_zero()) throw DegenerateInput("empty support function");
  ImplicitReport rep;
  rep.support = p;
  rep.classification = classify(p);
  rep.predicted = predicted_total_degree(p);
  const Variables& xy = xy_variables();
  const MultiPoly x = MultiPoly::variable(xy, 0), y = MultiPoly::variable(xy, 1);

  if (p.degree() <= 1) {
    if (p.a0() == 0) throw DegenerateInput("degenerate parametrization: the curve is a point");
    const MultiPoly dx = x - MultiPoly(xy, p.a(1)), dy = y - MultiPoly(xy, p.b(1));
    rep.f = normalized(dx * dx + dy * dy - MultiPoly(xy, p.a0() * p.a0()));
    rep.tracing_index = 1;
  } else {
    const RationalCurveParam param = rational_parametrization(p);
    const Variables xyt{"x", "y", "t"};
    const MultiPoly q = lift(param.Q, xyt);
    const MultiPoly h1 = MultiPoly::variable(xyt, 0) * q - lift(param.P1, xyt);
    const MultiPoly h2 = MultiPoly::variable(xyt, 1) * q - lift(param.P2, xyt);
    const MultiPoly res = resultant(h1, h2, 2, ResultantMethod::bezout).with_variables(xy);
    if (res.is_zero()) throw DegenerateInput("degenerate parametrization");
    rep.tracing_index = tracing_index(p);
    if (rep.tracing_index == 1) {
      rep.f = normalized(res);
    } else {
      try {
        rep.f = rth_root(res, 2);
      } catch (const MathError&) {
        throw DegenerateInput("tracing-index contradiction");
      }
    }
  }

  if (auto bad = verify_vanishing(rep.f, p, vanishing_samples()))
    throw std::logic_error("defining polynomial does not vanish at t = " + to_string(*bad));
  auto [px, py] = point_at_pi(p);
  if (rep.f.evaluate(std::map<std::string, Rational>{{"x", px}, {"y", py}}) != 0)
    throw std::logic_error("defining polynomial does not vanish at θ = π");

  rep.total_degree = rep.f.total_degree();
  rep.deg_x = rep.f.degree(0);
  rep.deg_y = rep.f.degree(1);
  return rep;
}

}  // namespace trigimpl
