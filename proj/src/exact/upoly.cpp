#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

namespace {

/// Sparse pseudo-remainder: repeatedly cancels the leading term of `r`
/// after scaling by lc(b). Differs from prem(a, b) by a power of lc(b).
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Integer& lb = bc.back();
  Integer g, sa, sb;
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const int dr = static_cast<int>(r.size()) - 1;
    const int shift = dr - db;
    // r <- (lb/g) * r - (lr/g) * x^shift * b, with g = gcd(lb, lr)
    mpz_gcd(g.get_mpz_t(), lb.get_mpz_t(), r.back().get_mpz_t());
    mpz_divexact(sa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(sb.get_mpz_t(), r.back().get_mpz_t(), g.get_mpz_t());
    for (auto& x : r) x *= sa;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= sb * bc[static_cast<std::size_t>(i)];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return ZPoly(std::move(r));
}

}  // namespace

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const auto& bc = b.coefficients();
  Rational t;
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    Rational f = top / bc.back();
    for (int i = 0; i <= db; ++i) {
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), bc[static_cast<std::size_t>(i)].get_mpq_t());
      r[static_cast<std::size_t>(k + i)] -= t;
    }
    q[static_cast<std::size_t>(k)] = std::move(f);
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw MathError("inexact division");
  std::vector<Integer> r = a.coefficients();
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const auto& bc = b.coefficients();
  const Integer& lb = bc.back();
  for (int k = da - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw MathError("inexact division");
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i < db; ++i) {
      mpz_submul(r[static_cast<std::size_t>(k + i)].get_mpz_t(), f.get_mpz_t(), bc[static_cast<std::size_t>(i)].get_mpz_t());
    }
    top = 0;
    q[static_cast<std::size_t>(k)] = std::move(f);
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) throw MathError("inexact division");
  return ZPoly(std::move(q));
}

QPoly divide_exact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError("inexact division");
  return q;
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.lc() < 0) g = -g;
  if (g == 1) return p;
  std::vector<Integer> c = p.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(c));
}

ZPoly to_primitive_integer(const QPoly& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v;
    mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    v *= c.get_num();
    out.push_back(std::move(v));
  }
  return primitive_part(ZPoly(std::move(out)));
}

QPoly to_rational(const ZPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return QPoly(std::move(out));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd undefined");
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return ZPoly(Integer(1));
    ZPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  return to_rational(gcd(to_primitive_integer(a), to_primitive_integer(b)));
}

ZPoly square_free_part(const ZPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  ZPoly g = gcd(p, p.derivative());
  return primitive_part(divide_exact(primitive_part(p), g));
}

QPoly to_upoly(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.degree(var)) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < p.variables().size(); ++v)
      if (v != var && t.exponents[v] != 0) throw MathError("polynomial is not univariate in '" + p.variables()[var] + "'");
    c[t.exponents[var]] = t.coefficient;
  }
  return QPoly(std::move(c));
}

MultiPoly to_multipoly(const QPoly& p, const Variables& vars, std::size_t var) {
  std::vector<Term> terms;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Term t{Exponents{}, c[k]};
    t.exponents[var] = static_cast<std::uint16_t>(k);
    terms.push_back(std::move(t));
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

}  // namespace trigimpl
