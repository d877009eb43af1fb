#include "trigimpl/exact/gcd.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

namespace {

MultiPoly one_like(const MultiPoly& p) { return MultiPoly(p.variables(), Rational(1)); }

MultiPoly gcd_nonzero(const MultiPoly& a, const MultiPoly& b);

/// Normalized gcd of the coefficients of p with respect to `var`.
MultiPoly coefficient_gcd(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.variables());
  for (const auto& c : p.coefficients(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : gcd_nonzero(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

/// Pseudo-remainder in `var` without the full lc(b)^k power.
MultiPoly sparse_prem(MultiPoly r, const MultiPoly& b, std::size_t var) {
  const int db = b.degree(var);
  const MultiPoly lb = b.coefficients(var).back();
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    MultiPoly lr = r.coefficients(var).back();
    r = lb * r - lr * b.shifted(var, static_cast<unsigned>(dr - db));
  }
  return r;
}

MultiPoly primitive_in_var(const MultiPoly& p, std::size_t var) {
  MultiPoly c = coefficient_gcd(p, var);
  return normalized(c.is_constant() ? p : divide_exact(p, c));
}

Integer max_norm(const MultiPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coefficient.get_num());
    if (a > m) m = a;
  }
  return m;
}

Integer integer_content(const MultiPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
  return g;
}

MultiPoly prs_gcd(const MultiPoly& a, const MultiPoly& b);

/// gcd over Z of integer polynomials: gcd of the contents times the
/// primitive gcd, positive leading coefficient.
MultiPoly zgcd(const MultiPoly& a, const MultiPoly& b, int depth);

/// Heuristic gcd (evaluate one variable at a large integer ξ, recurse,
/// reconstruct from the balanced ξ-adic digits, verify by division).
/// Inputs are primitive integer polynomials; std::nullopt when every
/// evaluation point fails.
std::optional<MultiPoly> heu_gcd(const MultiPoly& a, const MultiPoly& b, int depth) {
  std::vector<std::size_t> vars = a.support();
  for (auto v : b.support()) vars.push_back(v);
  const std::size_t v = *std::min_element(vars.begin(), vars.end());
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MultiPoly ea = a.evaluate_at(v, Rational(xi)), eb = b.evaluate_at(v, Rational(xi));
    if (!ea.is_zero() && !eb.is_zero()) {
      MultiPoly gamma = zgcd(ea, eb, depth + 1);
      // balanced ξ-adic expansion of gamma
      std::vector<Term> terms;
      const Integer half = xi / 2;
      for (unsigned k = 0; !gamma.is_zero() && k < 4096; ++k) {
        std::vector<Term> digit;
        for (const auto& t : gamma.terms()) {
          Integer c = t.coefficient.get_num();
          Integer r;
          mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
          if (r > half) r -= xi;
          if (r != 0) digit.push_back({t.exponents, Rational(r)});
        }
        MultiPoly d = MultiPoly::from_terms(gamma.variables(), digit);
        for (auto t : digit) {
          t.exponents[v] = static_cast<std::uint16_t>(k);
          terms.push_back(std::move(t));
        }
        gamma = (gamma - d) * Rational(1, xi);
      }
      if (!terms.empty()) {
        MultiPoly g = normalized(MultiPoly::from_terms(a.variables(), std::move(terms)));
        if (try_divide(a, g) && try_divide(b, g)) return g;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MultiPoly zgcd(const MultiPoly& a, const MultiPoly& b, int depth) {
  if (a.is_zero()) return b.leading_coefficient() < 0 ? -b : b;
  if (b.is_zero()) return a.leading_coefficient() < 0 ? -a : a;
  Integer c;
  Integer ca = integer_content(a), cb = integer_content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return MultiPoly(a.variables(), Rational(c));
  MultiPoly pa = normalized(a), pb = normalized(b);
  std::optional<MultiPoly> g;
  if (depth < 4) g = heu_gcd(pa, pb, depth);
  if (!g) g = prs_gcd(pa, pb);
  return *g * Rational(c);
}

MultiPoly gcd_nonzero(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a.support().size() + b.support().size() > 2) {
    MultiPoly na = normalized(a), nb = normalized(b);
    if (auto g = heu_gcd(na, nb, 0)) return *g;
  }
  return prs_gcd(a, b);
}

MultiPoly prs_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  auto sa = a.support();
  auto sb = b.support();
  const std::size_t v = std::min(sa.front(), sb.front());
  const bool a_has = std::find(sa.begin(), sa.end(), v) != sa.end();
  const bool b_has = std::find(sb.begin(), sb.end(), v) != sb.end();
  if (!a_has) return gcd_nonzero(a, coefficient_gcd(b, v));
  if (!b_has) return gcd_nonzero(coefficient_gcd(a, v), b);

  if (sa.size() == 1 && sb.size() == 1) {
    ZPoly g = gcd(to_primitive_integer(to_upoly(a, v)), to_primitive_integer(to_upoly(b, v)));
    return normalized(to_multipoly(to_rational(g), a.variables(), v));
  }

  MultiPoly ca = coefficient_gcd(a, v);
  MultiPoly cb = coefficient_gcd(b, v);
  MultiPoly c = gcd_nonzero(ca, cb);
  MultiPoly x = normalized(ca.is_constant() ? a : divide_exact(a, ca));
  MultiPoly y = normalized(cb.is_constant() ? b : divide_exact(b, cb));
  if (x.degree(v) < y.degree(v)) std::swap(x, y);
  while (true) {
    MultiPoly r = sparse_prem(x, y, v);
    if (r.is_zero()) break;
    if (r.degree(v) <= 0) {
      y = one_like(a);
      break;
    }
    x = std::move(y);
    y = primitive_in_var(r, v);
  }
  return normalized(c * y);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd undefined");
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (!(a.variables() == b.variables())) throw MathError("polynomials over different variable sets");
  return gcd_nonzero(a, b);
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (p.is_zero() && q.is_zero()) throw MathError("gcd undefined");
  MultiPoly g = gcd(p, q);
  return primitive_part(g, var);
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  return poly_gcd(p, q, (p.is_zero() ? q : p).variables().index(var));
}

MultiPoly primitive_part(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) throw MathError("zero polynomial");
  return primitive_in_var(p, var);
}

MultiPoly content(const MultiPoly& p, std::size_t var) {
  return divide_exact(p, primitive_part(p, var));
}

MultiPoly content_in(const MultiPoly& p, std::span<const std::size_t> vars) {
  if (p.is_zero()) throw MathError("zero polynomial");
  // Group terms by their exponents in `vars`.
  std::map<Exponents, std::vector<Term>, GrlexGreater> groups;
  for (const auto& t : p.terms()) {
    Exponents key{};
    Term rest = t;
    for (auto v : vars) {
      key[v] = t.exponents[v];
      rest.exponents[v] = 0;
    }
    groups[key].push_back(std::move(rest));
  }
  MultiPoly g(p.variables());
  for (auto& [key, terms] : groups) {
    MultiPoly c = MultiPoly::from_terms(p.variables(), std::move(terms));
    g = g.is_zero() ? normalized(c) : gcd_nonzero(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

MultiPoly primitive_part_in(const MultiPoly& p, std::span<const std::size_t> vars) {
  MultiPoly c = content_in(p, vars);
  return normalized(c.is_constant() ? p : divide_exact(p, c));
}

MultiPoly lcm(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.variables());
  return normalized(divide_exact(a * b, gcd(a, b)));
}

namespace {

/// Assuming p = c * f^r with f square-free, recovers f up to a constant.
MultiPoly root_candidate(const MultiPoly& p) {
  if (p.is_constant()) return one_like(p);
  const std::size_t v = p.support().front();
  MultiPoly c = coefficient_gcd(p, v);
  MultiPoly q = normalized(c.is_constant() ? p : divide_exact(p, c));
  // Every factor of q involves v, so gcd(q, dq/dv) = f_q^(r-1).
  MultiPoly g = gcd(q, q.derivative(v));
  MultiPoly f = g.is_constant() ? q : divide_exact(q, g);
  return root_candidate(c) * f;
}

}  // namespace

MultiPoly rth_root(const MultiPoly& p, unsigned r) {
  if (r == 0) throw MathError("root index must be positive");
  if (p.is_zero()) throw MathError("zero polynomial");
  MultiPoly n = normalized(p);
  if (r == 1) return n;
  MultiPoly f = normalized(root_candidate(n));
  if (!(normalized(f.pow(r)) == n)) throw MathError("not a perfect power");
  return f;
}

}  // namespace trigimpl
