#include "trigimpl/exact/resultant.hpp"

#include <set>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/upoly.hpp"

namespace trigimpl {

namespace {

std::vector<MultiPoly> padded_coefficients(const MultiPoly& p, std::size_t var, int degree) {
  auto c = p.coefficients(var);
  c.resize(static_cast<std::size_t>(degree) + 1, MultiPoly(p.variables()));
  return c;
}

void check_inputs(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  if (p.is_zero() || q.is_zero()) throw MathError("resultant of a zero polynomial");
  if (!(p.variables() == q.variables())) throw MathError("polynomials over different variable sets");
  if (p.degree(var) < 1 || q.degree(var) < 1) throw MathError("nothing to eliminate");
}

MultiPoly resultant_bezout(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  const int m = p.degree(var);
  const int n = q.degree(var);
  if (m < n) {
    // Res(p, q) = (-1)^{mn} Res(q, p)
    MultiPoly r = resultant_bezout(q, p, var);
    return (m * n) % 2 ? -r : r;
  }
  MultiPoly det = determinant(bezout_matrix(p, q, var));
  // det B = (-1)^{m(m-1)/2} lc(p)^{m-n} Res(p, q)
  if ((m * (m - 1) / 2) % 2) det = -det;
  if (m > n && !det.is_zero()) {
    MultiPoly lc = p.coefficients(var).back();
    det = divide_exact(det, lc.pow(static_cast<unsigned>(m - n)));
  }
  return det;
}

}  // namespace

Matrix<MultiPoly> sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::size_t var,
                                   std::optional<int> formal_degree_p, std::optional<int> formal_degree_q) {
  const int m = formal_degree_p.value_or(p.degree(var));
  const int n = formal_degree_q.value_or(q.degree(var));
  if (m < p.degree(var) || n < q.degree(var)) throw MathError("formal degree below actual degree");
  if (m < 0 || n < 0 || m + n == 0) throw MathError("nothing to eliminate");
  auto pc = padded_coefficients(p, var, m);
  auto qc = padded_coefficients(q, var, n);
  const auto size = static_cast<std::size_t>(m + n);
  Matrix<MultiPoly> s(size, size, MultiPoly(p.variables()));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = pc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = qc[n - k];
  return s;
}

Matrix<MultiPoly> bezout_matrix(const MultiPoly& p, const MultiPoly& q, std::size_t var) {
  const int n = std::max(p.degree(var), q.degree(var));
  if (n < 1) throw MathError("nothing to eliminate");
  auto f = padded_coefficients(p, var, n);
  auto g = padded_coefficients(q, var, n);
  const auto size = static_cast<std::size_t>(n);
  Matrix<MultiPoly> b(size, size, MultiPoly(p.variables()));
  // (s^a t^c - s^c t^a) / (s - t) = sum_{k < a-c} s^{c+k} t^{a-1-k}  for a > c
  for (int a = 1; a <= n; ++a) {
    for (int c = 0; c < a; ++c) {
      MultiPoly w = f[a] * g[c] - f[c] * g[a];
      if (w.is_zero()) continue;
      for (int k = 0; k < a - c; ++k) b(c + k, a - 1 - k) += w;
    }
  }
  return b;
}

MultiPoly determinant(const Matrix<MultiPoly>& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) throw MathError("determinant of a non-square matrix");
  Variables vars = m(0, 0).variables();
  std::set<std::size_t> support;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      vars = e.variables();
      for (auto v : e.support()) support.insert(v);
    }
  if (support.size() > 1) return bareiss_determinant(m);

  // At most one variable: clear denominators row by row and eliminate in Z[t].
  const std::size_t var = support.empty() ? 0 : *support.begin();
  Integer scale = 1;
  Matrix<ZPoly> z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& t : m(r, c).terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
    scale *= den;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      QPoly qp = support.empty() ? QPoly(m(r, c).constant_value()) : to_upoly(m(r, c), var);
      std::vector<Integer> coeffs;
      for (const auto& x : qp.coefficients()) {
        Integer v;
        mpz_divexact(v.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        coeffs.push_back(v * x.get_num());
      }
      z(r, c) = ZPoly(std::move(coeffs));
    }
  }
  ZPoly det = bareiss_determinant(std::move(z));
  QPoly qdet = to_rational(det) * Rational(Integer(1), scale);
  if (vars.size() == 0) return MultiPoly(vars, qdet.coeff(0));
  return to_multipoly(qdet, vars, var);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::size_t var, ResultantMethod method) {
  check_inputs(p, q, var);
  if (method == ResultantMethod::bezout) return resultant_bezout(p, q, var);
  return determinant(sylvester_matrix(p, q, var));
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var, ResultantMethod method) {
  return resultant(p, q, p.variables().index(var), method);
}

}  // namespace trigimpl
