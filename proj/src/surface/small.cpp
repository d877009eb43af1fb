#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/gcd.hpp"
#include "trigimpl/exact/modular.hpp"
#include "trigimpl/exact/resultant.hpp"
#include "trigimpl/surface/surface.hpp"

namespace trigimpl {

namespace {

enum : std::size_t { kT1, kT2, kX, kY, kZ };

const Variables& ring() {
  static const Variables v{"t1", "t2", "x", "y", "z"};
  return v;
}

MultiPoly lift(const MultiPoly& p) { return p.with_variables(ring()); }

/// Specializations of the auxiliary (Z, W).
constexpr int kAux[][2] = {{2, 3}, {-3, 5}, {5, -2}, {7, 11}, {-11, 4}, {13, -7}};

struct Chart {
  std::array<MultiPoly, 3> G;
  MultiPoly S12, T12;
};

Chart chart(const SurfaceParam& P) {
  Chart c;
  const std::size_t coord[3] = {kX, kY, kZ};
  for (int i = 0; i < 3; ++i) c.G[i] = lift(P.p[i]) - lift(P.q[i]) * MultiPoly::variable(ring(), coord[i]);
  const std::size_t space[] = {kX, kY, kZ};
  c.S12 = primitive_part_in(resultant(c.G[0], c.G[1], kT2, ResultantMethod::bezout), space);
  c.T12 = primitive_part_in(resultant(c.G[0], c.G[1], kT1, ResultantMethod::bezout), space);
  return c;
}

/// Integer coefficients in `var` of p in Z[var, z] (p normalized).
ZPolyCoeffs split(const MultiPoly& p, std::size_t var) {
  ZPolyCoeffs out(static_cast<std::size_t>(p.degree(var)) + 1);
  std::vector<std::vector<Integer>> dense(out.size());
  for (const auto& t : p.terms()) {
    auto& c = dense[t.exponents[var]];
    if (c.size() <= t.exponents[kZ]) c.resize(t.exponents[kZ] + 1u);
    c[t.exponents[kZ]] = t.coefficient.get_num();
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = ZPoly(std::move(dense[k]));
  return out;
}

/// Res_t2(a, b) for a, b in Q[t2, z], up to a nonzero constant.
MultiPoly resultant_t2(const MultiPoly& a, const MultiPoly& b) {
  if (a.degree(kT2) < 1 || b.degree(kT2) < 1) throw MathError("nothing to eliminate");
  const ZPoly r = modular_resultant(split(normalized(a), kT2), split(normalized(b), kT2), a.degree(kT2), b.degree(kT2));
  return to_multipoly(to_rational(r), ring(), kZ);
}

/// pp_z(h) on the line x = x0, y = y0, where h is the (Z, W)-content of
/// Res_t2(T12, Res_t1(S12, G3 + Z G1 + W G2)). The content is the gcd over
/// specializations of (Z, W), widened until its degree reaches `target`.
std::optional<MultiPoly> line_h(const Chart& c, const Rational& x0, const Rational& y0, int target) {
  auto on_line = [&](const MultiPoly& p) { return p.evaluate_at(kX, x0).evaluate_at(kY, y0); };
  const MultiPoly S12 = on_line(c.S12), T12 = on_line(c.T12);
  std::array<MultiPoly, 3> G;
  for (int i = 0; i < 3; ++i) G[i] = on_line(c.G[i]);
  MultiPoly h;
  try {
    for (const auto& zw : kAux) {
      const MultiPoly Gzw = G[2] + G[0] * Rational(zw[0]) + G[1] * Rational(zw[1]);
      const MultiPoly K = resultant(S12, Gzw, kT1, ResultantMethod::bezout);
      const MultiPoly R = resultant_t2(T12, K);
      if (R.is_zero()) return std::nullopt;
      h = h.is_zero() ? normalized(R) : gcd(h, R);
      if (h.degree(kZ) <= target) break;
    }
  } catch (const MathError&) {
    return std::nullopt;
  }
  if (h.degree(kZ) != target) return std::nullopt;
  return h;
}

/// Incremental reduced row echelon form over Q.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n) {}
  void add(std::vector<Rational> row) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (row[pivot_[i]] != 0) axpy(row, -row[pivot_[i]], rows_[i]);
    std::size_t p = 0;
    while (p < n_ && row[p] == 0) ++p;
    if (p == n_) return;
    const Rational inv = 1 / row[p];
    for (auto& v : row) v *= inv;
    for (auto& r : rows_)
      if (r[p] != 0) axpy(r, -r[p], row);
    rows_.push_back(std::move(row));
    pivot_.push_back(p);
  }
  std::size_t rank() const { return rows_.size(); }
  /// Basis vector of a one-dimensional kernel.
  std::vector<Rational> kernel() const {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivot_) is_pivot[p] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    std::vector<Rational> x(n_, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) x[pivot_[i]] = -rows_[i][free];
    return x;
  }

 private:
  static void axpy(std::vector<Rational>& y, const Rational& a, const std::vector<Rational>& x) {
    for (std::size_t k = 0; k < y.size(); ++k)
      if (x[k] != 0) y[k] += a * x[k];
  }
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivot_;
};

/// F in settled coordinates from its restrictions to vertical lines: each
/// line fixes F(x0, y0, z) up to a scalar, which is linear in the
/// coefficients of F inside the degree box d.
std::optional<MultiPoly> implicitize_chart(const Settled& S, const std::array<int, 3>& d, int r) {
  Chart c;
  try {
    c = chart(S.param);
  } catch (const MathError&) {
    return std::nullopt;
  }
  const std::size_t n = static_cast<std::size_t>((d[0] + 1) * (d[1] + 1) * (d[2] + 1));
  auto index = [&](int a, int b, int k) { return static_cast<std::size_t>((a * (d[1] + 1) + b) * (d[2] + 1) + k); };
  Echelon system(n);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> value(-40, 40);
  for (int misses = 0; system.rank() + 1 < n && misses < 10;) {
    const Rational x0(value(rng)), y0(value(rng));
    const auto h = line_h(c, x0, y0, r * d[2]);
    MultiPoly f;
    try {
      if (h) f = rth_root(*h, static_cast<unsigned>(r));
    } catch (const MathError&) {
    }
    if (f.is_zero()) {
      ++misses;
      continue;
    }
    misses = 0;
    const auto phi = f.coefficients(kZ);
    std::vector<Rational> xp(static_cast<std::size_t>(d[0]) + 1, Rational(1)), yp(static_cast<std::size_t>(d[1]) + 1, Rational(1));
    for (std::size_t a = 1; a < xp.size(); ++a) xp[a] = xp[a - 1] * x0;
    for (std::size_t b = 1; b < yp.size(); ++b) yp[b] = yp[b - 1] * y0;
    const Rational top = phi.back().constant_value();
    for (int j = 0; j < d[2]; ++j) {
      const Rational pj = phi[static_cast<std::size_t>(j)].constant_value();
      std::vector<Rational> row(n, Rational(0));
      for (int a = 0; a <= d[0]; ++a)
        for (int b = 0; b <= d[1]; ++b) {
          const Rational m = xp[static_cast<std::size_t>(a)] * yp[static_cast<std::size_t>(b)];
          row[index(a, b, j)] += top * m;
          row[index(a, b, d[2])] -= pj * m;
        }
      system.add(std::move(row));
    }
  }
  if (system.rank() + 1 != n) return std::nullopt;
  const auto coef = system.kernel();
  std::vector<Term> terms;
  for (int a = 0; a <= d[0]; ++a)
    for (int b = 0; b <= d[1]; ++b)
      for (int k = 0; k <= d[2]; ++k) {
        Term t{Exponents{}, coef[index(a, b, k)]};
        t.exponents[0] = static_cast<std::uint16_t>(a);
        t.exponents[1] = static_cast<std::uint16_t>(b);
        t.exponents[2] = static_cast<std::uint16_t>(k);
        terms.push_back(std::move(t));
      }
  // settled coordinate k is original coordinate permutation[k]
  const auto& xyz = xyz_variables();
  const Variables renamed{xyz[S.permutation[0]], xyz[S.permutation[1]], xyz[S.permutation[2]]};
  return normalized(MultiPoly::from_terms(renamed, std::move(terms)).with_variables(xyz));
}

bool certified(const SurfaceParam& original, const MultiPoly& F, const DegreeReport& degrees) {
  for (std::size_t k = 0; k < 3; ++k)
    if (Rational(F.degree(k)) != degrees.section_ratio[k]) return false;
  int checked = 0;
  for (int k = 1; checked < 10 && k < 100; ++k) {
    const auto pt = original.point(ratio(k, k % 7 + 3), ratio(3 - k, 2 * k + 5));
    if (!pt) continue;
    if (F.evaluate(std::span<const Rational>(pt->data(), 3)) != 0) return false;
    ++checked;
  }
  return checked == 10;
}

}  // namespace

MultiPoly surface_implicitize_small(const SurfaceParam& P) {
  for (int i = 0; i < 3; ++i)
    if (P.p[i].total_degree() > 4 || P.q[i].total_degree() > 4)
      throw TooLarge("instance too large; use sendra_degrees");
  const DegreeReport degrees = sendra_degrees(P);
  // The settled chart first, then the other permutations, since the
  // construction also needs G1 and G2 to involve both parameters.
  const Settled settled = settle(P);
  std::vector<Settled> charts{settled};
  std::array<int, 3> perm{0, 1, 2};
  do {
    if (perm == settled.permutation) continue;
    const SurfaceParam permuted = P.permuted(perm);
    try {
      const int c = infinity_shear(permuted);
      charts.push_back({perm, c, permuted.sheared(c)});
    } catch (const AssumptionViolation&) {
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const Settled& S : charts) {
    std::array<int, 3> d{};
    for (std::size_t k = 0; k < 3; ++k) {
      const Rational& deg = degrees.section_ratio[static_cast<std::size_t>(S.permutation[k])];
      if (deg.get_den() != 1) throw std::logic_error("non-integral partial degree");
      d[k] = static_cast<int>(deg.get_num().get_si());
    }
    if (auto F = implicitize_chart(S, d, degrees.map_degree); F && certified(P, *F, degrees)) return *F;
  }
  throw std::logic_error("nested resultants did not yield a certified defining polynomial");
}

}  // namespace trigimpl
