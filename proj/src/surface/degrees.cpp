#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigimpl/errors.hpp"
#include "trigimpl/exact/modular.hpp"
#include "trigimpl/surface/surface.hpp"

namespace trigimpl {

namespace {

/// Polynomial in t2 with coefficients in Z[t1].
using BiPoly = std::vector<ZPoly>;

int deg(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

BiPoly to_bi(const MultiPoly& f) {
  if (f.is_zero()) return {};
  const MultiPoly g = normalized(f);
  std::vector<std::vector<Integer>> c(static_cast<std::size_t>(g.degree(1)) + 1);
  for (const auto& t : g.terms()) {
    auto& row = c[t.exponents[1]];
    if (row.size() <= t.exponents[0]) row.resize(t.exponents[0] + 1u);
    row[t.exponents[0]] = t.coefficient.get_num();
  }
  BiPoly out;
  out.reserve(c.size());
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

ZPoly coeff(const BiPoly& p, int k) { return k >= 0 && k <= deg(p) ? p[static_cast<std::size_t>(k)] : ZPoly(); }

ZPoly resultant_t2(const BiPoly& a, const BiPoly& b, int fa, int fb) { return modular_resultant(a, b, fa, fb); }

/// Proper fractions n/d in lowest terms; small integers and zero are
/// typical special values (symmetry planes, branch values) and are avoided.
struct Sampler {
  std::mt19937_64 rng;
  Rational fraction(int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(-num_hi, num_hi), den(2, den_hi);
    for (;;) {
      const int n = num(rng), d = den(rng);
      if (std::gcd(n, d) == 1) return Rational(n, d);
    }
  }
};

BiPoly fiber_equation(const SurfaceParam& P, int k, const Rational& x) { return to_bi(P.p[k] - P.q[k] * x); }

/// Content in Z of Res_{t2}(G1, G2 + Z G3) at the fiber of P(s); zero
/// when every specialization of Z gives a vanishing resultant.
ZPoly fiber_content(const SurfaceParam& P, const std::array<Rational, 3>& x) {
  const BiPoly G1 = fiber_equation(P, 0, x[0]);
  const BiPoly G2 = fiber_equation(P, 1, x[1]);
  const BiPoly G3 = fiber_equation(P, 2, x[2]);
  if (G1.empty() || (G2.empty() && G3.empty())) throw AssumptionViolation("components not independent");
  const int a = deg(G1), b = std::max(deg(G2), deg(G3));
  ZPoly content;
  for (int z = 0; z <= a; ++z) {
    BiPoly B(static_cast<std::size_t>(b) + 1);
    for (int k = 0; k <= b; ++k) B[static_cast<std::size_t>(k)] = coeff(G2, k) + coeff(G3, k) * Integer(z);
    const ZPoly R = resultant_t2(G1, B, a, b);
    if (R.is_zero()) continue;
    content = content.is_zero() ? primitive_part(R) : gcd(content, R);
    if (content.degree() == 0) break;
  }
  return content;
}

ZPoly pair_resultant(const SurfaceParam& P, int i, int j, const Rational& xi, const Rational& xj) {
  const BiPoly Gi = fiber_equation(P, i, xi), Gj = fiber_equation(P, j, xj);
  return resultant_t2(Gi, Gj, deg(Gi), deg(Gj));
}

/// Specializations drawn per quantity.
constexpr std::size_t kDraws = 8;
constexpr int kPairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};

struct SideResult {
  int map_degree = 0;
  std::array<int, 3> pairs{};
};

/// Degree of the specialization-dependent part of a resultant family.
/// Each job is one specialization; the factor common to every result is
/// stripped and the remaining degree must agree between two samples, since
/// a special sample can gain or lose points. Zero results are skipped.
template <class Job>
int agreed_degree(const std::vector<Job>& jobs) {
  constexpr std::size_t kFirst = 3;
  std::array<std::future<ZPoly>, kFirst> running;
  for (std::size_t i = 0; i < kFirst; ++i) running[i] = std::async(std::launch::async, jobs[i]);
  std::vector<ZPoly> results;
  for (auto& f : running)
    if (ZPoly r = f.get(); !r.is_zero()) results.push_back(std::move(r));
  for (std::size_t next = kFirst;; ++next) {
    if (results.size() >= 2) {
      ZPoly common = results[0];
      for (const auto& r : results) common = gcd(common, r);
      std::map<int, int> votes;
      for (const auto& r : results) ++votes[r.degree() - common.degree()];
      for (const auto& [d, n] : votes)
        if (n >= 2) return d;
    }
    if (next == jobs.size()) throw AssumptionViolation("components not independent");
    if (ZPoly r = jobs[next](); !r.is_zero()) results.push_back(std::move(r));
  }
}

/// map degree and pair degrees of a settled parametrization; every random
/// choice is drawn before any work is dispatched.
SideResult side(const SurfaceParam& P, Sampler& sampler) {
  using Job = std::function<ZPoly()>;
  std::vector<Job> fiber_jobs;
  while (fiber_jobs.size() < kDraws) {
    const Rational s1 = sampler.fraction(15, 7), s2 = sampler.fraction(15, 7);
    if (auto x = P.point(s1, s2)) fiber_jobs.push_back([&P, x = *x] { return fiber_content(P, x); });
  }
  std::array<std::vector<Job>, 3> pair_jobs;
  for (int k = 0; k < 3; ++k)
    while (pair_jobs[k].size() < kDraws) {
      const Rational xi = sampler.fraction(50, 30), xj = sampler.fraction(50, 30);
      pair_jobs[k].push_back([&P, k, xi, xj] { return pair_resultant(P, kPairs[k][0], kPairs[k][1], xi, xj); });
    }

  auto fibers = std::async(std::launch::async, [&] { return agreed_degree(fiber_jobs); });
  std::array<std::future<int>, 3> pairs;
  for (int k = 0; k < 3; ++k) pairs[k] = std::async(std::launch::async, [&, k] { return agreed_degree(pair_jobs[k]); });
  SideResult r;
  r.map_degree = fibers.get();
  for (int k = 0; k < 3; ++k) r.pairs[k] = pairs[k].get();
  if (r.map_degree <= 0) throw AssumptionViolation("components not independent");
  return r;
}

}  // namespace

int degree_cost(const SurfaceParam& P) { return settle(P).param.max_total_degree(); }

namespace {

[[noreturn]] void refuse(const std::string& what, const SurfaceParam& P) {
  throw TooLarge(what + " needs the slow tier (estimated cost: component degree " + std::to_string(degree_cost(P)) +
                 "); rerun with --slow");
}

}  // namespace

void require_tier(const SphericalSupport& h, bool slow) {
  if (!slow && h.degree() > kDefaultHarmonicDegree)
    refuse("harmonic degree " + std::to_string(h.degree()), harmonic_surface(h));
}

void require_tier(const TrigPoly& p, bool slow) {
  if (!slow && p.degree() > kDefaultTrigDegree) refuse("trigonometric degree " + std::to_string(p.degree()), revolution_surface(p));
}

DegreeReport sendra_degrees(const SurfaceParam& P, const DegreeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Settled S = settle(P);
  const SurfaceParam mirrored = P.permuted(S.permutation).mirrored();
  const int c_T = infinity_shear(mirrored);

  Sampler sampler{std::mt19937_64(options.seed)};
  const SideResult s = side(S.param, sampler);
  const SideResult t = side(mirrored.sheared(c_T), sampler);
  if (s.map_degree != t.map_degree || s.pairs != t.pairs) throw AssumptionViolation("assumption failure");

  DegreeReport r;
  r.permutation = S.permutation;
  r.c_S = S.c;
  r.c_T = c_T;
  r.map_degree = s.map_degree;
  r.map_degree_T = t.map_degree;
  r.seed = options.seed;
  for (int k = 0; k < 3; ++k) {
    const int orig = S.permutation[k];
    r.deg_S_pairs[orig] = s.pairs[k];
    r.deg_T_pairs[orig] = t.pairs[k];
    r.deg[orig] = s.pairs[k];
    r.table_ratio[orig] = ratio(s.pairs[k], s.map_degree);
    r.section_ratio[orig] = ratio(s.pairs[k], s.map_degree);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace trigimpl
