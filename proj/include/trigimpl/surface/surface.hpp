#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "trigimpl/exact/multipoly.hpp"
#include "trigimpl/trig/legendre.hpp"
#include "trigimpl/trig/trigpoly.hpp"

namespace trigimpl {

/// The parameter ring (t1, t2).
const Variables& t1t2_variables();
/// The space ring (x, y, z).
const Variables& xyz_variables();

/// P(t1, t2) = (p_1/q_1, p_2/q_2, p_3/q_3), each quotient in lowest terms
/// with q_i normalized.
struct SurfaceParam {
  std::array<MultiPoly, 3> p;
  std::array<MultiPoly, 3> q;

  static SurfaceParam reduced(std::array<MultiPoly, 3> p, std::array<MultiPoly, 3> q);

  /// Exact point; std::nullopt when a denominator vanishes.
  std::optional<std::array<Rational, 3>> point(const Rational& t1, const Rational& t2) const;
  /// Components reordered: result component k is component perm[k].
  SurfaceParam permuted(const std::array<int, 3>& perm) const;
  /// t1 <-> t2.
  SurfaceParam mirrored() const;
  /// t1 -> t1 + c·t2.
  SurfaceParam sheared(int c) const;
  int max_total_degree() const;
};

/// X = P1(t2)/Q(t2), Y = P2(t2)·2t1/(Q(t2)(1+t1²)), Z = P2(t2)(1-t1²)/(Q(t2)(1+t1²)).
SurfaceParam revolution_surface(const TrigPoly& p);

/// Υ = h u + h_θ v + (h_φ / sin θ) w with θ <- t2 and φ <- t1 through the
/// half-angle substitution.
SurfaceParam harmonic_surface(const SphericalSupport& h);

enum class AssumptionClause { none, dependent_gradients, constant_third, point_at_infinity };
const char* to_string(AssumptionClause c);

struct AssumptionCheck {
  bool ok = true;
  AssumptionClause clause = AssumptionClause::none;
  /// Index of the offending numerator/denominator for point_at_infinity.
  std::string detail;
};

/// Checks the general assumptions as stated, without any repair.
AssumptionCheck general_assumptions_check(const SurfaceParam& P);

/// Result of the fix-ups: a permutation settling clauses (a) and (b), then
/// the smallest shear t1 -> t1 + c·t2 settling clause (c).
struct Settled {
  std::array<int, 3> permutation{0, 1, 2};
  int c = 0;
  SurfaceParam param;
};
/// Throws AssumptionViolation naming the clause that no fix-up repairs.
Settled settle(const SurfaceParam& P);
/// Smallest c >= 0 such that the sheared parametrization satisfies the
/// infinity clause.
int infinity_shear(const SurfaceParam& P);

struct DegreeOptions {
  std::uint64_t seed = 1;
};

struct DegreeReport {
  std::array<int, 3> permutation{0, 1, 2};
  int c_S = 0;
  int c_T = 0;
  /// deg P = deg_{t1} S, and the mirrored cross-check deg_{t2} T.
  int map_degree = 0;
  int map_degree_T = 0;
  /// deg_{t1} S_{j,k} for the pair excluding x, y, z respectively.
  std::array<int, 3> deg_S_pairs{};
  /// Same pairs on the mirrored side (deg_{t2} T_{j,k}).
  std::array<int, 3> deg_T_pairs{};
  /// deg_x, deg_y, deg_z as named by the tables (= deg S_{j,k}).
  std::array<int, 3> deg{};
  /// deg_k ÷ map_degree, the printed table columns.
  std::array<Rational, 3> table_ratio{};
  /// deg_{t1} S_{j,k} ÷ deg_{t1} S.
  std::array<Rational, 3> section_ratio{};
  std::uint64_t seed = 1;
  double seconds = 0;
};

/// Rough cost class reported by the tier guard: the largest total degree
/// among the settled components.
int degree_cost(const SurfaceParam& P);

/// Largest inputs of the default tier; bigger ones need the slow tier.
inline constexpr int kDefaultHarmonicDegree = 3;
inline constexpr int kDefaultTrigDegree = 5;
/// Throws TooLarge with an estimated cost when the input is beyond the
/// default tier and `slow` is not set.
void require_tier(const SphericalSupport& h, bool slow);
void require_tier(const TrigPoly& p, bool slow);

DegreeReport sendra_degrees(const SurfaceParam& P, const DegreeOptions& options = {});

/// Defining polynomial in (x, y, z) through the nested resultants with
/// auxiliary Z, W; only for components of total degree <= 4.
MultiPoly surface_implicitize_small(const SurfaceParam& P);

}  // namespace trigimpl
