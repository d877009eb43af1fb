#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigimpl/trig/trigpoly.hpp"

namespace trigimpl {

enum class CurveKind { circle, constant_width, rotor, generic };
const char* to_string(CurveKind k);

struct Classification {
  CurveKind kind = CurveKind::generic;
  /// Width, set for constant_width.
  Rational alpha;
  /// Polygon order and apothem, set for rotor.
  int n = 0;
  Rational rho;
  /// Harmonic indices that justify the kind.
  std::vector<int> witness;
  /// Every n >= 3 whose lattice {kn ± 1} contains the spectrum.
  std::vector<int> admissible_n;
  /// p(θ) + p(θ + π) == alpha, coefficient-wise (constant_width only).
  bool antipodal_identity = false;
};

Classification classify(const TrigPoly& p);

struct SignSample {
  Rational t;
  int sign = 0;
};

/// Outcome of deciding ρ = p + p'' >= 0 exactly.
struct ConvexityCertificate {
  bool convex = false;
  /// ρ(θ)(1+t²)^N as a polynomial in t = tan(θ/2), scaled by a positive
  /// integer.
  ZPoly numerator;
  int real_roots = 0;
  /// Sign of the numerator at one rational point in every gap between
  /// consecutive real roots and beyond the extreme roots.
  std::vector<SignSample> sign_table;
  /// ρ(π), the point the half-angle chart misses.
  Rational rho_at_pi;
  /// Some t with ρ(θ(t)) < 0, or std::nullopt with witness_at_pi when the
  /// only negative point is θ = π.
  std::optional<Rational> witness_t;
  bool witness_at_pi = false;
};

ConvexityCertificate is_convex(const TrigPoly& p);

/// Number of distinct real roots of a square-free polynomial and one
/// rational point strictly between each pair of neighbours (and beyond
/// both ends), ascending.
std::vector<Rational> real_root_separators(const ZPoly& square_free, int& root_count);

}  // namespace trigimpl
