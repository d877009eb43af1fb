#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trigimpl/exact/multipoly.hpp"
#include "trigimpl/exact/upoly.hpp"
#include "trigimpl/trig/classify.hpp"
#include "trigimpl/trig/trigpoly.hpp"

namespace trigimpl {

/// γ(θ(t)) = (P1(t)/Q(t), P2(t)/Q(t)) with t = tan(θ/2), in lowest terms.
struct RationalCurveParam {
  MultiPoly P1, P2, Q;  // in the single variable "t"
  int N = 0;

  QPoly p1() const;
  QPoly p2() const;
  QPoly q() const;
  /// Exact point at parameter t.
  std::pair<Rational, Rational> point(const Rational& t) const;
};

/// Builds P1, P2 over Q = (1+t²)^{N+1} from the half-angle closed forms and
/// cancels any common factor (only possible for N <= 1).
RationalCurveParam rational_parametrization(const TrigPoly& p);

/// γ(π) = (-p(π), -p'(π)), the point the half-angle chart misses.
std::pair<Rational, Rational> point_at_pi(const TrigPoly& p);

/// 1 when some even harmonic (index 0 included) is present, 2 otherwise.
int tracing_index(const TrigPoly& p);

struct PredictedDegree {
  int degree = 0;
  bool circle = false;
};
PredictedDegree predicted_total_degree(const TrigPoly& p);

struct ImplicitReport {
  TrigPoly support;
  MultiPoly f;  // in (x, y), normalized
  int tracing_index = 1;
  int total_degree = 0;
  int deg_x = 0;
  int deg_y = 0;
  PredictedDegree predicted;
  Classification classification;
};

ImplicitReport implicitize(const TrigPoly& p);

/// Fixed parameter list used for the exact vanishing checks.
std::span<const Rational> vanishing_samples();

/// First sample t with f(γ(t)) != 0, std::nullopt when f vanishes on all.
std::optional<Rational> verify_vanishing(const MultiPoly& f, const TrigPoly& p, std::span<const Rational> samples);

/// The plane ring (x, y).
const Variables& xy_variables();

}  // namespace trigimpl
