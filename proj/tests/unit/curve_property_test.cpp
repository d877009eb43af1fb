#include <gtest/gtest.h>

#include "../common/random_support.hpp"
#include "test_support.hpp"
#include "trigimpl/curve/curve.hpp"
#include "trigimpl/exact/gcd.hpp"

using namespace trigimpl;

namespace {

/// γ(θ + π) == γ(θ) at the sample t, where θ + π has half-angle -1/t.
bool antipodal_point_equal(const TrigPoly& p, const RationalCurveParam& c, const Rational& t) {
  auto here = c.point(t);
  auto there = t == 0 ? point_at_pi(p) : c.point(Rational(-1) / t);
  return here == there;
}

class DegreeLaw : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(DegreeLaw, TotalAndPartialDegrees) {
  const TrigPoly p = testutil::suite_member(testutil::kSuiteSeed, GetParam());
  SCOPED_TRACE(p.to_string());
  const int n = p.degree();
  ASSERT_GE(n, 2);
  auto rep = implicitize(p);
  const bool odd = parity_class(p) == Parity::odd_only;
  EXPECT_EQ(rep.total_degree, odd ? n + 1 : 2 * n + 2);
  EXPECT_EQ(rep.total_degree, rep.predicted.degree);

  auto c = rational_parametrization(p);
  // deg P2 can reach 2N+2, see the dedicated parametrization test
  EXPECT_LE(c.P1.degree(0), 2 * n + 2);
  EXPECT_LE(c.P2.degree(0), 2 * n + 2);
  if (rep.tracing_index == 1) {
    EXPECT_EQ(rep.deg_y, std::max(c.P1.degree(0), c.Q.degree(0)));
    EXPECT_EQ(rep.deg_x, std::max(c.P2.degree(0), c.Q.degree(0)));
  } else {
    EXPECT_EQ(std::max(rep.deg_x, rep.deg_y), (2 * n + 2) / 2);
  }

  // square-free: gcd(f, f_x) free of x
  EXPECT_EQ(gcd(rep.f, rep.f.derivative(0)).degree(0), 0);

  int equal = 0;
  for (const auto& t : vanishing_samples()) equal += antipodal_point_equal(p, c, t);
  if (odd) {
    EXPECT_EQ(equal, 20);
  } else {
    EXPECT_LT(equal, 20);
  }
}

INSTANTIATE_TEST_SUITE_P(Suite, DegreeLaw, ::testing::Range(0, testutil::kSuiteSize));

TEST(DegreeLaw, SuiteCoversBothParities) {
  int odd = 0;
  for (int i = 0; i < testutil::kSuiteSize; ++i)
    odd += parity_class(testutil::suite_member(testutil::kSuiteSeed, i)) == Parity::odd_only;
  EXPECT_GE(odd, 5);
  EXPECT_LE(odd, 45);
}

TEST(DegreeLaw, MirrorSymmetryForCosineSpectra) {
  for (int i = 0; i < 10; ++i) {
    TrigPoly p = testutil::suite_member(testutil::kSuiteSeed + 1, i);
    TrigPoly cos_only(p.a0());
    for (int k = 1; k <= p.degree(); ++k) cos_only.set_cos(k, p.a(k) + p.b(k));
    if (cos_only.degree() < 2) continue;
    auto rep = implicitize(cos_only);
    MultiPoly mirrored = rep.f.substitute(1, -MultiPoly::variable(xy_variables(), 1));
    EXPECT_EQ(normalized(mirrored), rep.f) << cos_only.to_string();
  }
}
