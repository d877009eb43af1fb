#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trigimpl/errors.hpp"
#include "trigimpl/exact/gcd.hpp"
#include "trigimpl/exact/upoly.hpp"

using namespace trigimpl;

namespace {
const Variables XT{"x", "t"};
const Variables XY{"x", "y"};
MultiPoly P(const char* s, const Variables& v = XT) { return MultiPoly::parse(s, v); }

bool is_square_free(const MultiPoly& f) {
  MultiPoly g = gcd(f, f.derivative(0));
  g = gcd(g, f.derivative(1));
  return g.is_constant();
}
}  // namespace

TEST(Gcd, BasicExamples) {
  EXPECT_EQ(poly_gcd(P("t^2 - 1"), P("t - 1"), "t"), P("t - 1"));
  EXPECT_EQ(poly_gcd(MultiPoly(XT), P("t^3"), "t"), P("t^3"));
  EXPECT_THROW(gcd(MultiPoly(XT), MultiPoly(XT)), MathError);
  EXPECT_EQ(gcd(P("x^2*t - x*t"), P("x^2 - 1")), P("x - 1"));
  EXPECT_EQ(gcd(P("2*x + 2"), P("3")), P("1"));
}

TEST(Gcd, PolyGcdDropsFactorsFreeOfVariable) {
  MultiPoly a = P("x*t + x");
  EXPECT_EQ(poly_gcd(a, P("x*t^2 - x"), "t"), P("t + 1"));
}

TEST(Gcd, ContentAndPrimitivePart) {
  MultiPoly p = P("2*x*t^2 + 4*x*t");
  EXPECT_EQ(content(p, 1), P("2*x"));
  EXPECT_EQ(primitive_part(p, 1), P("t^2 + 2*t"));
  EXPECT_EQ(content(P("t + 1"), 1), P("1"));
  EXPECT_THROW(content(MultiPoly(XT), 1), MathError);
  MultiPoly q = P("-3/2*x^2*t + 3*x*t - 6*x^2");
  EXPECT_EQ(content(q, 1) * primitive_part(q, 1), q);
}

TEST(Gcd, RandomCommonFactorIsRecovered) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    MultiPoly g = testutil::random_poly(XY, 2, 0.6, 5, rng);
    MultiPoly a = testutil::random_poly(XY, 3, 0.5, 5, rng);
    MultiPoly b = testutil::random_poly(XY, 3, 0.5, 5, rng);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    MultiPoly d = gcd(a * g, b * g);
    EXPECT_TRUE(try_divide(d, g).has_value()) << g.to_string();
    EXPECT_TRUE(try_divide(a * g, d).has_value());
    EXPECT_TRUE(try_divide(b * g, d).has_value());
    EXPECT_EQ(d, normalized(g * gcd(a, b)));
  }
}

TEST(Gcd, UnivariateIntegerGcd) {
  ZPoly a(std::vector<Integer>{-1, 0, 1});  // t^2 - 1
  ZPoly b(std::vector<Integer>{2, -2});     // -2t + 2
  EXPECT_EQ(gcd(a, b), ZPoly(std::vector<Integer>{-1, 1}));
  ZPoly sq = a * a * ZPoly(std::vector<Integer>{3, 1});
  EXPECT_EQ(square_free_part(sq), primitive_part(a * ZPoly(std::vector<Integer>{3, 1})));
}

TEST(RthRoot, ExamplesAndErrors) {
  EXPECT_EQ(rth_root(P("x^2 + 2*x*y + y^2", XY), 2), P("x + y", XY));
  EXPECT_EQ(rth_root(P("4*x^2 + 8*x*y + 4*y^2", XY), 2), P("x + y", XY));
  EXPECT_THROW(rth_root(P("x^2 + 1", XY), 3), MathError);
  EXPECT_THROW(rth_root(P("x^2 + y", XY), 2), MathError);
  EXPECT_EQ(rth_root(P("x + y", XY), 1), P("x + y", XY));
}

TEST(RthRoot, RoundTripOnRandomSquareFreePolynomials) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 25) {
    MultiPoly f = testutil::random_poly(XY, 4, 0.5, 6, rng);
    if (f.total_degree() < 1 || !is_square_free(f)) continue;
    ++checked;
    for (unsigned r : {2u, 3u}) {
      MultiPoly p = f.pow(r) * Rational(-5, 3);
      EXPECT_EQ(rth_root(p, r), normalized(f)) << f.to_string();
    }
  }
}
