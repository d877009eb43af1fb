#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "trigimpl/errors.hpp"
#include "trigimpl/trig/classify.hpp"
#include "trigimpl/trig/legendre.hpp"
#include "trigimpl/trig/support_file.hpp"
#include "trigimpl/trig/trigpoly.hpp"

using namespace trigimpl;

namespace {

TrigPoly rabinowitz() {
  TrigPoly p(Rational(1, 2));
  p.set_cos(3, Rational(1, 16));
  return p;
}

TrigPoly rotor3() {
  TrigPoly p(Rational(1, 2));
  p.set_cos(2, Rational(1, 6));
  return p;
}

GaussianRational at_i(const MultiPoly& p) {
  std::map<std::string, GaussianRational> pt{{"t", GaussianRational::i()}};
  return p.evaluate(pt);
}

double min_rho_sampled(const TrigPoly& p) {
  const TrigPoly rho = curvature_radius(p);
  double m = 1e300;
  for (int i = 0; i < 10000; ++i) m = std::min(m, rho(2 * std::numbers::pi * i / 10000.0));
  return m;
}

}  // namespace

TEST(Chebyshev, LowOrderForms) {
  EXPECT_EQ(cheb_C(1).to_string(), "-t^2 + 1");
  EXPECT_EQ(cheb_S(1).to_string(), "2*t");
  EXPECT_TRUE(cheb_S(0).is_zero());
  EXPECT_EQ(cheb_C(0).to_string(), "1");
  EXPECT_THROW(cheb_C(-1), MathError);
}

TEST(Chebyshev, PythagoreanIdentityAndDegrees) {
  const ZPoly one_plus_t2(std::vector<Integer>{1, 0, 1});
  for (int n = 0; n <= 8; ++n) {
    ZPoly c = cheb_C_dense(n), s = cheb_S_dense(n);
    EXPECT_EQ(c * c + s * s, one_plus_t2.pow(2 * n)) << n;
    EXPECT_EQ(c.degree(), 2 * n);
    // the t^{2n} coefficient of S_n is Im(i^{2n}) = 0
    if (n > 0) EXPECT_EQ(s.degree(), 2 * n - 1);
  }
}

TEST(Chebyshev, MatchesBinomialExpansionOfOnePlusIt) {
  // C_n + i S_n = (1 + i t)^{2n}
  for (int n = 1; n <= 8; ++n) {
    ZPoly c = cheb_C_dense(n), s = cheb_S_dense(n);
    for (int j = 0; j <= 2 * n; ++j) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), 2 * n, j);
      Integer re = (j % 2 == 0) ? ((j / 2) % 2 ? -b : b) : Integer(0);
      Integer im = (j % 2 == 1) ? ((j / 2) % 2 ? -b : b) : Integer(0);
      EXPECT_EQ(c.coeff(j), re);
      EXPECT_EQ(s.coeff(j), im);
    }
  }
}

TEST(Chebyshev, GaussianPointValues) {
  for (int n = 1; n <= 8; ++n) {
    Rational v = Rational(Integer(1) << (2 * n - 1));
    EXPECT_EQ(at_i(cheb_C(n)), GaussianRational(v)) << n;
    EXPECT_EQ(at_i(cheb_S(n)), GaussianRational(Rational(0), v)) << n;
  }
  EXPECT_EQ(at_i(cheb_C(3)), GaussianRational(Rational(32)));
}

TEST(Chebyshev, FloatingCrossCheck) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Rational t = testutil::random_rational(rng, 40, 13);
    double td = t.get_d(), theta = 2 * std::atan(td);
    for (int n = 1; n <= 6; ++n) {
      double den = std::pow(1 + td * td, n);
      EXPECT_NEAR(to_rational(cheb_C_dense(n))(t).get_d() / den, std::cos(n * theta), 1e-12);
      EXPECT_NEAR(to_rational(cheb_S_dense(n))(t).get_d() / den, std::sin(n * theta), 1e-12);
    }
  }
}

TEST(TrigPoly, TrimsTrailingHarmonics) {
  TrigPoly p(Rational(1));
  p.set_cos(4, Rational(2));
  EXPECT_EQ(p.degree(), 4);
  p.set_cos(4, Rational(0));
  EXPECT_EQ(p.degree(), 0);
  EXPECT_TRUE(p.is_constant());
  EXPECT_EQ(rabinowitz().to_string(), "1/2 + 1/16*cos(3θ)");
}

TEST(TrigPoly, CanonicalizesInputs) {
  TrigPoly p(Rational(12, 3));
  p.set_cos(2, Rational(-4, 72));
  TrigPoly q(Rational(4));
  q.set_cos(2, Rational(-1, 18));
  EXPECT_EQ(p, q);
  EXPECT_EQ(p.to_string(), "4 - 1/18*cos(2θ)");
}

TEST(TrigPoly, ExactValueAtRationalAngle) {
  // θ with (cos, sin) = (3/5, 4/5): cos 3θ = 4c³ - 3c
  TrigPoly p = TrigPoly::cosine(3);
  Rational c(3, 5);
  EXPECT_EQ(p.value_at(c, Rational(4, 5)), 4 * c * c * c - 3 * c);
  EXPECT_NEAR(p(std::atan2(0.8, 0.6)), Rational(4 * c * c * c - 3 * c).get_d(), 1e-14);
}

TEST(CurvatureRadius, Examples) {
  TrigPoly r = curvature_radius(rabinowitz());
  TrigPoly want(Rational(1, 2));
  want.set_cos(3, Rational(-1, 2));
  EXPECT_EQ(r, want);
  TrigPoly r2 = curvature_radius(rotor3());
  TrigPoly want2(Rational(1, 2));
  want2.set_cos(2, Rational(-1, 2));
  EXPECT_EQ(r2, want2);
  TrigPoly circle(Rational(3));
  circle.set_cos(1, Rational(5));
  circle.set_sin(1, Rational(-2));
  EXPECT_EQ(curvature_radius(circle), TrigPoly(Rational(3)));
}

TEST(CurvatureRadius, KernelIsExactlyDegreeOne) {
  for (int k = 1; k <= 6; ++k) {
    bool vanishes = curvature_radius(TrigPoly::cosine(k)).is_zero() && curvature_radius(TrigPoly::sine(k)).is_zero();
    EXPECT_EQ(vanishes, k == 1) << k;
  }
  EXPECT_EQ(curvature_radius(rabinowitz() + rotor3()), curvature_radius(rabinowitz()) + curvature_radius(rotor3()));
}

TEST(Convexity, WorkedExamples) {
  auto c = is_convex(rabinowitz());
  EXPECT_TRUE(c.convex);
  auto n = is_convex(TrigPoly::cosine(3));
  EXPECT_FALSE(n.convex);
  ASSERT_TRUE(n.witness_t.has_value());
  EXPECT_EQ(*n.witness_t, 0);
  EXPECT_EQ(curvature_radius(TrigPoly::cosine(3)).value_at(Rational(1), Rational(0)), -8);
  EXPECT_TRUE(is_convex(TrigPoly(Rational(1))).convex);
  EXPECT_TRUE(is_convex(rotor3()).convex);
}

TEST(Convexity, NegativeOnlyAtPi) {
  // ρ = 1 + cos θ·(stuff) style: p = 1 - 1/3 cos 2θ gives ρ = 1 + cos 2θ >= 0 (touching zero)
  TrigPoly touching(Rational(1));
  touching.set_cos(2, Rational(-1, 3));
  EXPECT_TRUE(is_convex(touching).convex);
  // ρ(θ) = 1/2 - 1/2 cos 3θ... shifted so the minimum sits at θ = π only
  TrigPoly p(Rational(1, 2));
  p.set_cos(3, Rational(-1, 16) * Rational(11, 10));  // ρ = 1/2 + 11/20 cos 3θ, negative at π
  auto c = is_convex(p);
  EXPECT_FALSE(c.convex);
  EXPECT_LT(c.rho_at_pi, 0);
}

TEST(Convexity, AgreesWithDenseSampling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    TrigPoly p(Rational(1) + testutil::random_rational(rng, 3, 4));
    for (int k = 2; k <= 5; ++k) {
      p.set_cos(k, testutil::random_rational(rng, 1, 40) / (k * k));
      p.set_sin(k, testutil::random_rational(rng, 1, 40) / (k * k));
    }
    const double sampled = min_rho_sampled(p);
    auto cert = is_convex(p);
    if (sampled < -1e-9) EXPECT_FALSE(cert.convex) << p.to_string();
    if (sampled > 1e-9) EXPECT_TRUE(cert.convex) << p.to_string();
  }
}

TEST(Classify, WorkedExamples) {
  auto cw = classify(rabinowitz());
  EXPECT_EQ(cw.kind, CurveKind::constant_width);
  EXPECT_EQ(cw.alpha, 1);
  EXPECT_TRUE(cw.antipodal_identity);
  EXPECT_EQ(cw.admissible_n, std::vector<int>{4});

  auto rot = classify(rotor3());
  EXPECT_EQ(rot.kind, CurveKind::rotor);
  EXPECT_EQ(rot.n, 3);
  EXPECT_EQ(rot.rho, Rational(1, 2));

  TrigPoly circle(Rational(2));
  circle.set_cos(1, Rational(1));
  circle.set_sin(1, Rational(-1));
  EXPECT_EQ(classify(circle).kind, CurveKind::circle);

  TrigPoly g(Rational(1));
  g.set_cos(2, Rational(1, 10));
  g.set_cos(3, Rational(1, 100));
  EXPECT_EQ(classify(g).kind, CurveKind::generic);
}

TEST(Classify, RotorPicksLargestLattice) {
  // spectrum {4, 6}: k ≡ ±1 mod 5 for both, and mod 3 fails for 6
  TrigPoly p(Rational(1));
  p.set_cos(4, Rational(1, 100));
  p.set_sin(6, Rational(1, 200));
  auto c = classify(p);
  EXPECT_EQ(c.kind, CurveKind::rotor);
  EXPECT_EQ(c.n, 5);
  // spectrum {2, 4} = {3 - 1, 3 + 1}
  TrigPoly t(Rational(1));
  t.set_cos(2, Rational(1, 10));
  t.set_cos(4, Rational(1, 100));
  EXPECT_EQ(classify(t).n, 3);
  // spectrum {2, 3}: no n >= 3 fits
  TrigPoly q(Rational(1));
  q.set_cos(2, Rational(1, 10));
  q.set_cos(3, Rational(1, 100));
  EXPECT_TRUE(classify(q).admissible_n.empty());
  // spectrum {5, 7}: odd, with n = 3, 4, 6 admissible
  TrigPoly s = TrigPoly(Rational(1)) + TrigPoly::cosine(5, Rational(1, 50)) + TrigPoly::cosine(7, Rational(1, 90));
  auto cs = classify(s);
  EXPECT_EQ(cs.kind, CurveKind::constant_width);
  EXPECT_EQ(cs.admissible_n, (std::vector<int>{3, 4, 6}));
}

TEST(Classify, ConstantWidthImpliesAntipodalIdentity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    TrigPoly p(Rational(1) + abs(testutil::random_rational(rng, 5, 3)));
    for (int k = 3; k <= 9; k += 2) p.set_cos(k, testutil::random_rational(rng, 2, 50));
    p.set_sin(9, Rational(1, 99));
    auto c = classify(p);
    ASSERT_EQ(c.kind, CurveKind::constant_width);
    EXPECT_TRUE(c.antipodal_identity);
    EXPECT_EQ(p + p.shifted_by_pi(), TrigPoly(c.alpha));
  }
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity_class(rabinowitz()), Parity::has_even_harmonic);
  EXPECT_EQ(parity_class(TrigPoly::cosine(3)), Parity::odd_only);
  EXPECT_EQ(parity_class(TrigPoly::cosine(3) + TrigPoly::sine(5)), Parity::odd_only);
  EXPECT_EQ(parity_class(TrigPoly::cosine(4) + TrigPoly::sine(3)), Parity::has_even_harmonic);
}

TEST(Legendre, WorkedExamples) {
  auto p00 = legendre_assoc(0, 0);
  EXPECT_EQ(p00.parity, 0);
  EXPECT_EQ(p00.poly, QPoly(Rational(1)));
  auto p10 = legendre_assoc(1, 0);
  EXPECT_EQ(p10.poly, QPoly(std::vector<Rational>{0, 1}));
  auto p11 = legendre_assoc(1, 1);
  EXPECT_EQ(p11.parity, 1);
  EXPECT_EQ(p11.poly, QPoly(Rational(-1)));
  auto p20 = legendre_assoc(2, 0);
  EXPECT_EQ(p20.poly, QPoly(std::vector<Rational>{Rational(-1, 2), 0, Rational(3, 2)}));
  EXPECT_THROW(legendre_assoc(1, 2), MathError);
  EXPECT_THROW(legendre_assoc(-1, 0), MathError);
}

TEST(Legendre, MatchesStandardFunctionsWithPhase) {
  // std::assoc_legendre omits the (-1)^m phase carried by the displayed formula
  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= l; ++m) {
      auto f = legendre_assoc(l, m);
      for (double u : {-0.9, -0.3, 0.0, 0.25, 0.7}) {
        double s = std::sqrt(1 - u * u);
        double ours = (f.parity ? s : 1.0) * f.poly(Rational(u)).get_d();
        double ref = (m % 2 ? -1.0 : 1.0) * std::assoc_legendre(l, m, u);
        EXPECT_NEAR(ours, ref, 1e-9 * (1 + std::abs(ref))) << l << " " << m << " " << u;
      }
    }
  }
}

TEST(SupportFile, ParsesCurveFile) {
  TrigPoly p = parse_support("# Rabinowitz\na0 = 1/2\n  cos 3 = 1/16\nsin5=-2/7\n\n");
  EXPECT_EQ(p.a0(), Rational(1, 2));
  EXPECT_EQ(p.a(3), Rational(1, 16));
  EXPECT_EQ(p.b(5), Rational(-2, 7));
  EXPECT_EQ(parse_support(format_support(p)), p);
  EXPECT_TRUE(parse_support("").is_zero());
  EXPECT_EQ(parse_support("cos 3 = 0.0625").a(3), Rational(1, 16));
}

TEST(SupportFile, RejectsUnknownKeysWithLocation) {
  try {
    parse_support("a0 = 1\n  tan 3 = 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_support("cos 3 = 1/x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_support("cos 0 = 1"), ParseError);
  EXPECT_THROW(parse_support("a1 = 1"), ParseError);
  EXPECT_THROW(parse_support("cos 2 = 1\ncos 2 = 3"), ParseError);
  EXPECT_THROW(parse_support("cos 2 1"), ParseError);
}

TEST(SupportFile, ParsesSphericalFile) {
  SphericalSupport h = parse_spherical("Y 3 1 a = 1/10\nY 3 1 b = 0\nY 0 0 a = 1\n");
  EXPECT_EQ(h.degree(), 3);
  EXPECT_EQ(h.coefficients().at({3, 1}).first, Rational(1, 10));
  EXPECT_EQ(parse_spherical(format_spherical(h)), h);
  EXPECT_THROW(parse_spherical("Y 1 2 a = 1"), ParseError);
  EXPECT_THROW(parse_spherical("Y 2 0 b = 1"), ParseError);
  EXPECT_THROW(parse_spherical("X 2 0 a = 1"), ParseError);
  EXPECT_THROW(parse_spherical("Y 2 0 c = 1"), ParseError);
}
