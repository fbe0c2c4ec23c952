#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fourier/functions.hpp"

using namespace fourier;

namespace {

const double pi = std::numbers::pi;

// Central differences of a catalog function against its stated derivatives.
void expect_derivatives_consistent(const SmoothPeriodicFunction& f) {
  const double h = 1e-4;
  for (int k = 0; k < 64; ++k) {
    const double x = -0.99 + 1.98 * k / 63.0;
    const Complex fd1 = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
    const Complex fd2 = (f.eval(x + h) - 2.0 * f.eval(x) + f.eval(x - h)) / (h * h);
    EXPECT_LT(std::abs(fd1 - f.d1(x)), 1e-5 * (1 + std::abs(f.d1(x)))) << f.name << " x=" << x;
    EXPECT_LT(std::abs(fd2 - f.d2(x)), 1e-4 * (1 + std::abs(f.d2(x)))) << f.name << " x=" << x;
  }
}

}  // namespace

TEST(Bessel, MatchesStandardLibrary) {
  for (int m = 0; m <= 12; ++m) {
    const double ref = std::cyl_bessel_i(static_cast<double>(m), 1.0);
    EXPECT_NEAR(bessel_i_series(m, 1.0), ref, 1e-15 * std::max(1.0, ref)) << m;
    EXPECT_EQ(bessel_i_series(-m, 1.0), bessel_i_series(m, 1.0));
  }
  EXPECT_NEAR(bessel_i_series(3, 2.5), std::cyl_bessel_i(3.0, 2.5), 1e-14);
}

TEST(Catalog, ExpCosCoefficients) {
  const auto f = exp_cos();
  EXPECT_NEAR(f.exact_coefficient(0).real(), 2.5321317555040164, 1e-15);
  EXPECT_NEAR(f.exact_coefficient(1).real(), 1.1303182079849703, 1e-15);
  EXPECT_NEAR(f.exact_coefficient(-1).real(), 1.1303182079849703, 1e-15);
  EXPECT_EQ(f.endpoint_value, Complex(std::exp(-1.0)));
  EXPECT_FALSE(f.degree.has_value());
}

TEST(Catalog, TrigMonomial) {
  const auto f = trig_monomial(3);
  EXPECT_EQ(f.exact_coefficient(3), Complex(2.0));
  EXPECT_EQ(f.exact_coefficient(-3), Complex(0.0));
  EXPECT_EQ(f.endpoint_value, Complex(-1.0));
  EXPECT_EQ(f.degree, 3);
  EXPECT_EQ(trig_monomial(-2).degree, 2);
  EXPECT_NEAR(std::abs(f.eval(0.25) - std::polar(1.0, 0.75 * pi)), 0.0, 1e-15);
  EXPECT_THROW(trig_monomial(1'000'001), std::invalid_argument);
}

TEST(Catalog, Cosine) {
  const auto f = cosine(2);
  EXPECT_EQ(f.exact_coefficient(2), Complex(1.0));
  EXPECT_EQ(f.exact_coefficient(-2), Complex(1.0));
  EXPECT_EQ(f.exact_coefficient(0), Complex(0.0));
  EXPECT_THROW(cosine(0), std::invalid_argument);
}

TEST(Catalog, ConstantAndCombine) {
  EXPECT_EQ(constant(3.0).exact_coefficient(0), Complex(6.0));
  EXPECT_EQ(constant(3.0).degree, 0);
  const auto c = combine({{2.0, cosine(1)}, {Complex(0, 1), trig_monomial(-4)}});
  EXPECT_EQ(c.degree, 4);
  EXPECT_EQ(c.exact_coefficient(1), Complex(2.0));
  EXPECT_EQ(c.exact_coefficient(-4), Complex(0, 2));
  EXPECT_NEAR(std::abs(c.eval(0.3) - (2.0 * std::cos(0.3 * pi) +
                                      Complex(0, 1) * std::polar(1.0, -1.2 * pi))),
              0.0, 1e-14);
  EXPECT_FALSE(combine({{1.0, exp_cos()}, {1.0, cosine(1)}}).degree.has_value());
  EXPECT_THROW(combine({}), std::invalid_argument);
}

TEST(Catalog, DerivativesAgreeWithFiniteDifferences) {
  for (const auto& name : standard_catalog()) expect_derivatives_consistent(parse_function(name));
  expect_derivatives_consistent(parse_function("combo:0.5i*trig:2+-1*cos:3"));
}

TEST(Catalog, EveryEntryIsPeriodic) {
  for (const auto& name : standard_catalog()) {
    const auto f = parse_function(name);
    EXPECT_LE(std::abs(f.eval(1.0) - f.eval(-1.0)), 1e-12) << name;
    EXPECT_LE(std::abs(f.d1(1.0) - f.d1(-1.0)), 1e-12) << name;
    EXPECT_LE(std::abs(f.eval(1.0) - f.endpoint_value), 1e-12) << name;
  }
}

TEST(Catalog, ZeroEndpointEntriesVanish) {
  ASSERT_EQ(zero_endpoint_catalog().size(), 3u);
  for (const auto& name : zero_endpoint_catalog()) {
    const auto f = parse_function(name);
    EXPECT_LE(std::abs(f.eval(1.0)), 1e-12) << name;
    EXPECT_LE(std::abs(f.eval(-1.0)), 1e-12) << name;
  }
}

TEST(ParseFunction, Names) {
  EXPECT_EQ(parse_function("trig:-2").degree, 2);
  EXPECT_EQ(parse_function("cos:3").exact_coefficient(3), Complex(1.0));
  EXPECT_NEAR(parse_function("expcos").eval(0.0).real(), std::exp(1.0), 1e-15);
  const auto c = parse_function("combo:2*trig:1+0.5i*cos:1");
  EXPECT_EQ(c.exact_coefficient(1), Complex(4.0, 0.5));
  EXPECT_EQ(c.exact_coefficient(-1), Complex(0.0, 0.5));
  EXPECT_NEAR(parse_function("combo:1e-1*trig:0").eval(0.4).real(), 0.1, 1e-16);
}

TEST(ParseFunction, RejectsMalformedNames) {
  for (const char* bad : {"nosuch", "", "trig:", "trig:x", "trig:1.5", "cos:0", "cos:-1",
                          "expcos:1", "combo:", "combo:2", "combo:2*", "combo:*trig:1",
                          "combo:1*combo:1*trig:1", "combo:1*trig:1+", "trig:99999999999"}) {
    EXPECT_THROW(parse_function(bad), std::invalid_argument) << bad;
  }
}

// Pinned from an independent Python evaluation of the same norms (dense
// sampling plus composite Simpson).
TEST(BoundConstants, PinnedValues) {
  struct Case {
    const char* name;
    double H;
  };
  for (const Case c : {Case{"cos:1", 8.068583470577131}, Case{"cos:2", 21.42035224833984},
                       Case{"cos:3", 41.055306333270735}, Case{"trig:1", 9.861793017531921},
                       Case{"trig:-2", 28.593190436153204}, Case{"trig:2", 28.593190436153204},
                       Case{"trig:3", 57.19419225586385}, Case{"expcos", 11.484931691153943}}) {
    EXPECT_NEAR(bound_constants(parse_function(c.name)).H, c.H, 1e-9 * c.H) << c.name;
  }
}

TEST(BoundConstants, CosineClosedForm) {
  // h = cos(pi x) + 1: B = 2, D = pi, M = integral |pi^2 cos(pi x)| = 4 pi.
  const auto k = bound_constants(cosine(1));
  EXPECT_NEAR(k.B, 2.0, 1e-12);
  EXPECT_NEAR(k.D, pi, 1e-12);
  EXPECT_NEAR(k.M, 4 * pi, 1e-9);
  EXPECT_NEAR(k.W, k.M + 2 * k.B + 5 * k.D, 1e-12);
  EXPECT_NEAR(k.H, k.W / 4, 1e-12);
}

TEST(BoundConstants, ConstantHasZeroConstants) {
  const auto k = bound_constants(constant(Complex(2, -1)));
  EXPECT_EQ(k.B, 0.0);
  EXPECT_EQ(k.D, 0.0);
  EXPECT_EQ(k.M, 0.0);
  EXPECT_EQ(k.H, 0.0);
}

TEST(BoundConstants, Homogeneous) {
  for (const auto& name : standard_catalog()) {
    const auto f = parse_function(name);
    const auto scaled = combine({{Complex(0, -3), f}});
    const auto a = bound_constants(f), b = bound_constants(scaled);
    EXPECT_NEAR(b.B, 3 * a.B, 1e-12 * (1 + a.B)) << name;
    EXPECT_NEAR(b.D, 3 * a.D, 1e-12 * (1 + a.D)) << name;
    EXPECT_NEAR(b.M, 3 * a.M, 1e-10 * (1 + a.M)) << name;
    EXPECT_NEAR(b.H, 3 * a.H, 1e-10 * (1 + a.H)) << name;
  }
}

TEST(BoundConstants, OffsetOverload) {
  const auto f = exp_cos();
  const auto a = bound_constants(f);
  const auto b = bound_constants(f, f.endpoint_value);
  EXPECT_EQ(a.H, b.H);
  EXPECT_GT(bound_constants(f, 0.0).B, a.B);
}
