#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "scatlen/extraction.hpp"
#include "test_support.hpp"

using namespace scatlen;
using scatlen::testing::golden;
using scatlen::testing::rel_diff;

namespace {

RadialSolution asymptotic(Dimension dim, double a, double r, double norm) {
  RadialSolution s;
  s.dim = dim;
  s.r_end = r;
  if (dim == Dimension::two) {
    s.value = norm * (std::log(2.0 * r / a) - kEulerGamma);
    s.derivative = norm / r;
  } else {
    s.value = norm * (r - a);
    s.derivative = norm;
  }
  return s;
}

}  // namespace

class ExtractorIdentity : public ::testing::TestWithParam<Dimension> {};

TEST_P(ExtractorIdentity, ExactAsymptoticFormReturnsItsScatteringLength) {
  const Dimension dim = GetParam();
  const double as[] = {0.3, 2.5, 40.0};
  for (double a : as) {
    for (double r : {15.0, 60.0, 250.0}) {
      for (double norm : {1.0, -3e-7, 2e120}) {
        const auto got = extract(asymptotic(dim, a, r, norm));
        EXPECT_LT(rel_diff(got.value, a), 1e-12) << "a=" << a << " r=" << r;
        EXPECT_FALSE(got.near_pole);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllDimensions, ExtractorIdentity,
                         ::testing::Values(Dimension::one, Dimension::two, Dimension::three));

TEST(Extract1D3D, NegativeScatteringLength) {
  for (double r : {12.0, 30.0, 90.0}) {
    EXPECT_NEAR(extract(asymptotic(Dimension::three, -1.75, r, 0.4)).value, -1.75, 1e-12);
    EXPECT_NEAR(extract(asymptotic(Dimension::one, -0.5, r, 2.0)).value, -0.5, 1e-12);
  }
}

TEST(Extract1D3D, VanishingDerivativeIsAPoleNotAnError) {
  RadialSolution s;
  s.dim = Dimension::three;
  s.r_end = 10.0;
  s.value = 2.0;
  s.derivative = 0.0;
  const auto a = extract(s);
  EXPECT_TRUE(std::isinf(a.value));
  EXPECT_TRUE(a.near_pole);
  EXPECT_FALSE(a.diagnostic.empty());
}

TEST(Extract2D, VanishingDerivativeGivesPositiveInfinity) {
  RadialSolution s;
  s.dim = Dimension::two;
  s.r_end = 10.0;
  s.value = -1.0;
  s.derivative = 0.0;
  const auto a = extract_2d(s);
  EXPECT_EQ(a.value, std::numeric_limits<double>::infinity());
  EXPECT_TRUE(a.near_pole);
}

TEST(Extract2D, OverflowIsClampedButLogSurvives) {
  RadialSolution s;
  s.dim = Dimension::two;
  s.r_end = 10.0;
  s.value = -2000.0;
  s.derivative = 0.1;
  const auto a = extract_2d(s);
  EXPECT_EQ(a.value, std::numeric_limits<double>::max());
  EXPECT_NEAR(a.log_value, std::log(20.0) + 2000.0 - kEulerGamma, 1e-9);
  EXPECT_FALSE(a.diagnostic.empty());
}

TEST(Extract, RejectsMismatchedDimension) {
  RadialSolution s;
  s.dim = Dimension::two;
  EXPECT_THROW(extract_1d3d(s, Dimension::three), std::invalid_argument);
  s.dim = Dimension::one;
  EXPECT_THROW(extract_2d(s), std::invalid_argument);
}

TEST(CutoffLadder, ScalesWithRMax) {
  SolverConfig c;
  c.r_max = 5.0;
  const auto l = cutoff_ladder(c);
  EXPECT_DOUBLE_EQ(l[0], 3.0);
  EXPECT_DOUBLE_EQ(l[2], 5.0);
  EXPECT_DOUBLE_EQ(l[3], 6.0);
}

TEST(ScatteringLength, MatchesHighPrecisionGoldens) {
  int checked = 0;
  for (const auto& g : scatlen::testing::golden()) {
    if (g.quantity != "a_s") continue;
    SolverConfig cfg;
    cfg.r_max = g.params["r"].get<double>();
    const auto a = scattering_length(g.dim, g.eta, cfg);
    EXPECT_LT(rel_diff(a.value, g.value), g.rel_tol) << g.id;
    EXPECT_TRUE(a.converged) << g.id;
    EXPECT_FALSE(a.near_pole) << g.id;
    ++checked;
  }
  EXPECT_GE(checked, 24);
}

TEST(ScatteringLength, ZeroCouplingGivesZeroIn3D) {
  const auto a = scattering_length(Dimension::three, 0.0);
  EXPECT_NEAR(a.value, 0.0, 1e-12);
  EXPECT_TRUE(a.converged);
}

TEST(ScatteringLength, InsensitiveToCutoffBeyondTheWell) {
  for (Dimension dim : {Dimension::one, Dimension::two, Dimension::three}) {
    SolverConfig near, far;
    near.r_max = 8.0;
    far.r_max = 14.0;
    const auto a = scattering_length(dim, 3.0, near);
    const auto b = scattering_length(dim, 3.0, far);
    EXPECT_LT(relative_error(a, b), 1e-9) << to_int(dim);
  }
}

TEST(ScatteringLength, PositiveIn2DForAnyCoupling) {
  for (double eta : {-8.0, -1.0, 0.05, 0.7, 4.0, 10.9, 11.3, 30.0}) {
    const auto a = scattering_length(Dimension::two, eta);
    EXPECT_GT(a.value, 0.0) << eta;
    EXPECT_NEAR(std::log(a.value), a.log_value, 1e-12 * std::max(1.0, std::abs(a.log_value)));
  }
}

TEST(ScatteringLength, WeakCoupling2DStaysUsableThroughLog) {
  const auto a = scattering_length(Dimension::two, 1e-3);
  // ln a ~ 2/eta: far beyond anything a double can hold.
  EXPECT_EQ(a.value, std::numeric_limits<double>::max());
  EXPECT_NEAR(a.log_value - 2.0 / 1e-3, 1.5 * std::log(2.0) - 1.5 * kEulerGamma, 1e-2);
}

TEST(ScatteringLength, ErrorEstimateIsSmallAwayFromPoles) {
  const auto a = scattering_length(Dimension::one, 2.0);
  EXPECT_LT(a.err_estimate, 1e-9);
}

TEST(ScatteringLengths, BatchPreservesOrderAndMatchesSingleCalls) {
  const std::vector<double> etas{5.0, -1.0, 0.5, 13.0, 2.0};
  const auto batch = scattering_lengths(Dimension::three, etas);
  ASSERT_EQ(batch.size(), etas.size());
  for (std::size_t i = 0; i < etas.size(); ++i)
    EXPECT_EQ(batch[i].value, scattering_length(Dimension::three, etas[i]).value);
}

TEST(ScatteringLengths, SolverFailureBecomesAFlaggedRow) {
  SolverConfig c;
  c.max_steps = 2;
  const std::vector<double> etas{1.0};
  const auto rows = scattering_lengths(Dimension::three, etas, c);
  EXPECT_FALSE(rows[0].converged);
  EXPECT_TRUE(std::isnan(rows[0].value));
  EXPECT_FALSE(rows[0].diagnostic.empty());
}

TEST(RelativeError, Conventions) {
  ScatteringLength a, b;
  a.value = 1.1;
  b.value = 1.0;
  EXPECT_NEAR(relative_error(a, b), 0.1, 1e-15);
  b.value = 0.0;
  EXPECT_DOUBLE_EQ(relative_error(a, b), 1.1);
  a.dim = b.dim = Dimension::two;
  a.log_value = 2001.0;
  b.log_value = 2000.0;
  EXPECT_NEAR(relative_error(a, b), std::expm1(1.0), 1e-12);
}
