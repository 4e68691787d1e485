#include <gtest/gtest.h>

#include <cmath>

#include "scatlen/poles.hpp"
#include "test_support.hpp"

using namespace scatlen;
using scatlen::testing::golden;
using scatlen::testing::table;

TEST(PoleConfig, IsTheHighAccuracySetting) {
  EXPECT_EQ(pole_config().p, 13);
  EXPECT_DOUBLE_EQ(pole_config().r_max, 12.0);
}

class PolesPerDimension : public ::testing::TestWithParam<Dimension> {};

TEST_P(PolesPerDimension, FirstPoleMatchesHighPrecisionValue) {
  const Dimension dim = GetParam();
  const auto& g = golden("W1_" + std::to_string(to_int(dim)) + "d");
  const auto set = enumerate_poles(dim, g.value + 1.0);
  ASSERT_FALSE(set.poles.empty());
  EXPECT_LT(std::abs(set.poles[0].W / g.value - 1.0), g.rel_tol);
  EXPECT_LE(set.poles[0].hi - set.poles[0].lo, 1e-12);
  EXPECT_LT(set.poles[0].residual, 1e-10);
}

TEST_P(PolesPerDimension, PublishedThresholdsAreReproduced) {
  const auto& t = table(GetParam());
  const auto set = enumerate_poles(GetParam(), t.W.back() + 1.0);
  ASSERT_EQ(set.poles.size(), t.W.size());
  for (std::size_t i = 0; i < t.W.size(); ++i)
    EXPECT_LT(std::abs(set.poles[i].W / t.W[i] - 1.0), 1e-6) << "W_" << i + 1;
  EXPECT_TRUE(set.warnings.empty());
}

TEST_P(PolesPerDimension, NodeCountStepsAcrossEachPole) {
  const auto& t = table(GetParam());
  for (std::size_t i = 0; i < t.W.size(); ++i) {
    EXPECT_EQ(pole_count(GetParam(), t.W[i] - 0.01), static_cast<int>(i)) << t.W[i];
    EXPECT_EQ(pole_count(GetParam(), t.W[i] + 0.01), static_cast<int>(i + 1)) << t.W[i];
  }
}

TEST_P(PolesPerDimension, IndicatorChangesSignAtEachPole) {
  const auto& t = table(GetParam());
  for (double W : t.W) {
    const double below = pole_indicator(GetParam(), W - 1e-4);
    const double above = pole_indicator(GetParam(), W + 1e-4);
    EXPECT_LT(below * above, 0.0) << W;
  }
}

INSTANTIATE_TEST_SUITE_P(AllDimensions, PolesPerDimension,
                         ::testing::Values(Dimension::one, Dimension::two, Dimension::three));

TEST(PoleCount, RepulsiveAndFreeWellsHaveNoThresholds) {
  for (Dimension dim : {Dimension::one, Dimension::two, Dimension::three}) {
    EXPECT_EQ(pole_count(dim, -5.0), 0);
    EXPECT_EQ(pole_count(dim, 0.0), 0);
  }
}

TEST(EnumeratePoles, EmptyBelowTheFirstThreshold) {
  EXPECT_TRUE(enumerate_poles(Dimension::one, 5.0).poles.empty());
  EXPECT_TRUE(enumerate_poles(Dimension::three, -3.0).poles.empty());
}

TEST(EnumeratePoles, SingleTwoDimensionalPoleBelowTwelve) {
  const auto set = enumerate_poles(Dimension::two, 12.0);
  ASSERT_EQ(set.poles.size(), 1u);
  EXPECT_NEAR(set.poles[0].W, 11.076903, 1e-6);
}

TEST(EnumeratePoles, CoarseStepStillFindsEveryPole) {
  PoleScan scan;
  scan.step = 40.0;  // several poles per cell
  const auto set = enumerate_poles(Dimension::three, 90.0, scan);
  ASSERT_EQ(set.poles.size(), 4u);
  EXPECT_NEAR(set.poles[1].W, table(Dimension::three).W[1], 1e-8);
  EXPECT_FALSE(set.warnings.empty());
}

TEST(EnumeratePoles, RejectsBadScan) {
  PoleScan scan;
  scan.step = 0.0;
  EXPECT_THROW(enumerate_poles(Dimension::three, 5.0, scan), std::invalid_argument);
  EXPECT_THROW(enumerate_poles(Dimension::three, INFINITY), std::invalid_argument);
}

TEST(FindPole, RefinesAGivenBracket) {
  const auto p = find_pole(Dimension::three, 17.0, 18.5, 1e-10);
  EXPECT_NEAR(p.W, 17.7956995471, 1e-8);
  EXPECT_LE(p.hi - p.lo, 1e-10);
  EXPECT_LE(p.lo, p.W);
  EXPECT_GE(p.hi, p.W);
}

TEST(FindPole, NoSignChangeIsAnError) {
  EXPECT_THROW(find_pole(Dimension::three, 3.0, 4.0, 1e-10), std::invalid_argument);
  EXPECT_THROW(find_pole(Dimension::three, 4.0, 3.0, 1e-10), std::invalid_argument);
}
