#include <gtest/gtest.h>

#include <cmath>

#include "scatlen/sensitivity.hpp"

using namespace scatlen;

TEST(TruncateDigits, RoundsToSignificantDigits) {
  EXPECT_DOUBLE_EQ(truncate_digits(kReferenceW1, 3), 2.68);
  EXPECT_DOUBLE_EQ(truncate_digits(kReferenceW1, 6), 2.68400);
  EXPECT_DOUBLE_EQ(truncate_digits(kReferenceW1, 12), 2.68400465092);
  EXPECT_DOUBLE_EQ(truncate_digits(17.7956995472, 4), 17.80);
  EXPECT_DOUBLE_EQ(truncate_digits(2.999, 2), 3.0);
  EXPECT_DOUBLE_EQ(truncate_digits(1234.5, 2), 1200.0);
  EXPECT_THROW(truncate_digits(1.0, 0), std::invalid_argument);
}

TEST(DefaultGrid, SymmetricAndSorted) {
  const auto g = default_sensitivity_grid();
  ASSERT_EQ(g.size() % 2, 0u);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  for (std::size_t i = 0; i < g.size() / 2; ++i)
    EXPECT_NEAR(g[i] - kReferenceW1, kReferenceW1 - g[g.size() - 1 - i], 1e-15);
  EXPECT_NEAR(g.back() - kReferenceW1, 0.1, 1e-15);
}

TEST(PoleSensitivity, ShapeAndTruncatedPositions) {
  const std::vector<double> grid{2.5, 2.6, 2.8};
  const auto ref = sensitivity_reference(grid);
  const std::vector<int> nd{3, 13};
  const auto rep = pole_sensitivity(builtin_model(Dimension::three, 4), nd, grid, ref);
  ASSERT_EQ(rep.errors.size(), 2u);
  ASSERT_EQ(rep.errors[0].size(), 3u);
  EXPECT_DOUBLE_EQ(rep.truncated_W1[0], 2.68);
  EXPECT_DOUBLE_EQ(rep.truncated_W1[1], kReferenceW1);
  EXPECT_DOUBLE_EQ(rep.noise_floor, 1e-13);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    EXPECT_DOUBLE_EQ(rep.reference[j], ref[j].value);
    EXPECT_NEAR(rep.rel_errors[0][j], rep.errors[0][j] / std::abs(ref[j].value), 1e-15);
  }
}

TEST(PoleSensitivity, CoarseTruncationBlowsUpNextToThePole) {
  const std::vector<double> grid{2.66, 2.682, 2.70};
  const auto ref = sensitivity_reference(grid);
  const std::vector<int> nd{3, 12};
  const auto rep = pole_sensitivity(builtin_model(Dimension::three, 4), nd, grid, ref);
  EXPECT_GT(rep.rel_errors[0][1], 1.0);
  EXPECT_LT(rep.rel_errors[1][1], 1e-5);
  EXPECT_GT(rep.rel_errors[0][1], rep.rel_errors[0][0]);
  EXPECT_GT(rep.rel_errors[0][1], rep.rel_errors[0][2]);
}

TEST(PoleSensitivity, UnusableReferenceCellsAreMasked) {
  const std::vector<double> grid{2.0, 2.5};
  auto ref = sensitivity_reference(grid);
  ref[1].converged = false;
  const std::vector<int> nd{5};
  const auto rep = pole_sensitivity(builtin_model(Dimension::three, 2), nd, grid, ref);
  EXPECT_TRUE(std::isfinite(rep.errors[0][0]));
  EXPECT_TRUE(std::isnan(rep.errors[0][1]));
}

TEST(PoleSensitivity, RejectsMismatchedInput) {
  const std::vector<double> grid{2.0, 2.5};
  const auto ref = sensitivity_reference(grid);
  const std::vector<int> nd{5};
  EXPECT_THROW(pole_sensitivity(builtin_model(Dimension::one, 2), nd, grid, ref), std::invalid_argument);
  const std::vector<double> short_grid{2.0};
  EXPECT_THROW(pole_sensitivity(builtin_model(Dimension::three, 2), nd, short_grid, ref),
               std::invalid_argument);
}
