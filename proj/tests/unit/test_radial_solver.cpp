#include <gtest/gtest.h>

#include <cmath>

#include "scatlen/radial_solver.hpp"
#include "test_support.hpp"

using namespace scatlen;
using scatlen::testing::golden;
using scatlen::testing::rel_diff;

namespace {

double unscaled(const RadialSolution& s, double x) { return x * std::exp(s.log_scale); }

SolverConfig at(double r_max, int p = 11) {
  SolverConfig c;
  c.r_max = r_max;
  c.p = p;
  return c;
}

}  // namespace

TEST(IntegrateU, MatchesHighPrecisionSolution3D) {
  const auto& gu = golden("u3d_eta2");
  const auto& gd = golden("du3d_eta2");
  const auto s = integrate_u(Dimension::three, gaussian({gu.eta}), at(gu.params["r"].get<double>()));
  EXPECT_DOUBLE_EQ(s.r_end, 10.0);
  EXPECT_LT(rel_diff(unscaled(s, s.value), gu.value), gu.rel_tol);
  EXPECT_LT(rel_diff(unscaled(s, s.derivative), gd.value), gd.rel_tol);
}

TEST(IntegratePhi2D, MatchesHighPrecisionSolution) {
  const auto& gp = golden("phi2d_eta1");
  const auto& gd = golden("dphi2d_eta1");
  SolverConfig cfg = at(gp.params["r"].get<double>());
  cfg.epsilon = gp.params["epsilon"].get<double>();
  const auto s = integrate_phi2d(gaussian({gp.eta}), cfg);
  EXPECT_EQ(s.dim, Dimension::two);
  EXPECT_LT(rel_diff(unscaled(s, s.value), gp.value), gp.rel_tol);
  EXPECT_LT(rel_diff(unscaled(s, s.derivative), gd.value), gd.rel_tol);
}

TEST(IntegrateU, FreeSolutionsAreExact) {
  const auto free = gaussian({0.0});
  const auto s3 = integrate_u(Dimension::three, free, at(7.0));
  EXPECT_NEAR(unscaled(s3, s3.value), 7.0, 1e-12);
  EXPECT_NEAR(unscaled(s3, s3.derivative), 1.0, 1e-12);
  const auto s1 = integrate_u(Dimension::one, free, at(7.0));
  EXPECT_NEAR(unscaled(s1, s1.value), 1.0, 1e-12);
  EXPECT_NEAR(unscaled(s1, s1.derivative), 0.0, 1e-12);
  const auto s2 = integrate_phi2d(free, at(7.0));
  EXPECT_NEAR(unscaled(s2, s2.value), 1.0, 1e-12);
  EXPECT_EQ(s1.nodes + s2.nodes + s3.nodes, 0);
}

TEST(IntegrateU, SharedKernelWithExplicitStartData) {
  const auto pot = gaussian({5.0});
  const auto a = integrate_u(Dimension::three, pot, at(9.0));
  const auto b = integrate_u_from(Dimension::three, pot, at(9.0), 0.0, 1.0);
  EXPECT_DOUBLE_EQ(a.value, b.value);
  EXPECT_DOUBLE_EQ(a.derivative, b.derivative);
  // The 1D and 3D equations are identical; only the start data differ.
  const auto c = integrate_u(Dimension::one, pot, at(9.0));
  const auto d = integrate_u_from(Dimension::three, pot, at(9.0), 1.0, 0.0);
  EXPECT_DOUBLE_EQ(c.value, d.value);
  EXPECT_DOUBLE_EQ(c.derivative, d.derivative);
}

TEST(IntegrateU, SelfConvergesWithAccuracyExponent) {
  const auto pot = gaussian({10.0});
  const auto ref = integrate_u(Dimension::three, pot, at(10.0, 13));
  const double r_ref = ref.value / ref.derivative;
  double prev = 1.0;
  for (int p : {5, 7, 9, 11}) {
    const auto s = integrate_u(Dimension::three, pot, at(10.0, p));
    const double err = std::abs(s.value / s.derivative / r_ref - 1.0);
    EXPECT_LT(err, prev) << "p = " << p;
    prev = err;
  }
  EXPECT_LT(prev, 1e-9);
}

TEST(IntegrateU, WronskianOfTwoSolutionsIsConserved) {
  // W = u1 u2' - u1' u2 is constant for u'' = q u; it equals 1 at r = 0.
  const auto pot = gaussian({6.0});
  for (double r : {2.0, 5.0, 10.0}) {
    const auto a = integrate_u(Dimension::one, pot, at(r));
    const auto b = integrate_u(Dimension::three, pot, at(r));
    const double w = unscaled(a, a.value) * unscaled(b, b.derivative) -
                     unscaled(a, a.derivative) * unscaled(b, b.value);
    EXPECT_NEAR(w, 1.0, 1e-9) << "r = " << r;
  }
}

TEST(IntegrateU, NodeCountGrowsWithBoundStates) {
  EXPECT_EQ(integrate_u(Dimension::three, gaussian({2.0}), at(10.0)).nodes, 0);
  EXPECT_EQ(integrate_u(Dimension::three, gaussian({20.0}), at(10.0)).nodes, 2);
  EXPECT_EQ(integrate_u(Dimension::three, gaussian({50.0}), at(10.0)).nodes, 3);
}

TEST(IntegrateU, LargeAmplitudesAreRenormalised) {
  // u grows by roughly exp(1.25 sqrt(-eta)) = e^395 across the well.
  const auto s = integrate_u(Dimension::three, gaussian({-1e5}), at(10.0));
  EXPECT_TRUE(std::isfinite(s.value));
  EXPECT_GT(s.log_scale, 0.0);
  EXPECT_GT(s.value / s.derivative, 0.0);
}

TEST(SolveRadialAt, StatesAlongOneIntegration) {
  const auto pot = gaussian({3.0});
  const std::vector<double> radii{4.0, 6.0, 10.0};
  const auto states = solve_radial_at(Dimension::three, pot, at(1.0), radii);
  ASSERT_EQ(states.size(), 3u);
  for (std::size_t i = 0; i < radii.size(); ++i) EXPECT_DOUBLE_EQ(states[i].r_end, radii[i]);
  const auto direct = integrate_u(Dimension::three, pot, at(10.0));
  EXPECT_LT(rel_diff(states[2].value / states[2].derivative, direct.value / direct.derivative), 1e-10);
  const std::vector<double> bad{5.0, 4.0};
  EXPECT_THROW(solve_radial_at(Dimension::three, pot, at(1.0), bad), std::invalid_argument);
}

TEST(SolveRadial, RecordsTrajectory) {
  SolverConfig cfg = at(6.0);
  cfg.record_trajectory = true;
  const auto s = solve_radial(Dimension::two, gaussian({1.0}), cfg);
  ASSERT_GT(s.trajectory.size(), 2u);
  for (std::size_t i = 1; i < s.trajectory.size(); ++i)
    EXPECT_GT(s.trajectory[i].r, s.trajectory[i - 1].r);
  EXPECT_DOUBLE_EQ(s.trajectory.back().r, 6.0);
}

TEST(SolverConfig, RejectsBrokenSettings) {
  const auto pot = gaussian({1.0});
  SolverConfig c;
  c.p = 2;
  EXPECT_THROW(integrate_u(Dimension::three, pot, c), std::invalid_argument);
  c = {};
  c.r_max = -1.0;
  EXPECT_THROW(integrate_u(Dimension::three, pot, c), std::invalid_argument);
  c = {};
  c.epsilon = 20.0;
  EXPECT_THROW(integrate_phi2d(pot, c), std::invalid_argument);
  EXPECT_THROW(integrate_u(Dimension::two, pot, SolverConfig{}), std::invalid_argument);
}

TEST(SolverConfig, AccuracyIsCappedAtDoublePrecision) {
  SolverConfig c;
  c.p = 20;
  EXPECT_DOUBLE_EQ(c.tolerance(), 1e-13);
  EXPECT_FALSE(c.check(gaussian({1.0})).empty());
}

TEST(SolverConfig, StepBudgetExhaustionThrows) {
  SolverConfig c;
  c.max_steps = 3;
  try {
    integrate_u(Dimension::three, gaussian({1.0}), c);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_GT(e.radius_reached(), 0.0);
    EXPECT_LT(e.radius_reached(), 10.0);
  }
}

TEST(SolverConfig, RejectsInadmissiblePotential) {
  RadialPotential coulomb([](double r) { return -1.0 / r; }, 1.0, 1.0, Tail::exponential());
  EXPECT_THROW(integrate_u(Dimension::three, coulomb, SolverConfig{}), std::invalid_argument);
}
