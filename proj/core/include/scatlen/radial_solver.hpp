#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scatlen/dimension.hpp"
#include "scatlen/potentials.hpp"

namespace scatlen {

/// Numeric limit parameters of the zero-energy solve.
struct SolverConfig {
  /// Accuracy exponent: per-step relative and absolute tolerance 10^-p. Values above
  /// kMaxAccuracy are clamped; double precision cannot honour them.
  int p = 11;
  double r_max = 10.0;
  /// Start radius of the 2D solve (ignored in 1D/3D).
  double epsilon = 1e-6;
  long max_steps = 2'000'000;
  bool record_trajectory = false;

  static constexpr int kMaxAccuracy = 13;

  double tolerance() const;

  /// Throws std::invalid_argument on a broken config; returns soft warnings.
  std::vector<std::string> check(const RadialPotential& pot) const;
};

struct TrajectoryPoint {
  double r;
  double value;
  double derivative;
  double log_scale;  ///< renormalisation in effect when the point was recorded
};

/// Endpoint of a radial solve. For dim 1/3 value is u(r_end) (u = r Phi in 3D);
/// for dim 2 it is Phi(r_end). (value, derivative) may be rescaled by exp(-log_scale)
/// relative to the boundary-condition normalisation; every extractor uses ratios only.
struct RadialSolution {
  Dimension dim = Dimension::three;
  double r_end = 0.0;
  double value = 0.0;
  double derivative = 0.0;
  double log_scale = 0.0;
  /// Sign changes of the solution on (r_start, r_end].
  int nodes = 0;
  /// Continuous Pruefer angle atan2(u, u') (2D: atan2(Phi, r Phi')).
  double phase = 0.0;
  long steps = 0;
  std::vector<TrajectoryPoint> trajectory;
  std::vector<std::string> warnings;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double radius)
      : std::runtime_error(what), radius_(radius) {}
  double radius_reached() const { return radius_; }

 private:
  double radius_;
};

/// -(1/2) u'' + V u = 0 on [0, r_max]; u(0)=1,u'(0)=0 in 1D and u(0)=0,u'(0)=1 in 3D.
RadialSolution integrate_u(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg);

/// -(1/2)(Phi'' + Phi'/r) + V Phi = 0 on [epsilon, r_max], Phi(epsilon)=1, Phi'(epsilon)=0.
RadialSolution integrate_phi2d(const RadialPotential& pot, const SolverConfig& cfg);

/// Shared u-equation kernel with arbitrary start data at r = 0. Tagged with `dim` only
/// for bookkeeping; the equation is identical in 1D and 3D.
RadialSolution integrate_u_from(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg,
                                double u0, double du0);

/// Dispatches to integrate_u or integrate_phi2d.
RadialSolution solve_radial(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg);

/// One integration out to the largest radius in `radii` (ascending, all > start),
/// returning the state at each. cfg.r_max is ignored.
std::vector<RadialSolution> solve_radial_at(Dimension dim, const RadialPotential& pot,
                                            const SolverConfig& cfg, std::span<const double> radii);

}  // namespace scatlen
