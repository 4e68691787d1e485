#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "scatlen/dimension.hpp"
#include "scatlen/potentials.hpp"
#include "scatlen/radial_solver.hpp"

namespace scatlen {

/// s-wave scattering length in units of L.
///
/// A diverging scattering length is a value, not an error: it comes back as a signed
/// infinity with near_pole set. In 2D the natural logarithm is carried alongside so that
/// values beyond the double range (weak coupling, a_s ~ exp(2/eta)) stay usable.
struct ScatteringLength {
  Dimension dim = Dimension::three;
  double value = 0.0;
  double err_estimate = 0.0;
  bool near_pole = false;
  bool converged = true;
  /// ln(value) for dim 2, ln|value| otherwise.
  double log_value = 0.0;
  std::string diagnostic;
};

/// Relative threshold on the normalised endpoint derivative below which a result is
/// flagged as sitting on a bound-state threshold.
inline constexpr double kNearPoleThreshold = 1e-8;

/// a = r - u/u' at the end of a 1D/3D solve.
ScatteringLength extract_1d3d(const RadialSolution& sol, Dimension dim);

/// a = 2 r exp(-Phi/(r Phi') - gamma) at the end of a 2D solve.
ScatteringLength extract_2d(const RadialSolution& sol);

/// Dispatch on sol.dim.
ScatteringLength extract(const RadialSolution& sol);

/// Cutoff ladder used by scattering_length: {0.6, 0.8, 1.0, 1.2} * r_max.
std::array<double, 4> cutoff_ladder(const SolverConfig& cfg);

/// Solve once over the cutoff ladder and return the extractor at r_max, with
/// err_estimate = |a(1.2 r_max) - a(r_max)|. Sets converged = false when the spread
/// across the ladder stops shrinking above the accuracy floor.
ScatteringLength scattering_length(Dimension dim, const RadialPotential& pot,
                                   const SolverConfig& cfg = {});

ScatteringLength scattering_length(Dimension dim, double eta, const SolverConfig& cfg = {});

/// One Gaussian-well result per eta, evaluated in parallel and returned in input order.
/// A solver failure yields a NaN row with converged = false and the error as diagnostic.
std::vector<ScatteringLength> scattering_lengths(Dimension dim, std::span<const double> etas,
                                                 const SolverConfig& cfg = {});

/// Relative deviation |a/a_ref - 1|, computed through log_value in 2D so that
/// overflowing magnitudes still compare.
double relative_error(const ScatteringLength& a, const ScatteringLength& ref);

}  // namespace scatlen
