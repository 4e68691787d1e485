#pragma once

#include <string>
#include <vector>

#include "scatlen/dimension.hpp"
#include "scatlen/radial_solver.hpp"

namespace scatlen {

/// One bound-state threshold: the coupling W at which a_s diverges.
struct PoleEntry {
  double W = 0.0;
  double lo = 0.0;  ///< final bracket
  double hi = 0.0;
  double residual = 0.0;  ///< |pole_indicator(W)|
};

struct PoleSet {
  Dimension dim = Dimension::three;
  std::vector<PoleEntry> poles;  ///< strictly increasing W
  std::vector<std::string> warnings;
};

/// Solver settings for pole runs: p = 13, r_max = 12.
SolverConfig pole_config();

/// Normalised endpoint derivative u'/hypot(u, u') (2D: r Phi'/hypot(Phi, r Phi')).
/// Vanishes, with a sign change, exactly at the thresholds.
double pole_indicator(Dimension dim, double eta, const SolverConfig& cfg = pole_config());

/// Number of thresholds in (0, eta] read off the Pruefer angle at r_max.
/// Negative eta gives 0.
int pole_count(Dimension dim, double eta, const SolverConfig& cfg = pole_config());

/// Refines a single pole inside [lo, hi] until the bracket is narrower than tol.
/// Throws std::invalid_argument when the indicator does not change sign.
PoleEntry find_pole(Dimension dim, double lo, double hi, double tol,
                    const SolverConfig& cfg = pole_config());

struct PoleScan {
  double step = 0.5;
  double tol = 1e-12;
  SolverConfig solver = pole_config();
};

/// All thresholds with 0 < W <= eta_max.
PoleSet enumerate_poles(Dimension dim, double eta_max, const PoleScan& scan = {});

}  // namespace scatlen
