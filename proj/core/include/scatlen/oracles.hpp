#pragma once

#include <vector>

#include "scatlen/dimension.hpp"
#include "scatlen/extraction.hpp"

namespace scatlen {

// Independent routes to the Gaussian-well scattering length, used to cross-check the ODE
// path. All of them are specific to V(y) = -(eta/2) exp(-y^2).

/// Discretisation of the integral-equation solve. The grid is uniform in y (1D/3D) or in
/// t = sqrt(y) (2D); `levels` successive doublings of `nodes` feed a Romberg table.
struct LSGrid {
  double y_max = 8.0;
  int nodes = 2000;
  int levels = 3;
  /// Disagreement between the two best Romberg entries above which the result is
  /// flagged non-converged.
  double rel_tol = 1e-10;

  void check() const;
};

/// Asymptotic constants: 3D u -> y(1 + c1) - c2, 1D u -> (1 - c2) + c1 y,
/// 2D Phi -> (1 - c1) + c2 ln y.
struct LSResult {
  ScatteringLength a;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Direct (forward-substitution) solve of the Volterra form of the zero-energy equation.
LSResult ls_solve(Dimension dim, double eta, const LSGrid& grid = {});

/// Power series of the 1D solution u(y) = sum_k b_k y^(2k) with b_0 = 1.
struct SeriesState {
  double eta = 0.0;
  int K = 0;
  std::vector<double> b;  ///< b_0..b_K
  /// Resummed moments c0 = int_0^inf y e^{-y^2} u dy and d = pi^{-1/2} int_0^inf e^{-y^2} u dy.
  double c0 = 0.0;
  double d = 0.0;
};

/// b_k = eta/(2k(2k-1)) sum_{l<k} (-1)^(l+1) b_{k-1-l}/l!.
std::vector<double> series_coefficients(double eta, int K);

/// Truncated term-by-term moments 1/2 + sum_{k=1..K} k! b_k/2 and
/// 1/2 + sum_{k=1..K} (2k-1)!! b_k/2^(k+1). These are the moments of the degree-2K
/// polynomial and grow without bound in K for eta != 0.
struct PartialSums {
  std::vector<double> c0;
  std::vector<double> d;
};
PartialSums moment_partial_sums(double eta, int K);

/// The series is used on y in [0, 1/2] and carried further by Taylor re-expansion
/// (the solution is entire), so the moments converge to double precision.
SeriesState series_state(double eta, int K = 60);

/// a_s = (1 + eta c0)/(d sqrt(pi) eta).
ScatteringLength series_a1d(double eta, int K = 60);

/// Closed-form iterates of the integral equation. order 0 plugs the free solution into
/// the asymptotic constants (identical to eval_closed_form(dim, first, eta)); order 1
/// plugs in the first iterate.
double closed_form_ls(Dimension dim, double eta, int order);

/// First iterate of the integral equation at y (u in 1D/3D, Phi in 2D).
double first_iterate(Dimension dim, double eta, double y);

/// Ein(z) = int_0^z (1 - e^{-t})/t dt = gamma + ln z + E1(z).
double ein(double z);

}  // namespace scatlen
