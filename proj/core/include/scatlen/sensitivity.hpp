#pragma once

#include <span>
#include <vector>

#include "scatlen/approximants.hpp"
#include "scatlen/extraction.hpp"

namespace scatlen {

/// Threshold of the first 3D bound state used as the reference position.
inline constexpr double kReferenceW1 = 2.684004650924;

/// W rounded to ndigit significant decimal digits.
double truncate_digits(double W, int ndigit);

/// Rows are ndigit, columns eta. Cells whose reference is unusable hold NaN.
struct SensitivityReport {
  std::vector<int> ndigit;
  std::vector<double> eta_grid;
  std::vector<double> reference;               ///< numeric a_s per eta
  std::vector<std::vector<double>> errors;     ///< |model - reference|
  std::vector<std::vector<double>> rel_errors; ///< |model/reference - 1|
  std::vector<double> truncated_W1;            ///< W_1 used per ndigit
  double reference_W1 = kReferenceW1;
  /// Solver tolerance of the reference run; differences below this times |a| are noise.
  double noise_floor = 0.0;
};

/// Solver settings of the reference run (p = 13, the double-precision ceiling).
SolverConfig sensitivity_reference_config();

std::vector<ScatteringLength> sensitivity_reference(std::span<const double> eta_grid,
                                                    const SolverConfig& cfg =
                                                        sensitivity_reference_config());

/// Rebuilds `model` with W_1 truncated to each ndigit (everything else unchanged) and
/// tabulates the deviation from the reference values.
SensitivityReport pole_sensitivity(const ApproximantModel& model, std::span<const int> ndigits,
                                   std::span<const double> eta_grid,
                                   std::span<const ScatteringLength> reference,
                                   double reference_W1 = kReferenceW1);

/// Offsets +-10^k, k = -9, -8.5, ..., -1, around reference_W1, ascending.
std::vector<double> default_sensitivity_grid(double reference_W1 = kReferenceW1);

}  // namespace scatlen
