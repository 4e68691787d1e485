#pragma once

#include <span>
#include <string>
#include <vector>

#include "scatlen/dimension.hpp"
#include "scatlen/radial_solver.hpp"

namespace scatlen {

enum class ScanAxis { p, r_max, epsilon };

const char* to_string(ScanAxis axis);
/// "p", "r_max"/"rmax", "epsilon"/"eps". Throws std::invalid_argument otherwise.
ScanAxis scan_axis_from_string(const std::string& s);

struct ScanCell {
  double axis_value = 0.0;
  double eta = 0.0;
  double rel_error = 0.0;  ///< |a(x)/a_ref - 1|; NaN for failed cells
  bool failed = false;
  std::string error;
};

/// Relative error of a_s against a reference run, one cell per (eta, axis value).
struct ScanTable {
  Dimension dim = Dimension::three;
  ScanAxis axis = ScanAxis::p;
  SolverConfig reference;
  std::vector<double> etas;
  std::vector<double> grid;
  std::vector<ScanCell> cells;  ///< eta-major: cells[i * grid.size() + j]

  const ScanCell& at(std::size_t eta_index, std::size_t grid_index) const {
    return cells[eta_index * grid.size() + grid_index];
  }
};

/// The reference used throughout: p = 11, r_max = 10, epsilon = 1e-6.
SolverConfig scan_reference_config();

/// Cells are independent and evaluated in parallel; a solver failure marks its cell
/// rather than aborting the scan.
ScanTable convergence_scan(Dimension dim, std::span<const double> etas, ScanAxis axis,
                           std::span<const double> grid,
                           const SolverConfig& reference = scan_reference_config());

/// Axis grids of the published study: p = 3..15, r_max = 1..15, epsilon = 10^-1..10^-10.
std::vector<double> default_scan_grid(ScanAxis axis);

}  // namespace scatlen
