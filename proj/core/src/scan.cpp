#include "scatlen/scan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"
#include "scatlen/extraction.hpp"

namespace scatlen {

namespace {

SolverConfig with_axis(SolverConfig cfg, ScanAxis axis, double x) {
  switch (axis) {
    case ScanAxis::p:
      cfg.p = static_cast<int>(std::lround(x));
      break;
    case ScanAxis::r_max:
      cfg.r_max = x;
      break;
    case ScanAxis::epsilon:
      cfg.epsilon = x;
      break;
  }
  return cfg;
}

}  // namespace

const char* to_string(ScanAxis axis) {
  switch (axis) {
    case ScanAxis::p: return "p";
    case ScanAxis::r_max: return "r_max";
    case ScanAxis::epsilon: return "epsilon";
  }
  return "?";
}

ScanAxis scan_axis_from_string(const std::string& s) {
  if (s == "p") return ScanAxis::p;
  if (s == "r_max" || s == "rmax") return ScanAxis::r_max;
  if (s == "epsilon" || s == "eps") return ScanAxis::epsilon;
  throw std::invalid_argument("unknown scan axis '" + s + "' (expected p, r_max or epsilon)");
}

SolverConfig scan_reference_config() { return SolverConfig{}; }

ScanTable convergence_scan(Dimension dim, std::span<const double> etas, ScanAxis axis,
                           std::span<const double> grid, const SolverConfig& reference) {
  ScanTable t;
  t.dim = dim;
  t.axis = axis;
  t.reference = reference;
  t.etas.assign(etas.begin(), etas.end());
  t.grid.assign(grid.begin(), grid.end());
  t.cells.resize(etas.size() * grid.size());

  std::vector<ScatteringLength> ref(etas.size());
  std::vector<std::string> ref_error(etas.size());
  detail::parallel_for(etas.size(), [&](std::size_t i) {
    try {
      ref[i] = scattering_length(dim, etas[i], reference);
    } catch (const std::exception& e) {
      ref_error[i] = std::string("reference: ") + e.what();
    }
  });

  detail::parallel_for(t.cells.size(), [&](std::size_t k) {
    const std::size_t i = k / grid.size();
    const std::size_t j = k % grid.size();
    ScanCell& c = t.cells[k];
    c.eta = etas[i];
    c.axis_value = grid[j];
    c.rel_error = std::numeric_limits<double>::quiet_NaN();
    if (!ref_error[i].empty()) {
      c.failed = true;
      c.error = ref_error[i];
      return;
    }
    try {
      const auto a = scattering_length(dim, etas[i], with_axis(reference, axis, grid[j]));
      c.rel_error = relative_error(a, ref[i]);
    } catch (const std::exception& e) {
      c.failed = true;
      c.error = e.what();
    }
  });
  return t;
}

std::vector<double> default_scan_grid(ScanAxis axis) {
  std::vector<double> g;
  switch (axis) {
    case ScanAxis::p:
      for (int p = 3; p <= 15; ++p) g.push_back(p);
      break;
    case ScanAxis::r_max:
      for (int r = 1; r <= 15; ++r) g.push_back(r);
      break;
    case ScanAxis::epsilon:
      for (int k = 1; k <= 10; ++k) g.push_back(std::pow(10.0, -k));
      break;
  }
  return g;
}

}  // namespace scatlen
