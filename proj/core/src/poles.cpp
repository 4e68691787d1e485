#include "scatlen/poles.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <fmt/format.h>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "scatlen/potentials.hpp"

namespace scatlen {

namespace {

struct Endpoint {
  double value;
  double scaled_derivative;
  double phase;
};

Endpoint endpoint(Dimension dim, double eta, const SolverConfig& cfg) {
  const auto sol = solve_radial(dim, gaussian(Coupling{eta}), cfg);
  const double d = dim == Dimension::two ? sol.r_end * sol.derivative : sol.derivative;
  return {sol.value, d, sol.phase};
}

// Pole inside a coarse cell, with the number of thresholds it holds.
struct Cell {
  double lo, hi;
  int count_lo, count_hi;
};

}  // namespace

SolverConfig pole_config() {
  SolverConfig cfg;
  cfg.p = 13;
  cfg.r_max = 12.0;
  return cfg;
}

double pole_indicator(Dimension dim, double eta, const SolverConfig& cfg) {
  const auto e = endpoint(dim, eta, cfg);
  return e.scaled_derivative / std::hypot(e.value, e.scaled_derivative);
}

int pole_count(Dimension dim, double eta, const SolverConfig& cfg) {
  const double theta = endpoint(dim, eta, cfg).phase;
  // The angle starts at 0 (3D) or pi/2 (1D, 2D) and passes pi/2 + m pi at each threshold.
  const double shift = dim == Dimension::three ? 0.5 * std::numbers::pi : -0.5 * std::numbers::pi;
  const int n = static_cast<int>(std::floor((theta + shift) / std::numbers::pi));
  return std::max(n, 0);
}

PoleEntry find_pole(Dimension dim, double lo, double hi, double tol, const SolverConfig& cfg) {
  if (!(lo < hi)) throw std::invalid_argument("find_pole: empty bracket");
  if (!(tol > 0.0)) throw std::invalid_argument("find_pole: tol must be positive");
  auto f = [&](double eta) { return pole_indicator(dim, eta, cfg); };
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0.0};
  if (fhi == 0.0) return {hi, hi, hi, 0.0};
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument(
        fmt::format("find_pole: indicator does not change sign on [{}, {}]", lo, hi));

  std::uintmax_t max_iter = 200;
  auto done = [tol](double a, double b) { return std::abs(b - a) < tol; };
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, max_iter);
  const double W = 0.5 * (a + b);
  return {W, a, b, std::abs(f(W))};
}

PoleSet enumerate_poles(Dimension dim, double eta_max, const PoleScan& scan) {
  if (!std::isfinite(eta_max)) throw std::invalid_argument("enumerate_poles: eta_max must be finite");
  if (!(scan.step > 0.0)) throw std::invalid_argument("enumerate_poles: step must be positive");
  PoleSet set;
  set.dim = dim;
  if (eta_max <= 0.0) return set;

  std::vector<double> grid;
  for (double x = 0.0; x < eta_max; x = grid.size() * scan.step) grid.push_back(x);
  grid.push_back(eta_max);

  std::vector<int> counts(grid.size());
  detail::parallel_for(grid.size(),
                       [&](std::size_t i) { counts[i] = pole_count(dim, grid[i], scan.solver); });

  std::vector<Cell> cells;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (counts[i + 1] > counts[i]) cells.push_back({grid[i], grid[i + 1], counts[i], counts[i + 1]});
  }

  // Cells holding several thresholds are halved until each holds one.
  std::vector<Cell> single;
  while (!cells.empty()) {
    const Cell c = cells.back();
    cells.pop_back();
    if (c.count_hi - c.count_lo == 1) {
      single.push_back(c);
      continue;
    }
    set.warnings.push_back(fmt::format("{} poles in one scan cell [{}, {}]; re-scanned finer",
                                       c.count_hi - c.count_lo, c.lo, c.hi));
    const double mid = 0.5 * (c.lo + c.hi);
    const int cm = pole_count(dim, mid, scan.solver);
    if (cm > c.count_lo) cells.push_back({c.lo, mid, c.count_lo, cm});
    if (c.count_hi > cm) cells.push_back({mid, c.hi, cm, c.count_hi});
  }
  std::sort(single.begin(), single.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });

  set.poles.resize(single.size());
  detail::parallel_for(single.size(), [&](std::size_t i) {
    set.poles[i] = find_pole(dim, single[i].lo, single[i].hi, scan.tol, scan.solver);
  });
  return set;
}

}  // namespace scatlen
