#include <array>
#include <cmath>
#include <limits>
#include <fmt/format.h>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "scatlen/oracles.hpp"

namespace scatlen {

namespace {

constexpr double kPoleDenominator = 1e-10;

struct Constants {
  double c1;
  double c2;
};

// u(y) = g(y) - eta int_0^y (y - x) e^{-x^2} u(x) dx, trapezoid in x. The kernel vanishes
// on the diagonal, so each node follows explicitly from the running sums
// A = sum w e^{-x^2} u and B = sum w x e^{-x^2} u over earlier nodes.
Constants solve_u(Dimension dim, double eta, double y_max, int n) {
  const double h = y_max / n;
  double A = 0.0, B = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double y = i * h;
    const double g = dim == Dimension::three ? y : 1.0;
    const double u = g - eta * (y * A - B);
    const double w = (i == 0 || i == n) ? 0.5 * h : h;
    const double e = w * std::exp(-y * y) * u;
    A += e;
    B += y * e;
  }
  return {-eta * A, -eta * B};
}

// Phi(y) = 1 - eta int_0^y x ln(y/x) e^{-x^2} Phi(x) dx on x = t^2, t uniform, so that
// dx = 2t dt and the x ln x factor becomes smooth enough for the Romberg table.
// P = int x e^{-x^2} Phi, Q = int x ln x e^{-x^2} Phi.
Constants solve_phi(double eta, double y_max, int n) {
  const double t_max = std::sqrt(y_max);
  const double h = t_max / n;
  double P = 0.0, Q = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double x = t * t;
    const double lnx = i == 0 ? 0.0 : 2.0 * std::log(t);
    const double phi = 1.0 - eta * (lnx * P - Q);
    const double w = (i == 0 || i == n) ? 0.5 * h : h;
    const double e = w * 2.0 * t * x * std::exp(-x * x) * phi;
    P += e;
    Q += lnx * e;
  }
  return {-eta * Q, -eta * P};
}

ScatteringLength from_constants(Dimension dim, const Constants& c) {
  ScatteringLength a;
  a.dim = dim;
  double den = 0.0;
  switch (dim) {
    case Dimension::three:
      den = 1.0 + c.c1;
      a.value = c.c2 / den;
      a.log_value = std::log(std::abs(a.value));
      break;
    case Dimension::one:
      den = c.c1;
      a.value = (c.c2 - 1.0) / den;
      a.log_value = std::log(std::abs(a.value));
      break;
    case Dimension::two:
      den = c.c2;
      a.log_value = (c.c1 - 1.0) / den - kEulerGamma + std::numbers::ln2;
      a.value = std::exp(a.log_value);
      break;
  }
  a.near_pole = std::abs(den) < kPoleDenominator;
  return a;
}

}  // namespace

void LSGrid::check() const {
  if (!(y_max >= 6.0)) throw std::invalid_argument("LSGrid: y_max must be >= 6");
  if (nodes < 200) throw std::invalid_argument("LSGrid: need at least 200 nodes");
  if (levels < 1 || levels > 6) throw std::invalid_argument("LSGrid: levels must be 1..6");
}

LSResult ls_solve(Dimension dim, double eta, const LSGrid& grid) {
  grid.check();
  if (!std::isfinite(eta)) throw std::invalid_argument("ls_solve: eta must be finite");

  // Romberg table over nodes, 2 nodes, 4 nodes, ...; the trapezoid error is even in h.
  std::vector<std::vector<Constants>> T(static_cast<std::size_t>(grid.levels));
  for (int k = 0; k < grid.levels; ++k) {
    const int n = grid.nodes << k;
    T[k].push_back(dim == Dimension::two ? solve_phi(eta, grid.y_max, n)
                                         : solve_u(dim, eta, grid.y_max, n));
    double f = 1.0;
    for (int j = 1; j <= k; ++j) {
      f *= 4.0;
      const auto& fine = T[k][j - 1];
      const auto& coarse = T[k - 1][j - 1];
      T[k].push_back({(f * fine.c1 - coarse.c1) / (f - 1.0), (f * fine.c2 - coarse.c2) / (f - 1.0)});
    }
  }
  const auto& last = T.back();
  const Constants best = last.back();

  LSResult res;
  res.c1 = best.c1;
  res.c2 = best.c2;
  res.a = from_constants(dim, best);
  if (grid.levels > 1) {
    const Constants prev = last[last.size() - 2];
    const auto b = from_constants(dim, prev);
    res.a.err_estimate = dim == Dimension::two
                             ? std::abs(std::expm1(b.log_value - res.a.log_value)) * res.a.value
                             : std::abs(b.value - res.a.value);
    const double scale = dim == Dimension::two ? res.a.value : std::max(1.0, std::abs(res.a.value));
    if (!(res.a.err_estimate <= grid.rel_tol * scale)) {
      res.a.converged = false;
      res.a.diagnostic =
          fmt::format("grid refinement disagrees by {:.3g}", res.a.err_estimate);
    }
  } else {
    res.a.err_estimate = std::numeric_limits<double>::infinity();
    res.a.converged = false;
    res.a.diagnostic = "single grid level: no error estimate";
  }
  if (res.a.near_pole) res.a.diagnostic = "asymptotic denominator vanishes: near a threshold";
  return res;
}

}  // namespace scatlen
