#include "scatlen/extraction.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace scatlen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool small_derivative(double value, double scaled_derivative) {
  return std::abs(scaled_derivative) < kNearPoleThreshold * std::hypot(value, scaled_derivative);
}

// Spread between two rungs, relative in 2D (through the logs) and absolute otherwise.
double spread(const ScatteringLength& a, const ScatteringLength& b) {
  if (a.dim == Dimension::two) {
    return std::abs(std::expm1(b.log_value - a.log_value)) * a.value;
  }
  return std::abs(b.value - a.value);
}

}  // namespace

ScatteringLength extract_1d3d(const RadialSolution& sol, Dimension dim) {
  if (dim == Dimension::two) throw std::invalid_argument("extract_1d3d: dimension must be 1 or 3");
  if (sol.dim != dim) throw std::invalid_argument("extract_1d3d: solution dimension mismatch");
  ScatteringLength a;
  a.dim = dim;
  a.value = sol.r_end - sol.value / sol.derivative;
  a.log_value = std::log(std::abs(a.value));
  a.near_pole = small_derivative(sol.value, sol.derivative);
  if (sol.derivative == 0.0) a.diagnostic = "u'(r) vanishes: scattering length diverges";
  return a;
}

ScatteringLength extract_2d(const RadialSolution& sol) {
  if (sol.dim != Dimension::two) throw std::invalid_argument("extract_2d: not a 2D solution");
  ScatteringLength a;
  a.dim = Dimension::two;
  const double r = sol.r_end;
  const double rd = r * sol.derivative;
  a.near_pole = small_derivative(sol.value, rd);
  if (rd == 0.0) {
    a.value = kInf;
    a.log_value = kInf;
    a.diagnostic = "Phi'(r) vanishes: scattering length diverges";
    return a;
  }
  a.log_value = std::log(2.0 * r) - sol.value / rd - kEulerGamma;
  if (a.log_value > std::log(DBL_MAX)) {
    a.value = DBL_MAX;
    a.diagnostic = "a_s exceeds the double range; value clamped, use log_value";
  } else if (a.log_value < std::log(DBL_MIN)) {
    a.value = DBL_MIN;
    a.diagnostic = "a_s below the double range; value clamped, use log_value";
  } else {
    a.value = std::exp(a.log_value);
  }
  return a;
}

ScatteringLength extract(const RadialSolution& sol) {
  return sol.dim == Dimension::two ? extract_2d(sol) : extract_1d3d(sol, sol.dim);
}

std::array<double, 4> cutoff_ladder(const SolverConfig& cfg) {
  return {0.6 * cfg.r_max, 0.8 * cfg.r_max, cfg.r_max, 1.2 * cfg.r_max};
}

ScatteringLength scattering_length(Dimension dim, const RadialPotential& pot,
                                   const SolverConfig& cfg) {
  const auto ladder = cutoff_ladder(cfg);
  const auto sols = solve_radial_at(dim, pot, cfg, ladder);
  std::array<ScatteringLength, 4> rung;
  for (std::size_t i = 0; i < rung.size(); ++i) rung[i] = extract(sols[i]);

  ScatteringLength out = rung[2];
  for (const auto& r : rung) out.near_pole = out.near_pole || r.near_pole;

  const double s_prev = spread(rung[1], rung[2]);
  const double s_last = spread(rung[2], rung[3]);
  out.err_estimate = s_last;
  if (!std::isfinite(s_last) || !std::isfinite(s_prev)) {
    out.err_estimate = kInf;
    out.converged = out.near_pole;
  } else {
    const double floor = 1e4 * cfg.tolerance() * std::max(1.0, std::abs(out.value));
    out.converged = s_last <= floor || s_last <= s_prev;
  }
  if (!out.converged && out.diagnostic.empty())
    out.diagnostic = "no plateau over the cutoff ladder";
  return out;
}

ScatteringLength scattering_length(Dimension dim, double eta, const SolverConfig& cfg) {
  return scattering_length(dim, gaussian(Coupling{eta}), cfg);
}

std::vector<ScatteringLength> scattering_lengths(Dimension dim, std::span<const double> etas,
                                                 const SolverConfig& cfg) {
  std::vector<ScatteringLength> out(etas.size());
  detail::parallel_for(etas.size(), [&](std::size_t i) {
    try {
      out[i] = scattering_length(dim, etas[i], cfg);
    } catch (const SolverError& e) {
      out[i].dim = dim;
      out[i].value = out[i].log_value = out[i].err_estimate =
          std::numeric_limits<double>::quiet_NaN();
      out[i].converged = false;
      out[i].diagnostic = e.what();
    }
  });
  return out;
}

double relative_error(const ScatteringLength& a, const ScatteringLength& ref) {
  if (a.dim == Dimension::two && ref.dim == Dimension::two) {
    if (a.log_value == ref.log_value) return 0.0;
    return std::abs(std::expm1(a.log_value - ref.log_value));
  }
  if (ref.value == 0.0) return std::abs(a.value);
  return std::abs(a.value / ref.value - 1.0);
}

}  // namespace scatlen
