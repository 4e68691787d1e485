#include "scatlen/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parallel.hpp"

namespace scatlen {

double truncate_digits(double W, int ndigit) {
  if (ndigit < 1) throw std::invalid_argument("truncate_digits: ndigit must be >= 1");
  if (W == 0.0 || !std::isfinite(W)) return W;
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(W))));
  const int decimals = ndigit - 1 - exponent;
  // Divide by a power of ten rather than multiply by its inverse: 10^k is exact for small k.
  if (decimals >= 0) {
    const double scale = std::pow(10.0, decimals);
    return std::round(W * scale) / scale;
  }
  const double scale = std::pow(10.0, -decimals);
  return std::round(W / scale) * scale;
}

SolverConfig sensitivity_reference_config() {
  SolverConfig cfg;
  cfg.p = SolverConfig::kMaxAccuracy;
  return cfg;
}

std::vector<ScatteringLength> sensitivity_reference(std::span<const double> eta_grid,
                                                    const SolverConfig& cfg) {
  std::vector<ScatteringLength> out(eta_grid.size());
  detail::parallel_for(eta_grid.size(), [&](std::size_t i) {
    try {
      out[i] = scattering_length(Dimension::three, eta_grid[i], cfg);
    } catch (const SolverError& e) {
      out[i].value = std::numeric_limits<double>::quiet_NaN();
      out[i].converged = false;
      out[i].diagnostic = e.what();
    }
  });
  return out;
}

SensitivityReport pole_sensitivity(const ApproximantModel& model, std::span<const int> ndigits,
                                   std::span<const double> eta_grid,
                                   std::span<const ScatteringLength> reference,
                                   double reference_W1) {
  if (model.dim != Dimension::three || model.W.empty())
    throw std::invalid_argument("pole_sensitivity: needs a 3D model with at least one pole");
  if (reference.size() != eta_grid.size())
    throw std::invalid_argument("pole_sensitivity: reference and eta grid differ in size");

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  SensitivityReport rep;
  rep.ndigit.assign(ndigits.begin(), ndigits.end());
  rep.eta_grid.assign(eta_grid.begin(), eta_grid.end());
  rep.reference_W1 = reference_W1;
  rep.noise_floor = sensitivity_reference_config().tolerance();
  for (const auto& r : reference) rep.reference.push_back(r.value);

  for (int nd : rep.ndigit) {
    ApproximantModel m = model;
    m.W[0] = truncate_digits(reference_W1, nd);
    std::vector<double> abs_row, rel_row;
    for (std::size_t j = 0; j < eta_grid.size(); ++j) {
      const auto& ref = reference[j];
      if (!std::isfinite(ref.value) || !ref.converged) {
        abs_row.push_back(nan);
        rel_row.push_back(nan);
        continue;
      }
      const double v = eval_model(m, eta_grid[j]);
      abs_row.push_back(std::abs(v - ref.value));
      rel_row.push_back(std::abs(v / ref.value - 1.0));
    }
    rep.errors.push_back(std::move(abs_row));
    rep.rel_errors.push_back(std::move(rel_row));
    rep.truncated_W1.push_back(m.W[0]);
  }
  return rep;
}

std::vector<double> default_sensitivity_grid(double reference_W1) {
  std::vector<double> grid;
  for (int k = -18; k <= -2; ++k) {
    const double off = std::pow(10.0, 0.5 * k);
    grid.push_back(reference_W1 - off);
    grid.push_back(reference_W1 + off);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

}  // namespace scatlen
