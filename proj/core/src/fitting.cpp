#include <Eigen/Dense>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>
#include <unsupported/Eigen/NonLinearOptimization>

#include "parallel.hpp"
#include "scatlen/approximants.hpp"
#include "scatlen/extraction.hpp"

namespace scatlen {

namespace {

Eigen::MatrixXd design(std::span<const Sample> data, std::span<const double> W) {
  Eigen::MatrixXd X(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(W.size()));
  for (std::size_t j = 0; j < data.size(); ++j) {
    for (std::size_t i = 0; i < W.size(); ++i) X(j, i) = data[j].eta / (data[j].eta - W[i]);
  }
  return X;
}

// Residuals model - a_s of the 2D exponential form for the Eigen LM driver.
struct ExpSumResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const Eigen::MatrixXd& X;
  const Eigen::VectorXd& offset;
  const Eigen::VectorXd& target;

  int inputs() const { return static_cast<int>(X.cols()); }
  int values() const { return static_cast<int>(X.rows()); }

  int operator()(const Eigen::VectorXd& alpha, Eigen::VectorXd& r) const {
    r = (offset + X * alpha).array().exp().matrix() - target;
    return 0;
  }
  int df(const Eigen::VectorXd& alpha, Eigen::MatrixXd& J) const {
    const Eigen::VectorXd m = (offset + X * alpha).array().exp();
    J = m.asDiagonal() * X;
    return 0;
  }
};

}  // namespace

std::vector<double> fit_grid(const FitSpec& spec, std::span<const double> W) {
  if (spec.grid < 2) throw std::invalid_argument("fit_grid: need at least 2 points per interval");
  std::vector<double> etas;
  for (const auto& [a, b] : spec.intervals) {
    if (!(b > a)) throw std::invalid_argument("fit_grid: empty interval");
    for (int k = 0; k < spec.grid; ++k) {
      const double eta = a + (b - a) * k / (spec.grid - 1);
      bool excluded = false;
      for (double w : W) excluded = excluded || std::abs(eta - w) < spec.pole_exclusion;
      if (!excluded) etas.push_back(eta);
    }
  }
  return etas;
}

std::vector<Sample> sample_numeric(Dimension dim, std::span<const double> etas,
                                   const SolverConfig& cfg) {
  std::vector<Sample> out(etas.size());
  detail::parallel_for(etas.size(), [&](std::size_t i) {
    const auto a = scattering_length(dim, etas[i], cfg);
    out[i] = {etas[i], a.value, a.log_value};
  });
  return out;
}

FitResult fit_model(Dimension dim, int n, std::span<const double> W, std::span<const Sample> data) {
  if (n < 0) throw std::invalid_argument("fit_model: negative order");
  if (static_cast<std::size_t>(n) > W.size())
    throw std::invalid_argument(
        fmt::format("fit_model: order {} needs {} poles, {} given", n, n, W.size()));

  FitResult res;
  res.model.dim = dim;
  res.model.order = n;
  res.model.W.assign(W.begin(), W.begin() + n);
  if (n > 0) {
    if (data.size() < static_cast<std::size_t>(n))
      throw FitError("fit_model: fewer samples than parameters");
    const Eigen::MatrixXd X = design(data, res.model.W);
    Eigen::VectorXd offset(X.rows()), y(X.rows());
    for (Eigen::Index j = 0; j < X.rows(); ++j) {
      const auto& s = data[static_cast<std::size_t>(j)];
      offset(j) = analytic_offset(dim, s.eta);
      y(j) = dim == Dimension::two ? s.log_a - offset(j) : s.a_s - offset(j);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-12);
    res.rank = static_cast<int>(qr.rank());
    if (res.rank < n)
      throw FitError(fmt::format("fit_model: design matrix has rank {} < {}", res.rank, n));
    Eigen::VectorXd alpha = qr.solve(y);

    if (dim == Dimension::two) {
      Eigen::VectorXd target(X.rows());
      for (Eigen::Index j = 0; j < X.rows(); ++j) target(j) = data[static_cast<std::size_t>(j)].a_s;
      ExpSumResidual fn{X, offset, target};
      Eigen::LevenbergMarquardt<ExpSumResidual> lm(fn);
      lm.parameters.xtol = 1e-14;
      lm.parameters.ftol = 1e-14;
      lm.parameters.maxfev = 2000;
      lm.minimize(alpha);
      res.iterations = static_cast<int>(lm.iter);
    }
    res.model.alpha.assign(alpha.data(), alpha.data() + alpha.size());
  }
  res.rms_residual = rms_error(res.model, data);
  res.max_abs_residual = max_abs_error(res.model, data);
  return res;
}

FitResult fit_model(Dimension dim, int n, const PoleSet& poles, std::span<const Sample> data) {
  if (poles.dim != dim) throw std::invalid_argument("fit_model: pole set dimension mismatch");
  std::vector<double> W;
  for (const auto& p : poles.poles) W.push_back(p.W);
  return fit_model(dim, n, W, data);
}

}  // namespace scatlen
