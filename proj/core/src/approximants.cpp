#include "scatlen/approximants.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace scatlen {

namespace {

const double kSqrt8 = std::sqrt(8.0);
const double kLnSqrt8 = 0.5 * std::log(8.0);

double pole_sum(const ApproximantModel& m, double eta) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.W.size(); ++i) s += m.alpha[i] * eta / (eta - m.W[i]);
  return s;
}

struct Row {
  std::vector<double> W;
  std::vector<double> alpha;
};

// Tables I-III. W per dimension, alpha per order.
const std::vector<double> kW3 = {2.68400465092, 17.7956995472, 45.5734799205, 85.9634003809};
const std::vector<double> kW1 = {8.6490975, 30.106280, 64.193333, 110.88204};
const std::vector<double> kW2 = {11.076903, 35.081301, 71.774188, 121.10485};

const std::vector<std::vector<double>> kAlpha3 = {
    {1.11942413969},
    {1.12031910105, 0.378402820446},
    {1.12034867267, 0.322141242778, 0.332600792963},
    {1.12034897387, 0.326461774698, 0.135560767226, 0.375312300726},
};
const std::vector<std::vector<double>> kAlpha1 = {
    {0.52689372},
    {0.51419392, 0.35899733},
    {0.51460375, 0.20675606, 0.36766012},
    {0.51459468, 0.24033314, 0.040512694, 0.44420188},
};
const std::vector<std::vector<double>> kAlpha2 = {
    {0.33553384},
    {0.30476380, 0.20423041},
    {0.30609585, 0.10986740, 0.19295017},
    {0.30605919, 0.13171195, 0.017845686, 0.22077743},
};

}  // namespace

double eval_closed_form(Dimension dim, ClosedFormLevel level, double eta) {
  const bool improved = level == ClosedFormLevel::improved;
  switch (dim) {
    case Dimension::three:
      return 0.5 * kSqrtPi * eta / (eta - 2.0);
    case Dimension::one:
      return (improved ? std::sqrt(2.0 / std::numbers::pi) : 1.0 / kSqrtPi) + 2.0 / (kSqrtPi * eta);
    case Dimension::two:
      return (improved ? kSqrt8 : 2.0) * std::exp(-1.5 * kEulerGamma + 2.0 / eta);
  }
  throw std::invalid_argument("eval_closed_form: bad dimension");
}

ModelForm ApproximantModel::form() const {
  return dim == Dimension::two ? ModelForm::exponential_sum : ModelForm::rational_sum;
}

void ApproximantModel::check() const {
  if (order < 0) throw std::invalid_argument("ApproximantModel: negative order");
  if (W.size() != alpha.size())
    throw std::invalid_argument("ApproximantModel: W and alpha differ in length");
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (!(W[i] > 0.0) || (i > 0 && !(W[i] > W[i - 1])))
      throw std::invalid_argument("ApproximantModel: W must be positive and strictly increasing");
  }
}

double analytic_offset(Dimension dim, double eta) {
  switch (dim) {
    case Dimension::three:
      return 0.0;
    case Dimension::one:
      return std::sqrt(2.0 / std::numbers::pi) + 2.0 / (kSqrtPi * eta);
    case Dimension::two:
      return kLnSqrt8 - 1.5 * kEulerGamma + 2.0 / eta;
  }
  throw std::invalid_argument("analytic_offset: bad dimension");
}

double eval_model_log(const ApproximantModel& m, double eta) {
  if (m.dim != Dimension::two) return std::log(std::abs(eval_model(m, eta)));
  return analytic_offset(m.dim, eta) + pole_sum(m, eta);
}

double eval_model(const ApproximantModel& m, double eta) {
  if (m.dim == Dimension::two) {
    // 2/eta -> +inf at eta = 0 while the pole terms stay finite.
    if (eta == 0.0) return std::numeric_limits<double>::infinity();
    return std::exp(eval_model_log(m, eta));
  }
  return analytic_offset(m.dim, eta) + pole_sum(m, eta);
}

ApproximantModel builtin_model(Dimension dim, int n) {
  if (n < 0 || n > 4) throw std::out_of_range("builtin_model: order must be 0..4");
  ApproximantModel m;
  m.dim = dim;
  m.order = n;
  if (n == 0) {
    if (dim == Dimension::three) {
      m.W = {2.0};
      m.alpha = {0.5 * kSqrtPi};
    }
    return m;
  }
  const auto& W = dim == Dimension::three ? kW3 : dim == Dimension::one ? kW1 : kW2;
  const auto& A = dim == Dimension::three ? kAlpha3 : dim == Dimension::one ? kAlpha1 : kAlpha2;
  m.W.assign(W.begin(), W.begin() + n);
  m.alpha = A[n - 1];
  return m;
}

FitSpec paper_fit_spec(Dimension dim) {
  FitSpec s;
  switch (dim) {
    case Dimension::three:
      s.intervals = {{0.0, 2.68}, {2.69, 14.0}};
      break;
    case Dimension::one:
      s.intervals = {{1.0, 8.0}};
      break;
    case Dimension::two:
      s.intervals = {{1.0, 10.0}};
      break;
  }
  return s;
}

double max_abs_error(const ApproximantModel& m, std::span<const Sample> data) {
  double e = 0.0;
  for (const auto& s : data) e = std::max(e, std::abs(eval_model(m, s.eta) - s.a_s));
  return e;
}

double max_rel_error(const ApproximantModel& m, std::span<const Sample> data) {
  double e = 0.0;
  for (const auto& s : data) {
    const double r = m.dim == Dimension::two
                         ? std::abs(std::expm1(eval_model_log(m, s.eta) - s.log_a))
                         : std::abs(eval_model(m, s.eta) / s.a_s - 1.0);
    e = std::max(e, r);
  }
  return e;
}

double rms_error(const ApproximantModel& m, std::span<const Sample> data) {
  if (data.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : data) {
    const double r = eval_model(m, s.eta) - s.a_s;
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(data.size()));
}

}  // namespace scatlen
