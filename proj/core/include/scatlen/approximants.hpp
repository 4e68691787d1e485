#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scatlen/dimension.hpp"
#include "scatlen/poles.hpp"
#include "scatlen/radial_solver.hpp"

namespace scatlen {

enum class ClosedFormLevel { first, improved };

/// 3D: (sqrt(pi)/2) eta/(eta-2) at either level.
/// 1D: 1/sqrt(pi) + 2/(sqrt(pi) eta) (first), sqrt(2/pi) + 2/(sqrt(pi) eta) (improved).
/// 2D: 2 exp(-3g/2 + 2/eta) (first), sqrt(8) exp(-3g/2 + 2/eta) (improved).
/// Pole inputs return a signed infinity.
double eval_closed_form(Dimension dim, ClosedFormLevel level, double eta);

enum class ModelForm { rational_sum, exponential_sum };

/// Pole-sum approximant.
///   1D/3D: offset(eta) + sum_i alpha_i eta/(eta - W_i), offset = 0 in 3D and
///          sqrt(2/pi) + 2/(sqrt(pi) eta) in 1D.
///   2D:    sqrt(8) exp(-3g/2 + 2/eta + sum_i alpha_i eta/(eta - W_i)).
/// `order` is the table row; it equals W.size() except for the 3D n = 0 row, which is
/// the single-pole closed form W = (2), alpha = (sqrt(pi)/2).
struct ApproximantModel {
  Dimension dim = Dimension::three;
  int order = 0;
  std::vector<double> W;
  std::vector<double> alpha;

  ModelForm form() const;
  /// Throws std::invalid_argument on mismatched lengths or non-increasing W.
  void check() const;
};

/// Offset term of the 1D/3D models, or the exponent offset ln sqrt(8) - 3g/2 + 2/eta in 2D.
double analytic_offset(Dimension dim, double eta);

/// Model value; signed infinity at eta = W_i (and at eta = 0 in 1D/2D).
double eval_model(const ApproximantModel& m, double eta);

/// ln of the 2D model, finite where eval_model would overflow.
double eval_model_log(const ApproximantModel& m, double eta);

/// Published Tables I-III (n = 1..4) plus the n = 0 rows. Throws std::out_of_range
/// for anything else.
ApproximantModel builtin_model(Dimension dim, int n);

struct FitSpec {
  std::vector<std::pair<double, double>> intervals;
  int grid = 400;  ///< points per interval
  double pole_exclusion = 0.05;
};

/// 3D [0, 2.68] u [2.69, 14], 1D [1, 8], 2D [1, 10], 400 points, exclusion 0.05.
FitSpec paper_fit_spec(Dimension dim);

struct Sample {
  double eta = 0.0;
  double a_s = 0.0;
  double log_a = 0.0;  ///< ln a_s in 2D
};

/// Uniform grid over each interval with every |eta - W_i| < pole_exclusion removed.
std::vector<double> fit_grid(const FitSpec& spec, std::span<const double> W);

/// Numeric a_s on a grid (ODE path), evaluated in parallel.
std::vector<Sample> sample_numeric(Dimension dim, std::span<const double> etas,
                                   const SolverConfig& cfg = {});

struct FitResult {
  ApproximantModel model;
  double rms_residual = 0.0;
  double max_abs_residual = 0.0;
  int rank = 0;
  int iterations = 0;  ///< nonlinear refinement steps (2D only)
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares alpha for fixed W = first n poles. 1D/3D: linear in a_s after removing the
/// offset. 2D: linear solve in ln a_s as the start, then Levenberg-Marquardt on a_s itself.
/// Throws FitError on a rank-deficient design and std::invalid_argument when n exceeds
/// the available poles.
FitResult fit_model(Dimension dim, int n, std::span<const double> W, std::span<const Sample> data);
FitResult fit_model(Dimension dim, int n, const PoleSet& poles, std::span<const Sample> data);

/// max |model - a_s| over samples.
double max_abs_error(const ApproximantModel& m, std::span<const Sample> data);
/// max |model/a_s - 1| over samples (through logs in 2D).
double max_rel_error(const ApproximantModel& m, std::span<const Sample> data);
double rms_error(const ApproximantModel& m, std::span<const Sample> data);

}  // namespace scatlen
