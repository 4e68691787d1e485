#include "scatlen/radial_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace scatlen {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kRenormThreshold = 1e150;

using State = std::array<double, 2>;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [coef, k] : terms) {
    out[0] += h * coef * (*k)[0];
    out[1] += h * coef * (*k)[1];
  }
  return out;
}

// Radial equation as a first-order system (value, derivative).
struct RadialRhs {
  const RadialPotential& pot;
  bool cylindrical;  // 2D: extra -Phi'/r term

  State operator()(double r, const State& y) const {
    double d2 = 2.0 * pot(r) * y[0];
    if (cylindrical) d2 -= y[1] / r;
    return {y[1], d2};
  }
};

double wrap_pi(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  x = std::remainder(x, two_pi);
  return x;
}

class Integrator {
 public:
  Integrator(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg)
      : dim_(dim),
        rhs_{pot, dim == Dimension::two},
        tol_(cfg.tolerance()),
        max_steps_(cfg.max_steps),
        h_max_(4.0 * pot.char_length()),
        record_(cfg.record_trajectory) {}

  std::vector<RadialSolution> run(double r0, State y0, std::span<const double> stops) {
    r_ = r0;
    y_ = y0;
    prev_angle_ = angle();
    phase_ = prev_angle_;
    sign_ = sign_of(y_[0]);
    k1_ = rhs_(r_, y_);
    if (record_) trajectory_.push_back({r_, y_[0], y_[1], log_scale_});

    std::vector<RadialSolution> out;
    out.reserve(stops.size());
    double h = initial_step(stops.empty() ? r0 + 1.0 : stops.back());
    for (double stop : stops) {
      while (r_ < stop) {
        const bool clipped = r_ + h >= stop;
        const double h_try = clipped ? stop - r_ : h;
        const double h_next = attempt(h_try);
        if (accepted_) {
          if (clipped) {
            r_ = stop;
            h = std::max(h, h_next);
            h = std::min(h, h_max_);
          } else {
            h = h_next;
          }
        } else {
          h = h_next;
        }
      }
      out.push_back(snapshot());
    }
    return out;
  }

 private:
  double angle() const {
    const double d = dim_ == Dimension::two ? r_ * y_[1] : y_[1];
    return std::atan2(y_[0], d);
  }

  static int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

  double scale(double a, double b) const { return tol_ + tol_ * std::max(std::abs(a), std::abs(b)); }

  double initial_step(double r_target) {
    const double span = r_target - r_;
    auto norm = [&](const State& v, const State& ref) {
      const double s0 = v[0] / scale(ref[0], ref[0]);
      const double s1 = v[1] / scale(ref[1], ref[1]);
      return std::sqrt(0.5 * (s0 * s0 + s1 * s1));
    };
    const double d0 = norm(y_, y_);
    const double d1 = norm(k1_, y_);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, span);
    const State y1 = axpy(y_, h0, {{1.0, &k1_}});
    const State f1 = rhs_(r_ + h0, y1);
    const State df{f1[0] - k1_[0], f1[1] - k1_[1]};
    const double d2 = norm(df, y_) / h0;
    const double dm = std::max(d1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
    return std::min({100.0 * h0, h1, h_max_, span});
  }

  // One Dormand-Prince trial step. Returns the suggested next step size.
  double attempt(double h) {
    if (++steps_ > max_steps_) throw SolverError("step budget exhausted", r_);
    if (h < 1e-14 * std::max(1.0, r_)) throw SolverError("step size underflow", r_);

    const State& k1 = k1_;
    const State k2 = rhs_(r_ + c2 * h, axpy(y_, h, {{a21, &k1}}));
    const State k3 = rhs_(r_ + c3 * h, axpy(y_, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs_(r_ + c4 * h, axpy(y_, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 =
        rhs_(r_ + c5 * h, axpy(y_, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = rhs_(
        r_ + h, axpy(y_, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new =
        axpy(y_, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs_(r_ + h, y_new);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double ei =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double si = ei / scale(y_[i], y_new[i]);
      err += si * si;
    }
    err = std::sqrt(0.5 * err);
    if (!std::isfinite(err) || !std::isfinite(y_new[0]) || !std::isfinite(y_new[1]))
      throw SolverError("non-finite solver state", r_);

    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    accepted_ = err <= 1.0;
    if (!accepted_) return h * std::min(factor, 1.0);

    r_ += h;
    y_ = y_new;
    k1_ = k7;
    track();
    return std::min(h * factor, h_max_);
  }

  void track() {
    const double mag = std::max(std::abs(y_[0]), std::abs(y_[1]));
    if (mag > kRenormThreshold) {
      y_[0] /= mag;
      y_[1] /= mag;
      k1_[0] /= mag;
      k1_[1] /= mag;
      log_scale_ += std::log(mag);
    }
    const double a = angle();
    phase_ += wrap_pi(a - prev_angle_);
    prev_angle_ = a;

    const int s = sign_of(y_[0]);
    if (s != 0) {
      if (sign_ != 0 && s != sign_) ++nodes_;
      sign_ = s;
    }
    if (record_) trajectory_.push_back({r_, y_[0], y_[1], log_scale_});
  }

  RadialSolution snapshot() const {
    RadialSolution sol;
    sol.dim = dim_;
    sol.r_end = r_;
    sol.value = y_[0];
    sol.derivative = y_[1];
    sol.log_scale = log_scale_;
    sol.nodes = nodes_;
    sol.phase = phase_;
    sol.steps = steps_;
    sol.trajectory = trajectory_;
    return sol;
  }

  Dimension dim_;
  RadialRhs rhs_;
  double tol_;
  long max_steps_;
  double h_max_;
  bool record_;

  double r_ = 0.0;
  State y_{};
  State k1_{};
  bool accepted_ = false;
  long steps_ = 0;
  double log_scale_ = 0.0;
  double prev_angle_ = 0.0;
  double phase_ = 0.0;
  int sign_ = 0;
  int nodes_ = 0;
  std::vector<TrajectoryPoint> trajectory_;
};

std::vector<RadialSolution> run_solver(Dimension dim, const RadialPotential& pot,
                                       const SolverConfig& cfg, double r0, State y0,
                                       std::span<const double> radii) {
  require_admissible(pot);
  auto warnings = cfg.check(pot);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > r0) || (i > 0 && !(radii[i] > radii[i - 1])))
      throw std::invalid_argument("solve radii must be ascending and beyond the start radius");
  }
  Integrator integ(dim, pot, cfg);
  auto sols = integ.run(r0, y0, radii);
  for (auto& s : sols) s.warnings = warnings;
  return sols;
}

State u_start(Dimension dim) {
  if (dim == Dimension::one) return {1.0, 0.0};
  if (dim == Dimension::three) return {0.0, 1.0};
  throw std::invalid_argument("integrate_u: dimension must be 1 or 3");
}

}  // namespace

double SolverConfig::tolerance() const {
  return std::pow(10.0, -static_cast<double>(std::min(p, kMaxAccuracy)));
}

std::vector<std::string> SolverConfig::check(const RadialPotential& pot) const {
  if (p < 3) throw std::invalid_argument("SolverConfig: accuracy exponent p must be >= 3");
  if (!(r_max > 0.0) || !std::isfinite(r_max))
    throw std::invalid_argument("SolverConfig: r_max must be positive and finite");
  if (!(epsilon > 0.0)) throw std::invalid_argument("SolverConfig: epsilon must be > 0");
  if (!(epsilon < r_max)) throw std::invalid_argument("SolverConfig: epsilon must be < r_max");
  if (max_steps <= 0) throw std::invalid_argument("SolverConfig: max_steps must be positive");
  std::vector<std::string> w;
  if (r_max < 5.0 * pot.char_length())
    w.emplace_back("r_max is below 5 characteristic lengths; the asymptotic form may not hold");
  if (p > kMaxAccuracy)
    w.emplace_back("p > 13 is not meaningful in double precision; clamped to 13");
  return w;
}

RadialSolution integrate_u_from(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg,
                                double u0, double du0) {
  const double stop[] = {cfg.r_max};
  return run_solver(dim, pot, cfg, 0.0, {u0, du0}, stop).front();
}

RadialSolution integrate_u(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg) {
  const State y0 = u_start(dim);
  return integrate_u_from(dim, pot, cfg, y0[0], y0[1]);
}

RadialSolution integrate_phi2d(const RadialPotential& pot, const SolverConfig& cfg) {
  if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("integrate_phi2d: epsilon must be > 0");
  const double stop[] = {cfg.r_max};
  return run_solver(Dimension::two, pot, cfg, cfg.epsilon, {1.0, 0.0}, stop).front();
}

RadialSolution solve_radial(Dimension dim, const RadialPotential& pot, const SolverConfig& cfg) {
  return dim == Dimension::two ? integrate_phi2d(pot, cfg) : integrate_u(dim, pot, cfg);
}

std::vector<RadialSolution> solve_radial_at(Dimension dim, const RadialPotential& pot,
                                            const SolverConfig& cfg,
                                            std::span<const double> radii) {
  if (dim == Dimension::two) {
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("solve_radial_at: epsilon must be > 0");
    return run_solver(dim, pot, cfg, cfg.epsilon, {1.0, 0.0}, radii);
  }
  return run_solver(dim, pot, cfg, 0.0, u_start(dim), radii);
}

}  // namespace scatlen
