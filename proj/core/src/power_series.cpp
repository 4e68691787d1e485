#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "scatlen/oracles.hpp"

namespace scatlen {

namespace {

constexpr double kOriginSegment = 0.5;  // origin series used on [0, 0.5]
constexpr double kStep = 0.25;          // Taylor re-expansion step beyond
constexpr double kEnd = 8.0;            // e^{-y^2} weight below 1e-27 past this point
constexpr int kTaylorOrder = 40;

using Gauss = boost::math::quadrature::gauss<double, 24>;

struct Moments {
  double c0 = 0.0;  // int y e^{-y^2} u
  double m0 = 0.0;  // int e^{-y^2} u
};

template <class U>
void add_moments(Moments& m, const U& u, double a, double b) {
  m.c0 += Gauss::integrate([&](double y) { return y * std::exp(-y * y) * u(y); }, a, b);
  m.m0 += Gauss::integrate([&](double y) { return std::exp(-y * y) * u(y); }, a, b);
}

double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

}  // namespace

std::vector<double> series_coefficients(double eta, int K) {
  if (K < 0) throw std::invalid_argument("series_coefficients: K must be >= 0");
  std::vector<double> b(static_cast<std::size_t>(K) + 1);
  b[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    double s = 0.0;
    double inv_fact = 1.0;  // 1/l!
    for (int l = 0; l < k; ++l) {
      if (l > 0) inv_fact /= l;
      s += ((l % 2 == 0) ? -1.0 : 1.0) * b[k - 1 - l] * inv_fact;
    }
    b[k] = eta / (2.0 * k * (2.0 * k - 1.0)) * s;
  }
  return b;
}

PartialSums moment_partial_sums(double eta, int K) {
  const auto b = series_coefficients(eta, K);
  PartialSums ps;
  double c0 = 0.5, d = 0.5;
  double fact = 1.0;     // k!
  double dfact = 1.0;    // (2k-1)!!
  double pow2 = 2.0;     // 2^(k+1)
  ps.c0.push_back(c0);
  ps.d.push_back(d);
  for (int k = 1; k <= K; ++k) {
    fact *= k;
    dfact *= 2.0 * k - 1.0;
    pow2 *= 2.0;
    c0 += fact * b[k] / 2.0;
    d += dfact * b[k] / pow2;
    ps.c0.push_back(c0);
    ps.d.push_back(d);
  }
  return ps;
}

SeriesState series_state(double eta, int K) {
  if (K < 10) throw std::invalid_argument("series_state: K must be >= 10");
  SeriesState st;
  st.eta = eta;
  st.K = K;
  st.b = series_coefficients(eta, K);

  // Origin segment: u as a polynomial in y^2.
  const auto& b = st.b;
  auto u0 = [&](double y) { return horner(b, y * y); };
  std::vector<double> db(b.size() - 1);
  for (std::size_t k = 1; k < b.size(); ++k) db[k - 1] = 2.0 * static_cast<double>(k) * b[k];
  Moments mom;
  add_moments(mom, u0, 0.0, kOriginSegment);
  double u = u0(kOriginSegment);
  double du = kOriginSegment * horner(db, kOriginSegment * kOriginSegment);

  // Re-expand about c and step by h; g_j are the Taylor coefficients of exp(-(c+s)^2).
  std::vector<double> g(kTaylorOrder + 1), A(kTaylorOrder + 1);
  for (double c = kOriginSegment; c < kEnd - 1e-12; c += kStep) {
    g[0] = std::exp(-c * c);
    g[1] = -2.0 * c * g[0];
    for (int j = 1; j < kTaylorOrder; ++j) g[j + 1] = (-2.0 * c * g[j] - 2.0 * g[j - 1]) / (j + 1);
    A[0] = u;
    A[1] = du;
    for (int m = 0; m + 2 <= kTaylorOrder; ++m) {
      double s = 0.0;
      for (int j = 0; j <= m; ++j) s += g[j] * A[m - j];
      A[m + 2] = -eta * s / ((m + 2.0) * (m + 1.0));
    }
    auto useg = [&](double y) { return horner(A, y - c); };
    add_moments(mom, useg, c, c + kStep);
    double dsum = 0.0;
    for (int m = kTaylorOrder; m >= 1; --m) dsum = dsum * kStep + m * A[m];
    u = useg(c + kStep);
    du = dsum;
  }
  st.c0 = mom.c0;
  st.d = mom.m0 / kSqrtPi;
  return st;
}

ScatteringLength series_a1d(double eta, int K) {
  if (eta == 0.0 || !std::isfinite(eta))
    throw std::invalid_argument("series_a1d: eta must be finite and nonzero");
  const auto st = series_state(eta, K);
  ScatteringLength a;
  a.dim = Dimension::one;
  const double den = st.d * kSqrtPi * eta;
  a.value = (1.0 + eta * st.c0) / den;
  a.log_value = std::log(std::abs(a.value));
  a.near_pole = std::abs(st.d) < 1e-10;
  if (a.near_pole) a.diagnostic = "d vanishes: first bound-state threshold";

  // Size of the last kept term on the origin segment.
  const double tail = std::abs(st.b.back()) * std::pow(kOriginSegment, 2.0 * K);
  if (tail > 1e-15) {
    a.converged = false;
    a.diagnostic = fmt::format("series tail {:.3g} at K = {}", tail, K);
  }
  a.err_estimate = tail * std::abs(a.value);
  return a;
}

}  // namespace scatlen
