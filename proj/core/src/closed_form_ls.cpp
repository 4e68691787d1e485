#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scatlen/oracles.hpp"

namespace scatlen {

namespace {

// Integrals of Gaussian-weighted functions over [0, inf); the weight is below 1e-35 at 9.
template <class F>
double gauss_integral(F f) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  return GK::integrate(f, 0.0, 9.0, 15, 1e-14);
}

}  // namespace

double ein(double z) {
  if (z < 0.0) throw std::domain_error("ein: z must be >= 0");
  if (z < 1.0) {
    // sum_{k>=1} (-1)^(k+1) z^k / (k k!)
    double term = 1.0, sum = 0.0;
    for (int k = 1; k < 40; ++k) {
      term *= -z / k;
      sum -= term / k;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return kEulerGamma + std::log(z) + boost::math::expint(1, z);
}

double first_iterate(Dimension dim, double eta, double y) {
  switch (dim) {
    case Dimension::three:
      return y * (1.0 - 0.5 * eta) + 0.25 * eta * kSqrtPi * std::erf(y);
    case Dimension::one:
      return 1.0 - 0.5 * eta * (std::exp(-y * y) + kSqrtPi * y * std::erf(y) - 1.0);
    case Dimension::two:
      return 1.0 - 0.25 * eta * ein(y * y);
  }
  throw std::invalid_argument("first_iterate: bad dimension");
}

double closed_form_ls(Dimension dim, double eta, int order) {
  if (order != 0 && order != 1) throw std::invalid_argument("closed_form_ls: order must be 0 or 1");

  // Asymptotic constants of the iterate: 1D/3D c1 = -eta int e^{-x^2} u, c2 = -eta int x e^{-x^2} u;
  // 2D c2 = -eta int x e^{-x^2} Phi, c1 = -eta int x ln x e^{-x^2} Phi.
  double c1 = 0.0, c2 = 0.0;
  if (order == 0) {
    switch (dim) {
      case Dimension::three:
        c1 = -0.5 * eta;
        c2 = -0.25 * kSqrtPi * eta;
        break;
      case Dimension::one:
        c1 = -0.5 * kSqrtPi * eta;
        c2 = -0.5 * eta;
        break;
      case Dimension::two:
        c1 = 0.25 * kEulerGamma * eta;
        c2 = -0.5 * eta;
        break;
    }
  } else {
    auto u = [&](double x) { return first_iterate(dim, eta, x); };
    if (dim == Dimension::two) {
      c1 = -eta * gauss_integral([&](double x) {
        return x > 0.0 ? x * std::log(x) * std::exp(-x * x) * u(x) : 0.0;
      });
      c2 = -eta * gauss_integral([&](double x) { return x * std::exp(-x * x) * u(x); });
    } else {
      c1 = -eta * gauss_integral([&](double x) { return std::exp(-x * x) * u(x); });
      c2 = -eta * gauss_integral([&](double x) { return x * std::exp(-x * x) * u(x); });
    }
  }

  switch (dim) {
    case Dimension::three:
      return c2 / (1.0 + c1);
    case Dimension::one:
      return (c2 - 1.0) / c1;
    case Dimension::two:
      return std::exp((c1 - 1.0) / c2 - kEulerGamma + std::numbers::ln2);
  }
  throw std::invalid_argument("closed_form_ls: bad dimension");
}

}  // namespace scatlen
