#pragma once

#include <functional>
#include <optional>
#include <string>

#include "scatlen/dimension.hpp"

namespace scatlen {

// Everything below works in reduced units: lengths in L, energies in hbar^2/(mu L^2).

/// Dimensionless well depth eta = V0 mu / hbar^2. Positive eta is attractive.
struct Coupling {
  double eta = 0.0;

  /// From a Gaussian strength V0 (energy * length^2, as in V = -V0/(2L^2) exp(-r^2/L^2)),
  /// reduced mass mu and hbar. L drops out: a_s/L only depends on eta.
  static Coupling from_dimensional(double V0, double mu, double hbar = 1.0);

  /// Inverse of from_dimensional.
  double to_dimensional_strength(double mu, double hbar = 1.0) const;
};

/// Dimensionful scattering length from the reduced value a_s/L.
inline double to_dimensional_length(double a_reduced, double L) { return a_reduced * L; }

enum class TailKind { gaussian, exponential, power };

/// Large-r decay class of a potential. For `power` the potential falls off like
/// r^-(n + excess) in n dimensions; a scattering length needs excess > 0.
struct Tail {
  TailKind kind = TailKind::gaussian;
  double excess = 0.0;

  static Tail gaussian() { return {TailKind::gaussian, 0.0}; }
  static Tail exponential() { return {TailKind::exponential, 0.0}; }
  static Tail power(double excess) { return {TailKind::power, excess}; }
};

/// A spherically symmetric potential V(r) with declared metadata.
///
/// The origin exponent s (V ~ r^-s near 0) and the tail class are declared, never
/// inferred; validate() decides admissibility from them alone.
class RadialPotential {
 public:
  RadialPotential(std::function<double(double)> eval, double char_length, double origin_exponent,
                  Tail tail);

  double operator()(double r) const { return eval_(r); }

  double char_length() const { return char_length_; }
  double origin_exponent() const { return origin_exponent_; }
  const Tail& tail() const { return tail_; }

  /// Set only for potentials built by gaussian(); the integral-equation oracles need it.
  std::optional<double> gaussian_eta() const { return gaussian_eta_; }

 private:
  friend RadialPotential gaussian(Coupling);

  std::function<double(double)> eval_;
  double char_length_;
  double origin_exponent_;
  Tail tail_;
  std::optional<double> gaussian_eta_;
};

/// V(y) = -(eta/2) exp(-y^2).
RadialPotential gaussian(Coupling c);

struct ValidityReport {
  bool origin_ok = false;  ///< s < 1, so Phi(0) = 1, Phi'(0) = 0 holds
  bool tail_ok = false;    ///< short enough range for a scattering length to exist
  std::string diagnostic;

  bool admitted() const { return origin_ok && tail_ok; }
};

ValidityReport validate(const RadialPotential& pot);

/// Throws std::invalid_argument carrying the diagnostic when validate() rejects.
void require_admissible(const RadialPotential& pot);

}  // namespace scatlen
