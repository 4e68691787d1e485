#include "scatlen/potentials.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace scatlen {

Coupling Coupling::from_dimensional(double V0, double mu, double hbar) {
  return Coupling{V0 * mu / (hbar * hbar)};
}

double Coupling::to_dimensional_strength(double mu, double hbar) const {
  return eta * hbar * hbar / mu;
}

RadialPotential::RadialPotential(std::function<double(double)> eval, double char_length,
                                 double origin_exponent, Tail tail)
    : eval_(std::move(eval)),
      char_length_(char_length),
      origin_exponent_(origin_exponent),
      tail_(tail) {
  if (!eval_) throw std::invalid_argument("RadialPotential: empty evaluation function");
  if (!(char_length_ > 0.0) || !std::isfinite(char_length_))
    throw std::invalid_argument("RadialPotential: characteristic length must be positive");
}

RadialPotential gaussian(Coupling c) {
  if (!std::isfinite(c.eta)) throw std::invalid_argument("gaussian: coupling must be finite");
  const double half = 0.5 * c.eta;
  RadialPotential pot([half](double y) { return -half * std::exp(-y * y); }, 1.0, 0.0,
                      Tail::gaussian());
  pot.gaussian_eta_ = c.eta;
  return pot;
}

ValidityReport validate(const RadialPotential& pot) {
  ValidityReport rep;
  rep.origin_ok = pot.origin_exponent() < 1.0;
  switch (pot.tail().kind) {
    case TailKind::gaussian:
    case TailKind::exponential:
      rep.tail_ok = true;
      break;
    case TailKind::power:
      rep.tail_ok = pot.tail().excess > 0.0;
      break;
  }
  if (!rep.origin_ok) {
    rep.diagnostic = "origin divergence r^-" + std::to_string(pot.origin_exponent()) +
                     " has s >= 1: modified boundary conditions required";
  }
  if (!rep.tail_ok) {
    if (!rep.diagnostic.empty()) rep.diagnostic += "; ";
    rep.diagnostic +=
        "tail decays no faster than r^-n: no scattering length exists for this potential";
  }
  return rep;
}

void require_admissible(const RadialPotential& pot) {
  const auto rep = validate(pot);
  if (!rep.admitted()) throw std::invalid_argument(rep.diagnostic);
}

}  // namespace scatlen
