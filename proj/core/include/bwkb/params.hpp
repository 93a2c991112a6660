#pragma once

#include <cmath>

#include "bwkb/errors.hpp"

namespace bwkb {

/// Physical parameters of the coupled model.
///
/// kappa: drag coefficient of the porous medium
/// mu:    fluid viscosity
/// alpha: tangential slip coefficient of the interface law
/// beta:  normal penalization of the interface law
/// eps:   effective viscosity of the porous medium (the small parameter)
///
/// The interface matrices induced by these are M(xi) = beta (xi.n) n and
/// S(xi) = eps^-1 (n.xi) n + alpha (xi - (n.xi) n).
struct PhysicalParams {
  double kappa = 1.0;
  double mu = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double eps = 0.1;

  void validate() const {
    auto check = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string("params: ") + name +
                          " must be positive and finite");
      }
    };
    check(kappa, "kappa");
    check(mu, "mu");
    check(alpha, "alpha");
    check(beta, "beta");
    check(eps, "eps");
  }

  double sqrt_kappa() const { return std::sqrt(kappa); }
};

}  // namespace bwkb
