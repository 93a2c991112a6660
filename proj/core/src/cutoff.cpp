#include "bwkb/cutoff.hpp"

#include <cmath>

#include "bwkb/errors.hpp"

namespace bwkb {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

}  // namespace

SmoothCutoff::SmoothCutoff(double inner, double outer, int contact_order)
    : inner_(inner), outer_(outer), order_(contact_order) {
  if (!(outer > inner) || !(inner >= 0.0)) {
    throw ConfigError("SmoothCutoff: need 0 <= inner < outer");
  }
  if (contact_order < 1 || contact_order > 20) {
    throw ConfigError("SmoothCutoff: contact order out of range");
  }
  // chi(u) = 1 - S_q(u) on the transition, S_q the generalized smoothstep
  // S_q(u) = u^(q+1) sum_i C(q+i,i) C(2q+1,q-i) (-u)^i.
  const int q = order_;
  poly_.assign(2 * q + 2, 0.0);
  poly_[0] = 1.0;
  for (int i = 0; i <= q; ++i) {
    const double c = binomial(q + i, i) * binomial(2 * q + 1, q - i) *
                     ((i % 2) ? 1.0 : -1.0);
    poly_[q + 1 + i] += c;  // -S contributes with flipped sign
  }
}

double SmoothCutoff::derivative(double t, int m) const {
  if (t <= inner_) return m == 0 ? 1.0 : 0.0;
  if (t >= outer_) return 0.0;
  const double width = outer_ - inner_;
  const double u = (t - inner_) / width;
  const int deg = static_cast<int>(poly_.size()) - 1;
  if (m > deg) return 0.0;
  // m-th derivative of the polynomial in u, then chain rule in t
  double value = 0.0;
  for (int j = deg; j >= m; --j) {
    double fall = 1.0;
    for (int r = 0; r < m; ++r) fall *= (j - r);
    value = value * u + poly_[j] * fall;
  }
  // Horner above accumulates sum_j poly_j * j!/(j-m)! * u^(j-m)
  return value / std::pow(width, m);
}

}  // namespace bwkb
