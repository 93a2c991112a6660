#pragma once

#include <vector>

namespace bwkb {

/// Cutoff along the normal direction: 1 on [0, inner], 0 beyond outer, with a
/// polynomial smoothstep transition of high contact order in between. All
/// derivatives are evaluated exactly from the transition polynomial.
class SmoothCutoff {
public:
  /// contact_order q gives a C^q transition (polynomial of degree 2q+1).
  SmoothCutoff(double inner, double outer, int contact_order = 10);

  double inner() const { return inner_; }
  double outer() const { return outer_; }
  int contact_order() const { return order_; }

  /// m-th derivative of the cutoff at distance t >= 0 (m = 0 is the value).
  double derivative(double t, int m) const;

  double operator()(double t) const { return derivative(t, 0); }

private:
  double inner_;
  double outer_;
  int order_;
  std::vector<double> poly_;  // transition polynomial in u = (t-inner)/(outer-inner)
};

}  // namespace bwkb
