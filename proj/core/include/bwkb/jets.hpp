#pragma once

#include <cmath>
#include <complex>

namespace bwkb {

/// Value plus first three derivatives of a scalar function of one variable.
/// Enough to push stream functions through the momentum operators when
/// generating manufactured data.
struct Jet3 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  static Jet3 variable(double y) { return {y, 1.0, 0.0, 0.0}; }
  static Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet3 operator-(const Jet3& a, const Jet3& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet3 operator*(double s, const Jet3& a) {
  return {s * a.v, s * a.d1, s * a.d2, s * a.d3};
}
inline Jet3 operator*(const Jet3& a, const Jet3& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2,
          a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3};
}

inline Jet3 sin(const Jet3& a) {
  // valid for affine arguments (a.d2 = a.d3 = 0), which is how recipes use it
  const double s = std::sin(a.v), c = std::cos(a.v), w = a.d1;
  return {s, c * w, -s * w * w, -c * w * w * w};
}
inline Jet3 cos(const Jet3& a) {
  const double s = std::sin(a.v), c = std::cos(a.v), w = a.d1;
  return {c, -s * w, -c * w * w, s * w * w * w};
}
inline Jet3 exp(const Jet3& a) {
  const double e = std::exp(a.v), w = a.d1;
  return {e, e * w, e * w * w, e * w * w * w};
}

/// Complex-coefficient jet: a complex linear combination of real jets.
struct CJet3 {
  std::complex<double> v{0.0, 0.0};
  std::complex<double> d1{0.0, 0.0};
  std::complex<double> d2{0.0, 0.0};
  std::complex<double> d3{0.0, 0.0};

  CJet3() = default;
  CJet3(const Jet3& re) : v(re.v), d1(re.d1), d2(re.d2), d3(re.d3) {}
};

inline CJet3 operator+(const CJet3& a, const CJet3& b) {
  CJet3 r;
  r.v = a.v + b.v;
  r.d1 = a.d1 + b.d1;
  r.d2 = a.d2 + b.d2;
  r.d3 = a.d3 + b.d3;
  return r;
}
inline CJet3 operator*(std::complex<double> s, const CJet3& a) {
  CJet3 r;
  r.v = s * a.v;
  r.d1 = s * a.d1;
  r.d2 = s * a.d2;
  r.d3 = s * a.d3;
  return r;
}

}  // namespace bwkb
