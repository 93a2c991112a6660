#include "bwkb/bl_profile.hpp"

#include <cmath>

#include "bwkb/errors.hpp"

namespace bwkb {

namespace {
const Eigen::VectorXcd kEmpty;
}

CoefficientField CoefficientField::zero(int n_modes) {
  CoefficientField f;
  f.by_order_.assign(1, Eigen::VectorXcd::Zero(n_modes + 1));
  return f;
}

CoefficientField CoefficientField::from_trace(const Eigen::VectorXcd& modes, int m) {
  CoefficientField f;
  f.by_order_.assign(m + 1, Eigen::VectorXcd::Zero(modes.size()));
  f.by_order_[m] = modes;
  return f;
}

bool CoefficientField::is_zero(double tol) const {
  for (const auto& v : by_order_) {
    if (v.size() > 0 && v.cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

int CoefficientField::n_modes() const {
  for (const auto& v : by_order_) {
    if (v.size() > 0) return static_cast<int>(v.size()) - 1;
  }
  return -1;
}

const Eigen::VectorXcd& CoefficientField::order(int m) const {
  if (m < 0 || m >= static_cast<int>(by_order_.size())) return kEmpty;
  return by_order_[m];
}

Eigen::VectorXcd& CoefficientField::mutable_order(int m, int n_modes) {
  if (m >= static_cast<int>(by_order_.size())) {
    by_order_.resize(m + 1);
  }
  if (by_order_[m].size() == 0) {
    by_order_[m] = Eigen::VectorXcd::Zero(n_modes + 1);
  }
  return by_order_[m];
}

CoefficientField& CoefficientField::operator+=(const CoefficientField& o) {
  for (int m = 0; m <= o.max_chi_order(); ++m) {
    if (o.order(m).size() == 0) continue;
    auto& mine = mutable_order(m, static_cast<int>(o.order(m).size()) - 1);
    if (mine.size() != o.order(m).size()) {
      throw InternalError("CoefficientField: mode count mismatch");
    }
    mine += o.order(m);
  }
  return *this;
}

CoefficientField& CoefficientField::operator-=(const CoefficientField& o) {
  CoefficientField neg = o;
  neg *= Complex(-1.0, 0.0);
  return (*this += neg);
}

CoefficientField& CoefficientField::operator*=(Complex s) {
  for (auto& v : by_order_) v *= s;
  return *this;
}

Eigen::VectorXcd CoefficientField::trace(int n_modes) const {
  if (by_order_.empty() || by_order_[0].size() == 0) {
    return Eigen::VectorXcd::Zero(n_modes + 1);
  }
  return by_order_[0];
}

Complex CoefficientField::eval(const SlabGeometry& geom, const SmoothCutoff& chi,
                               double x, double d) const {
  Complex sum = 0.0;
  for (int m = 0; m <= max_chi_order(); ++m) {
    const auto& modes = order(m);
    if (modes.size() == 0) continue;
    const double w = chi.derivative(d, m);
    if (w == 0.0) continue;
    Complex trig = 0.0;
    for (int k = 0; k < modes.size(); ++k) {
      const Complex phase = std::exp(kImag * (wavenumber(geom, k) * x));
      trig += modes(k) * phase;
      if (k > 0) trig += std::conj(modes(k)) * std::conj(phase);
    }
    sum += trig * w;
  }
  return sum;
}

Complex CoefficientField::eval_mode(const SmoothCutoff& chi, int k, double d) const {
  Complex sum = 0.0;
  for (int m = 0; m <= max_chi_order(); ++m) {
    const auto& modes = order(m);
    if (modes.size() == 0 || k >= modes.size()) continue;
    sum += modes(k) * chi.derivative(d, m);
  }
  return sum;
}

double CoefficientField::max_abs() const {
  double r = 0.0;
  for (const auto& v : by_order_) {
    if (v.size() > 0) r = std::max(r, v.cwiseAbs().maxCoeff());
  }
  return r;
}

CoefficientField normal_derivative(const CoefficientField& f) {
  CoefficientField out;
  const int n = f.n_modes();
  if (n < 0) return out;
  for (int m = 0; m <= f.max_chi_order(); ++m) {
    if (f.order(m).size() == 0) continue;
    out.mutable_order(m + 1, n) += f.order(m);
  }
  return out;
}

CoefficientField tangential_derivative(const CoefficientField& f,
                                       const SlabGeometry& geom) {
  CoefficientField out;
  const int n = f.n_modes();
  if (n < 0) return out;
  for (int m = 0; m <= f.max_chi_order(); ++m) {
    if (f.order(m).size() == 0) continue;
    auto& target = out.mutable_order(m, n);
    for (int k = 0; k <= n; ++k) {
      target(k) += kImag * wavenumber(geom, k) * f.order(m)(k);
    }
  }
  return out;
}

CoefficientField laplacian(const CoefficientField& f, const SlabGeometry& geom,
                           const CurvatureHooks& hooks) {
  CoefficientField out;
  const int n = f.n_modes();
  if (n < 0) return out;
  for (int m = 0; m <= f.max_chi_order(); ++m) {
    if (f.order(m).size() == 0) continue;
    auto& tangential = out.mutable_order(m, n);
    for (int k = 0; k <= n; ++k) {
      const double xi = wavenumber(geom, k);
      tangential(k) += -xi * xi * f.order(m)(k);
    }
    out.mutable_order(m + 2, n) += f.order(m);
    if (hooks.delta_d != 0.0) {
      out.mutable_order(m + 1, n) += hooks.delta_d * f.order(m);
    }
  }
  return out;
}

bool BLProfile::is_zero(double tol) const {
  for (const auto& c : coeff) {
    if (!c.is_zero(tol)) return false;
  }
  return true;
}

Complex BLProfile::eval(const SlabGeometry& geom, const SmoothCutoff& chi,
                        double x, double d, double z) const {
  Complex sum = 0.0;
  double zl = 1.0;
  for (const auto& c : coeff) {
    sum += c.eval(geom, chi, x, d) * zl;
    zl *= z;
  }
  return sum * std::exp(-sqrt_kappa * z);
}

Complex BLProfile::eval_mode(const SmoothCutoff& chi, int k, double d,
                             double z) const {
  Complex sum = 0.0;
  double zl = 1.0;
  for (const auto& c : coeff) {
    sum += c.eval_mode(chi, k, d) * zl;
    zl *= z;
  }
  return sum * std::exp(-sqrt_kappa * z);
}

CoefficientField BLProfile::at_zero() const {
  if (coeff.empty()) return CoefficientField{};
  return coeff[0];
}

double BLProfile::max_abs() const {
  double r = 0.0;
  for (const auto& c : coeff) r = std::max(r, c.max_abs());
  return r;
}

BLProfile zero_profile(double sqrt_kappa, Interface comp, ProfileKind kind) {
  BLProfile p;
  p.sqrt_kappa = sqrt_kappa;
  p.component = comp;
  p.kind = kind;
  return p;
}

namespace bl {

BLProfile dz(const BLProfile& p) {
  BLProfile out = zero_profile(p.sqrt_kappa, p.component, p.kind);
  const int deg = p.degree();
  if (deg < 0) return out;
  out.coeff.resize(deg + 1);
  for (int l = 0; l <= deg; ++l) {
    CoefficientField c = Complex(-p.sqrt_kappa, 0.0) * p.coeff[l];
    if (l + 1 <= deg) {
      c += Complex(l + 1.0, 0.0) * p.coeff[l + 1];
    }
    out.coeff[l] = std::move(c);
  }
  return out;
}

BLProfile tail_integral(const BLProfile& p) {
  BLProfile out = zero_profile(p.sqrt_kappa, p.component, p.kind);
  const int deg = p.degree();
  if (deg < 0) return out;
  const double sk = p.sqrt_kappa;
  out.coeff.resize(deg + 1);
  // q_j = sum_{l >= j} c_l l!/j! kappa^(-(l-j+1)/2)
  for (int j = 0; j <= deg; ++j) {
    CoefficientField q;
    for (int l = j; l <= deg; ++l) {
      double factor = 1.0;
      for (int r = j + 1; r <= l; ++r) factor *= r;  // l!/j!
      factor *= std::pow(sk, -static_cast<double>(l - j + 1));
      if (q.n_modes() < 0) {
        q = Complex(factor, 0.0) * p.coeff[l];
      } else {
        q += Complex(factor, 0.0) * p.coeff[l];
      }
    }
    out.coeff[j] = std::move(q);
  }
  return out;
}

BLProfile solve_layer_ode(const BLProfile& rhs, const CoefficientField& f0,
                          double kappa) {
  const double sk = std::sqrt(kappa);
  BLProfile out = zero_profile(sk, rhs.component, rhs.kind);
  const int big_k = rhs.degree();

  const int n_modes = std::max(f0.n_modes(), [&] {
    int n = -1;
    for (const auto& c : rhs.coeff) n = std::max(n, c.n_modes());
    return n;
  }());
  if (n_modes < 0) return out;

  // beta by back substitution on the upper bidiagonal M_K (1-based i):
  //   gamma_{i-1} = 2 i sk beta_{i-1} - i (i+1) beta_i
  std::vector<CoefficientField> beta(std::max(big_k + 1, 0));
  for (int i = big_k; i >= 0; --i) {
    CoefficientField g = rhs.coeff[i];
    if (g.n_modes() < 0) g = CoefficientField::zero(n_modes);
    if (i + 1 <= big_k) {
      g += Complex((i + 1.0) * (i + 2.0), 0.0) * beta[i + 1];
    }
    beta[i] = Complex(1.0 / (2.0 * sk * (i + 1.0)), 0.0) * g;
  }

  out.coeff.resize(big_k + 2 > 1 ? big_k + 2 : 1);
  out.coeff[0] = f0.n_modes() >= 0 ? f0 : CoefficientField::zero(n_modes);
  for (int i = 0; i <= big_k; ++i) {
    out.coeff[i + 1] = beta[i];
  }
  return out;
}

BLProfile helmholtz_z(const BLProfile& p) {
  BLProfile out = zero_profile(p.sqrt_kappa, p.component, p.kind);
  const int deg = p.degree();
  if (deg < 1) return out;
  const double sk = p.sqrt_kappa;
  out.coeff.resize(deg);
  for (int i = 0; i < deg; ++i) {
    CoefficientField c = Complex(2.0 * sk * (i + 1.0), 0.0) * p.coeff[i + 1];
    if (i + 2 <= deg) {
      c -= Complex((i + 1.0) * (i + 2.0), 0.0) * p.coeff[i + 2];
    }
    out.coeff[i] = std::move(c);
  }
  return out;
}

BLProfile trim(const BLProfile& p) {
  BLProfile out = p;
  while (!out.coeff.empty() && out.coeff.back().is_zero()) {
    out.coeff.pop_back();
  }
  return out;
}

}  // namespace bl

}  // namespace bwkb

