#include "kerrlab/coupler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kerrlab {

Complex int_pow(Complex a, int n) {
  if (n < 0) return 1.0 / int_pow(a, -n);
  Complex r = 1.0;
  while (n > 0) {
    if (n & 1) r *= a;
    a *= a;
    n >>= 1;
  }
  return r;
}

double CouplerParams::lambda() const {
  const double d = delta();
  return std::sqrt(kappa * kappa + 0.25 * d * d);
}

void CouplerParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(omega1) || !finite(omega2) || !finite(chi) || !finite(kappa) || !finite(alpha1) || !finite(alpha2))
    throw std::invalid_argument("coupler parameters must be finite");
  if (kappa < 0.0) throw std::invalid_argument("kappa must be non-negative, got " + std::to_string(kappa));
  if (chi < 0.0) throw std::invalid_argument("chi must be non-negative, got " + std::to_string(chi));
}

CouplerParams CouplerParams::with_detuning(double kappa, double chi, double delta, double alpha1, double alpha2) {
  CouplerParams p;
  p.omega1 = delta;
  p.omega2 = 0.0;
  p.chi = chi;
  p.kappa = kappa;
  p.alpha1 = alpha1;
  p.alpha2 = alpha2;
  return p;
}

CouplerParams swapped_modes(const CouplerParams& p) {
  CouplerParams q = p;
  std::swap(q.omega1, q.omega2);
  std::swap(q.alpha1, q.alpha2);
  return q;
}

double EvolvedAmplitude::modulus() const { return std::hypot(alpha_x, alpha_y); }

double EvolvedAmplitude::phase() const {
  if (alpha_x == 0.0 && alpha_y == 0.0) return 0.0;
  const double a = std::atan2(alpha_y, alpha_x);
  return a == -M_PI ? M_PI : a;
}

RotationFactor rotation_factor(const CouplerParams& p, double t) { return RotationFactor{2.0 * p.chi * t}; }

EvolvedAmplitude evolve_amplitude(const CouplerParams& p, double t) {
  const double lam = p.lambda();
  const double sinc = lam > 0.0 ? std::sin(lam * t) / lam : t;
  EvolvedAmplitude a;
  a.alpha_x = p.alpha1 * std::cos(lam * t);
  a.alpha_y = -(p.alpha1 * 0.5 * p.delta() + p.alpha2 * p.kappa) * sinc;
  return a;
}

double envelope(const CouplerParams& p, int n, double t) {
  const double s = std::sin(n * p.chi * t);
  return std::exp(-2.0 * p.epsilon_total() * s * s);
}

double phase_drift(const CouplerParams& p, int n, double t) {
  return n * (n - 1.0) * p.chi * t + p.epsilon_total() * std::sin(2.0 * n * p.chi * t);
}

Complex kerr_dephasing(const CouplerParams& p, double t, int j) {
  // eps (z^j - 1) = -2 eps sin^2(j chi t) - i eps sin(2 j chi t)
  const double eps = p.epsilon_total();
  const double s = std::sin(j * p.chi * t);
  return std::polar(std::exp(-2.0 * eps * s * s), -eps * std::sin(2.0 * j * p.chi * t));
}

Complex moment(const CouplerParams& p, double t, int m, int n) {
  if (m < 0 || n < 0) throw std::domain_error("moment: orders must be non-negative");
  const Complex a = evolve_amplitude(p, t).value();
  const long long zp = static_cast<long long>(n) * (n - 1) / 2 - static_cast<long long>(m) * (m - 1) / 2;
  return int_pow(a, n) * int_pow(std::conj(a), m) * rotation_factor(p, t).pow(zp) * kerr_dephasing(p, t, n - m);
}

}  // namespace kerrlab
