#include "kerrlab/squeezing.hpp"

#include <cmath>

#include "kerrlab/parallel.hpp"

namespace kerrlab {

SqueezeFactors squeeze_factors(const CouplerParams& p, double t) {
  const EvolvedAmplitude a = evolve_amplitude(p, t);
  const double ax = a.alpha_x;
  const double ay = a.alpha_y;
  const double drift1 = phase_drift(p, 1, t);
  const double drift2 = phase_drift(p, 2, t);
  const double f1 = envelope(p, 1, t);
  const double f2 = envelope(p, 2, t);

  const double g1 = 2.0 * ((ax * ax - ay * ay) * std::cos(drift2) + 2.0 * ax * ay * std::sin(drift2)) * f2;
  const double in_phase = ax * std::cos(drift1) + ay * std::sin(drift1);
  const double out_phase = ax * std::sin(drift1) - ay * std::cos(drift1);
  const double g2 = 4.0 * in_phase * in_phase * f1 * f1;
  const double g3 = 4.0 * out_phase * out_phase * f1 * f1;

  const double n = 2.0 * a.modulus_sq();
  return {n + g1 - g2, n - g1 - g3};
}

double quadrature_variance(const CouplerParams& p, double t, double phi) {
  const Complex a1 = moment(p, t, 0, 1);
  const Complex a2 = moment(p, t, 0, 2);
  const double n = moment(p, t, 1, 1).real();
  const Complex rot = std::polar(1.0, -phi);
  // <V^2> = (e^{-2i phi}<A^2> + c.c. + 2<A^dag A> + 1)/2, <V> = sqrt(2) Re(e^{-i phi}<A>)
  const double second = (2.0 * (rot * rot * a2).real() + 2.0 * n + 1.0) / 2.0;
  const double mean = std::sqrt(2.0) * (rot * a1).real();
  return second - mean * mean;
}

double principal_squeezing(const CouplerParams& p, double t) {
  const Complex a1 = moment(p, t, 0, 1);
  const Complex a2 = moment(p, t, 0, 2);
  const double n = moment(p, t, 1, 1).real();
  return 2.0 * (n - std::norm(a1) - std::abs(a2 - a1 * a1));
}

double principal_squeezing_closed_form(const CouplerParams& p, double t) {
  const double eps = p.epsilon_total();
  const double theta = p.chi * t;
  const double s2 = std::sin(theta) * std::sin(theta);
  const double f1sq = std::exp(-4.0 * eps * s2);
  const double c2 = std::cos(2.0 * theta);
  const double psi = 2.0 * theta - 4.0 * eps * s2 * std::sin(2.0 * theta);
  // f1^2 sqrt(1 + g^2 - 2 g cos psi) with g = exp(-4 eps sin^2 cos 2theta), folded so that
  // no factor overflows for large eps.
  const double g_f1sq = std::exp(-4.0 * eps * s2 * (1.0 + c2));
  const double spread = std::sqrt(std::max(0.0, f1sq * f1sq + g_f1sq * g_f1sq - 2.0 * f1sq * g_f1sq * std::cos(psi)));
  return 2.0 * evolve_amplitude(p, t).modulus_sq() * (1.0 - f1sq - spread);
}

SqueezingSample squeezing_sample(const CouplerParams& p, double t) {
  const SqueezeFactors sq = squeeze_factors(p, t);
  return {t, sq.S, sq.Q, principal_squeezing(p, t)};
}

std::vector<SqueezingSample> squeezing_sweep(const CouplerParams& p, std::span<const double> times) {
  std::vector<SqueezingSample> out(times.size());
  parallel_for(times.size(), [&](std::size_t i) { out[i] = squeezing_sample(p, times[i]); });
  return out;
}

}  // namespace kerrlab
