#include "kerrlab/phase_statistics.hpp"

#include <cmath>
#include <sstream>

#include "kerrlab/parallel.hpp"
#include "kerrlab/special_functions.hpp"
#include "series_detail.hpp"

namespace kerrlab {

using detail::log_fact;

double phase_radial_weight(int n1, int k) {
  if (n1 < 0 || k < 1) throw std::domain_error("phase_radial_weight: need n1 >= 0 and k >= 1");
  const double half = 0.5 * k;
  return std::exp(log_gamma(half + 1.0) + log_gamma(n1 + half) - log_fact(n1) - log_gamma(half) - log_fact(n1 + k));
}

namespace {

struct Coefficients {
  std::vector<Complex> value;
  double shell;
};

Coefficients phase_coefficients(const CouplerParams& p, double t, double c, int order) {
  const EvolvedAmplitude amp = evolve_amplitude(p, t);
  const double r = amp.modulus();
  Coefficients out{std::vector<Complex>(static_cast<std::size_t>(order - 1), 0.0), 0.0};
  if (r == 0.0) return out;

  const double log_x = std::log(c * r * r);  // per unit of n1
  const double log_y = std::log(std::sqrt(c) * r);  // per unit of k
  const double chit = p.chi * t;
  const double eps = p.epsilon_total();
  const double phibar = amp.phase();

  for (int k = 1; k < order; ++k) {
    const double envelope_k = envelope(p, k, t);
    const double half = 0.5 * k;
    const double log_k = k * log_y + log_gamma(half + 1.0) - log_gamma(half);
    Complex ck = 0.0;
    for (int n1 = 0; n1 < order; ++n1) {
      const double mag = std::exp(log_k + n1 * log_x + log_gamma(n1 + half) - log_fact(n1) - log_fact(n1 + k));
      const double psi = k * phibar - k * (2.0 * n1 + k - 1.0) * chit - eps * std::sin(2.0 * k * chit);
      ck += ((n1 & 1) ? -mag : mag) * std::polar(1.0, psi);
      if (n1 == order - 1 || k == order - 1) out.shell += 2.0 * mag;
    }
    out.value[static_cast<std::size_t>(k - 1)] = envelope_k * ck;
  }
  return out;
}

double evaluate(const std::vector<Complex>& coeffs, double theta) {
  const Complex w = std::polar(1.0, -theta);
  Complex wk = 1.0;
  double acc = 0.0;
  for (const Complex& ck : coeffs) {
    wk *= w;
    acc += (ck * wk).real();
  }
  return (1.0 + 2.0 * acc) / (2.0 * M_PI);
}

double trapezoid_moment(const std::vector<Complex>& coeffs, int l, int n_nodes) {
  const double h = 2.0 * M_PI / (n_nodes - 1);
  double acc = 0.0;
  for (int j = 0; j < n_nodes; ++j) {
    const double theta = -M_PI + j * h;
    const double w = (j == 0 || j == n_nodes - 1) ? 0.5 : 1.0;
    acc += w * std::pow(theta, l) * evaluate(coeffs, theta);
  }
  return acc * h;
}

// Trapezoid with node doubling, checked and accelerated by one Richardson step.
double moment_from_coefficients(const std::vector<Complex>& coeffs, int l, int n_nodes) {
  if (l < 1) throw std::invalid_argument("phase_moment: l must be >= 1");
  if (n_nodes < 256) throw std::invalid_argument("phase_moment: n_nodes must be >= 256");
  constexpr int node_cap = 1 << 22;
  int n = n_nodes;
  double coarse = trapezoid_moment(coeffs, l, n);
  double previous = coarse;
  for (;;) {
    const int finer_n = 2 * n - 1;
    const double fine = trapezoid_moment(coeffs, l, finer_n);
    const double extrapolated = (4.0 * fine - coarse) / 3.0;
    if (std::abs(extrapolated - previous) < 1e-8 || finer_n > node_cap) return extrapolated;
    previous = extrapolated;
    coarse = fine;
    n = finer_n;
  }
}

}  // namespace

PhaseSeries::PhaseSeries(const CouplerParams& p, double t, OrderingParam s, const SeriesControl& control) {
  const double c = s.width_factor();
  coeffs_ = detail::sum_until_converged(control, "phase_distribution", [&](int order) {
    Coefficients out = phase_coefficients(p, t, c, order);
    return detail::ShellSum<std::vector<Complex>>{std::move(out.value), out.shell};
  });
}

double PhaseSeries::operator()(double theta) const { return evaluate(coeffs_, theta); }

double phase_distribution(const CouplerParams& p, double t, OrderingParam s, double theta,
                          const SeriesControl& control) {
  return PhaseSeries(p, t, s, control)(theta);
}

double PhaseDistribution::integral() const {
  double acc = 0.0;
  for (std::size_t j = 1; j < theta_nodes.size(); ++j)
    acc += 0.5 * (values[j] + values[j - 1]) * (theta_nodes[j] - theta_nodes[j - 1]);
  return acc;
}

PhaseDistribution tabulate_phase_distribution(const CouplerParams& p, double t, OrderingParam s, int n_nodes,
                                              const SeriesControl& control) {
  if (n_nodes < 2) throw std::invalid_argument("tabulate_phase_distribution: n_nodes must be >= 2");
  const PhaseSeries series(p, t, s, control);
  PhaseDistribution out;
  out.s = s.value();
  out.t = t;
  out.theta_nodes.resize(static_cast<std::size_t>(n_nodes));
  out.values.resize(static_cast<std::size_t>(n_nodes));
  const double h = 2.0 * M_PI / (n_nodes - 1);
  for (int j = 0; j < n_nodes; ++j) {
    out.theta_nodes[j] = j == n_nodes - 1 ? M_PI : -M_PI + j * h;
    out.values[j] = series(out.theta_nodes[j]);
  }
  return out;
}

MarginalResult phase_from_wigner(const CouplerParams& p, double t, OrderingParam s, double theta, double r_extent,
                                 int nr, const SeriesControl& control) {
  if (nr < 3) throw std::invalid_argument("phase_from_wigner: nr must be >= 3");
  if (!(r_extent > 0.0)) throw std::invalid_argument("phase_from_wigner: r_extent must be positive");
  if (nr % 2 == 0) ++nr;
  const double h = r_extent / (nr - 1);
  const Complex direction = std::polar(1.0, theta);
  double acc = 0.0;
  for (int j = 1; j < nr; ++j) {  // the j = 0 node carries the weight |beta| = 0
    const double rho = j * h;
    const double w = j == nr - 1 ? 1.0 : (j % 2 ? 4.0 : 2.0);
    acc += w * rho * quasiprob(p, t, s, rho * direction, control);
  }
  MarginalResult result;
  result.value = acc * h / 3.0;
  const double needed = std::sqrt(p.epsilon_total()) + 5.0;
  if (r_extent < needed) {
    result.extent_sufficient = false;
    std::ostringstream msg;
    msg << "r_extent " << r_extent << " < sqrt(eps) + 5 = " << needed;
    result.warning = msg.str();
  }
  return result;
}

double phase_moment(const CouplerParams& p, double t, OrderingParam s, int l, int n_nodes) {
  return moment_from_coefficients(PhaseSeries(p, t, s).coefficients(), l, n_nodes);
}

double phase_variance(const CouplerParams& p, double t, OrderingParam s, int n_nodes) {
  if (t < 0.0) throw std::invalid_argument("phase_variance: t must be >= 0");
  const PhaseSeries series(p, t, s);
  const double m1 = moment_from_coefficients(series.coefficients(), 1, n_nodes);
  const double m2 = moment_from_coefficients(series.coefficients(), 2, n_nodes);
  return m2 - m1 * m1;
}

std::vector<PhaseVarianceSample> phase_variance_sweep(const CouplerParams& p, std::span<const double> times,
                                                      OrderingParam s) {
  std::vector<PhaseVarianceSample> out(times.size());
  parallel_for(times.size(), [&](std::size_t i) { out[i] = {times[i], phase_variance(p, times[i], s)}; });
  return out;
}

}  // namespace kerrlab
