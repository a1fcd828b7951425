#ifndef KERRLAB_PHASE_STATISTICS_HPP
#define KERRLAB_PHASE_STATISTICS_HPP

#include <span>
#include <string>
#include <vector>

#include "kerrlab/coupler.hpp"
#include "kerrlab/phase_space.hpp"
#include "kerrlab/series.hpp"

namespace kerrlab {

/// Default truncation for phase series: outermost shell below 1e-13, envelope factor ignored.
inline SeriesControl phase_series_control() {
  SeriesControl c;
  c.shell_tolerance = 1e-13;
  return c;
}

/// Fourier form of the phase distribution at fixed (t, s):
/// P(theta) = (1 + 2 sum_k Re[C_k e^{-i k theta}]) / (2 pi).
/// The coefficients are summed once; evaluation at many angles is then cheap.
class PhaseSeries {
 public:
  PhaseSeries(const CouplerParams& p, double t, OrderingParam s = OrderingParam::husimi(),
              const SeriesControl& control = phase_series_control());

  double operator()(double theta) const;
  /// C_1, C_2, ...; C_0 = 1 is implicit.
  const std::vector<Complex>& coefficients() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

/// Radial weight of the (n1, n1 + k) term after the angular integration, for k >= 1:
/// sum_m (-1)^m Gamma(m + k/2 + 1) / ((n1 - m)! (k + m)! m!), in closed form.
double phase_radial_weight(int n1, int k);

/// P(theta, t, s). Default s = -1.
double phase_distribution(const CouplerParams& p, double t, OrderingParam s, double theta,
                          const SeriesControl& control = phase_series_control());

/// P(theta) tabulated on a closed uniform grid over [-pi, pi].
struct PhaseDistribution {
  std::vector<double> theta_nodes;
  std::vector<double> values;
  double s = -1.0;
  double t = 0.0;

  /// Trapezoid integral over the nodes.
  double integral() const;
};

/// n_nodes >= 2 nodes including both endpoints.
PhaseDistribution tabulate_phase_distribution(const CouplerParams& p, double t, OrderingParam s, int n_nodes,
                                              const SeriesControl& control = phase_series_control());

/// P(theta) as the radial integral of the quasiprobability along arg beta = theta
/// (Simpson on nr points over [0, r_extent]). Flags r_extent < sqrt(eps) + 5.
MarginalResult phase_from_wigner(const CouplerParams& p, double t, OrderingParam s, double theta, double r_extent,
                                 int nr, const SeriesControl& control = {});

/// l-th moment of theta over the fixed window [-pi, pi]. Trapezoid rule starting at n_nodes
/// (>= 256) nodes, doubled until successive estimates agree within 1e-8.
double phase_moment(const CouplerParams& p, double t, OrderingParam s, int l, int n_nodes = 2048);

/// <theta^2> - <theta>^2 on the window [-pi, pi].
double phase_variance(const CouplerParams& p, double t, OrderingParam s = OrderingParam::husimi(),
                      int n_nodes = 2048);

struct PhaseVarianceSample {
  double t = 0.0;
  double variance = 0.0;
};

/// phase_variance at each time; parallel over samples.
std::vector<PhaseVarianceSample> phase_variance_sweep(const CouplerParams& p, std::span<const double> times,
                                                      OrderingParam s = OrderingParam::husimi());

}  // namespace kerrlab

#endif  // KERRLAB_PHASE_STATISTICS_HPP
