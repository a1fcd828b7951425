#ifndef KERRLAB_SQUEEZING_HPP
#define KERRLAB_SQUEEZING_HPP

#include <span>
#include <vector>

#include "kerrlab/coupler.hpp"

namespace kerrlab {

/// Normalized quadrature factors: S = 2 Var(X) - 1, Q = 2 Var(Y) - 1. Negative means squeezed.
struct SqueezeFactors {
  double S = 0.0;
  double Q = 0.0;
};

struct SqueezingSample {
  double t = 0.0;
  double S = 0.0;
  double Q = 0.0;
  double eta = 0.0;
};

/// S and Q from the G1, G2, G3 decomposition of the moments.
SqueezeFactors squeeze_factors(const CouplerParams& p, double t);

/// Var(V_phi) for V_phi = (A e^{-i phi} + A^dag e^{i phi}) / sqrt(2).
double quadrature_variance(const CouplerParams& p, double t, double phi);

/// Principal squeezing eta = 2[<A^dag A> - |<A>|^2 - |<A^2> - <A>^2|], valid for any detuning.
double principal_squeezing(const CouplerParams& p, double t);

/// The same quantity written through |abar_1|^2 and the Kerr envelopes only. Kept as an
/// independent route for cross-checking principal_squeezing().
double principal_squeezing_closed_form(const CouplerParams& p, double t);

SqueezingSample squeezing_sample(const CouplerParams& p, double t);

/// Evaluates squeezing_sample at each time; parallel over samples.
std::vector<SqueezingSample> squeezing_sweep(const CouplerParams& p, std::span<const double> times);

}  // namespace kerrlab

#endif  // KERRLAB_SQUEEZING_HPP
