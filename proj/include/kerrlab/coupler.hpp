#ifndef KERRLAB_COUPLER_HPP
#define KERRLAB_COUPLER_HPP

#include <complex>

namespace kerrlab {

using Complex = std::complex<double>;

/// a^n by repeated squaring; int_pow(0, 0) == 1.
Complex int_pow(Complex a, int n);

/// Physical parameters of the codirectional Kerr coupler. The cross-Kerr constant is fixed at
/// twice the self-Kerr constant chi, which is the exactly solvable case. Time is the only
/// evolution parameter; a propagation distance maps onto it through the guided-wave velocity.
struct CouplerParams {
  double omega1 = 0.0;  // s^-1
  double omega2 = 0.0;  // s^-1
  double chi = 0.5;     // self-Kerr constant, s^-1
  double kappa = 1.0;   // linear coupling, s^-1
  double alpha1 = 0.0;  // initial coherent amplitude of mode 1 (real)
  double alpha2 = 0.0;  // initial coherent amplitude of mode 2 (real)

  /// Frequency mismatch omega1 - omega2.
  double delta() const { return omega1 - omega2; }
  /// Exchange rate sqrt(kappa^2 + delta^2/4).
  double lambda() const;
  /// Total initial intensity alpha1^2 + alpha2^2, conserved by the evolution.
  double epsilon_total() const { return alpha1 * alpha1 + alpha2 * alpha2; }

  /// Throws std::invalid_argument on negative or non-finite couplings/amplitudes.
  void validate() const;

  /// Parameters with the given detuning, with omega2 = 0 and omega1 = delta.
  static CouplerParams with_detuning(double kappa, double chi, double delta, double alpha1, double alpha2);

  bool operator==(const CouplerParams&) const = default;
};

/// Mode-2 view of the same device: amplitudes and frequencies exchanged (delta -> -delta).
/// Mode-1 formulas evaluated on these parameters describe mode 2 of the original coupler.
CouplerParams swapped_modes(const CouplerParams& p);

/// The complex amplitude abar_1(t) that the linear part of the evolution assigns to mode 1.
struct EvolvedAmplitude {
  double alpha_x = 0.0;
  double alpha_y = 0.0;

  Complex value() const { return {alpha_x, alpha_y}; }
  double modulus_sq() const { return alpha_x * alpha_x + alpha_y * alpha_y; }
  double modulus() const;
  /// Polar angle in (-pi, pi]; zero for the zero amplitude.
  double phase() const;
};

/// z = exp(-2 i chi t), the Kerr rotation factor.
struct RotationFactor {
  double angle = 0.0;  // 2 chi t

  Complex value() const { return std::polar(1.0, -angle); }
  /// z^p for integer p, formed from the exact integer multiple of the angle.
  Complex pow(long long p) const { return std::polar(1.0, -angle * static_cast<double>(p)); }
};

RotationFactor rotation_factor(const CouplerParams& p, double t);

/// abar_1(t) = alpha1 cos(lambda t) - i (alpha1 delta/2 + alpha2 kappa) sin(lambda t)/lambda.
/// sin(lambda t)/lambda -> t when kappa = delta = 0.
EvolvedAmplitude evolve_amplitude(const CouplerParams& p, double t);

/// Envelope f(n chi t) = exp[-2 eps sin^2(n chi t)].
double envelope(const CouplerParams& p, int n, double t);

/// Phase drift n(n-1) chi t + eps sin(2 n chi t). Not reduced modulo 2 pi.
double phase_drift(const CouplerParams& p, int n, double t);

/// exp[eps (z^j - 1)] for integer j of either sign.
Complex kerr_dephasing(const CouplerParams& p, double t, int j);

/// Normally ordered moment <A^dag^m A^n> of the mode-1 operator in the frame rotating at
/// (omega1 + omega2)/2, for initially coherent inputs with real amplitudes.
Complex moment(const CouplerParams& p, double t, int m, int n);

}  // namespace kerrlab

#endif  // KERRLAB_COUPLER_HPP
