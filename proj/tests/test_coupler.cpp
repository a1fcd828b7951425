#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

#include "kerrlab/coupler.hpp"

using namespace kerrlab;

namespace {

// Linear coupled-mode equations i d(alpha)/dt = M alpha solved by eigendecomposition, then
// moved to the frame rotating at (omega1 + omega2)/2.
Eigen::Vector2cd linear_modes(const CouplerParams& p, double t) {
  Eigen::Matrix2d m;
  m << p.omega1, p.kappa, p.kappa, p.omega2;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(m);
  const Eigen::Matrix2cd v = solver.eigenvectors().cast<Complex>();
  Eigen::Vector2cd phases;
  for (int i = 0; i < 2; ++i) phases(i) = std::polar(1.0, -solver.eigenvalues()(i) * t);
  const Eigen::Vector2cd a0(p.alpha1, p.alpha2);
  const Eigen::Vector2cd at = v * phases.asDiagonal() * v.adjoint() * a0;
  return at * std::polar(1.0, 0.5 * (p.omega1 + p.omega2) * t);
}

const CouplerParams kSingle = CouplerParams::with_detuning(1.0, 0.5, 0.0, 2.0, 0.0);

}  // namespace

TEST_CASE("derived constants") {
  const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 50.0, 2.0, 2.0);
  CHECK(p.delta() == 50.0);
  CHECK(p.lambda() == doctest::Approx(std::sqrt(1.0 + 625.0)));
  CHECK(p.epsilon_total() == 8.0);
  CHECK(p.omega2 == 0.0);
}

TEST_CASE("parameter validation") {
  CouplerParams p;
  CHECK_NOTHROW(p.validate());
  p.kappa = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = CouplerParams{};
  p.chi = -0.1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = CouplerParams{};
  p.alpha1 = std::nan("");
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = CouplerParams{};
  p.chi = 0.0;
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("evolved amplitude at reference times") {
  const EvolvedAmplitude a0 = evolve_amplitude(kSingle, 0.0);
  CHECK(a0.alpha_x == 2.0);
  CHECK(a0.alpha_y == 0.0);
  const EvolvedAmplitude a1 = evolve_amplitude(kSingle, M_PI / 2.0);
  CHECK(std::abs(a1.value()) < 1e-15);
  const EvolvedAmplitude a2 = evolve_amplitude(kSingle, M_PI);
  CHECK(a2.alpha_x == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(std::abs(a2.alpha_y) < 1e-15);
  CHECK(a2.phase() == doctest::Approx(M_PI));
  CHECK(a2.modulus_sq() == a2.alpha_x * a2.alpha_x + a2.alpha_y * a2.alpha_y);
}

TEST_CASE("evolved amplitude matches the linear coupled-mode solution") {
  for (double delta : {0.0, 0.7, std::sqrt(5.0), 50.0})
    for (double a1 : {0.2, 2.0})
      for (double a2 : {0.0, 0.2, 2.0})
        for (double t = 0.0; t < 13.0; t += 0.37) {
          const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, delta, a1, a2);
          const Eigen::Vector2cd ref = linear_modes(p, t);
          CHECK(std::abs(evolve_amplitude(p, t).value() - ref(0)) < 1e-12);
          // mode 2 from the swapped parameter set
          CHECK(std::abs(evolve_amplitude(swapped_modes(p), t).value() - ref(1)) < 1e-12);
          CHECK(evolve_amplitude(p, t).modulus_sq() <= p.epsilon_total() + 1e-12);
        }
}

TEST_CASE("no linear coupling and no detuning uses the sinc limit") {
  CouplerParams p = CouplerParams::with_detuning(0.0, 0.5, 0.0, 1.5, 0.7);
  CHECK(p.lambda() == 0.0);
  for (double t : {0.0, 1.0, 7.5}) {
    const EvolvedAmplitude a = evolve_amplitude(p, t);
    CHECK(a.alpha_x == 1.5);
    CHECK(a.alpha_y == 0.0);
  }
}

TEST_CASE("envelope and phase drift") {
  const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 0.0, 2.0, 0.0);
  CHECK(envelope(p, 1, 0.0) == 1.0);
  CHECK(envelope(p, 1, 2.0 * M_PI) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(envelope(p, 1, M_PI) == doctest::Approx(std::exp(-8.0)).epsilon(1e-14));
  CHECK(phase_drift(p, 1, 0.0) == 0.0);
  CHECK(std::abs(phase_drift(p, 1, 2.0 * M_PI)) < 1e-14);
  CHECK(phase_drift(p, 2, 2.0 * M_PI) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  for (double t = 0.0; t < 10.0; t += 0.3) {
    const double f = envelope(p, 3, t);
    CHECK(f > 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("rotation factor stays on the unit circle") {
  for (double t = 0.0; t < 50.0; t += 1.3) {
    const RotationFactor z = rotation_factor(kSingle, t);
    CHECK(std::abs(std::abs(z.value()) - 1.0) < 1e-14);
    CHECK(std::abs(z.pow(7) - int_pow(z.value(), 7)) < 1e-12);
  }
  CHECK(int_pow(Complex(0.0, 0.0), 0) == Complex(1.0, 0.0));
  CHECK(std::abs(int_pow(Complex(0.0, 2.0), -2) - Complex(-0.25, 0.0)) < 1e-15);
}

TEST_CASE("Kerr dephasing equals exp[eps (z^j - 1)]") {
  const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 3.0, 2.0, 1.0);
  for (int j = -4; j <= 4; ++j)
    for (double t = 0.0; t < 9.0; t += 0.7) {
      const Complex ref = std::exp(p.epsilon_total() * (int_pow(rotation_factor(p, t).value(), j) - 1.0));
      CHECK(std::abs(kerr_dephasing(p, t, j) - ref) < 1e-13);
    }
}

TEST_CASE("moments at the exchange half period") {
  CHECK(std::abs(moment(kSingle, M_PI, 1, 1) - Complex(4.0, 0.0)) < 1e-13);
  CHECK(std::abs(moment(kSingle, M_PI, 0, 2) - Complex(-4.0, 0.0)) < 1e-13);
  CHECK(std::abs(moment(kSingle, M_PI, 0, 1) - Complex(-2.0 * std::exp(-8.0), 0.0)) < 1e-15);
  CHECK(moment(kSingle, 1.0, 0, 0) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(moment(kSingle, 1.0, -1, 0), std::domain_error);
}

TEST_CASE("without Kerr coupling moments factorize") {
  CouplerParams p = CouplerParams::with_detuning(1.0, 0.0, 2.0, 1.3, 0.4);
  for (double t = 0.0; t < 6.0; t += 0.45)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        const Complex a = evolve_amplitude(p, t).value();
        const Complex ref = std::pow(a, n) * std::pow(std::conj(a), m);
        CHECK(std::abs(moment(p, t, m, n) - ref) < 1e-12);
      }
}

TEST_CASE("moment properties on a time grid") {
  for (double delta : {0.0, 50.0})
    for (auto [a1, a2] : {std::pair{0.2, 0.2}, std::pair{2.0, 0.0}, std::pair{2.0, 2.0}}) {
      const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, delta, a1, a2);
      CouplerParams linear = p;
      linear.chi = 0.0;
      const double eps = p.epsilon_total();
      for (double t = 0.0; t <= 4.0 * M_PI; t += 0.0131) {
        const double n1 = moment(p, t, 1, 1).real();
        const double n2 = moment(swapped_modes(p), t, 1, 1).real();
        CHECK(std::abs(n1 + n2 - eps) < 1e-12);
        // Poissonian photon statistics
        CHECK(std::abs(moment(p, t, 2, 2) - Complex(n1 * n1, 0.0)) < 1e-12);
        // mean photon number does not feel the Kerr terms
        CHECK(std::abs(n1 - moment(linear, t, 1, 1).real()) < 1e-12);
      }
      for (double t = 0.0; t <= 4.0 * M_PI; t += 0.173)
        for (int m = 0; m <= 6; ++m)
          for (int n = 0; m + n <= 6; ++n)
            CHECK(std::abs(moment(p, t, m, n)) <= std::pow(eps, 0.5 * (m + n)) * (1.0 + 1e-12));
    }
}

TEST_CASE("mode swap is an involution") {
  const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 3.0, 2.0, 0.5);
  CHECK(swapped_modes(swapped_modes(p)) == p);
  CHECK(swapped_modes(p).delta() == -p.delta());
}
