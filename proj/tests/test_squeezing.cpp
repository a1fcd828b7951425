#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include "kerrlab/squeezing.hpp"

using namespace kerrlab;

namespace {

const CouplerParams kWeak = CouplerParams::with_detuning(1.0, 0.5, 0.0, 0.2, 0.2);

std::vector<CouplerParams> parameter_sets() {
  std::vector<CouplerParams> out;
  for (double delta : {0.0, std::sqrt(5.0), 50.0})
    for (auto [a1, a2] : {std::pair{0.2, 0.2}, std::pair{2.0, 0.0}, std::pair{2.0, 2.0}, std::pair{0.5, 1.5}})
      out.push_back(CouplerParams::with_detuning(1.0, 0.5, delta, a1, a2));
  return out;
}

// Steps of at most pi/(40 lambda) over [0, 4 pi].
std::vector<double> fine_grid(const CouplerParams& p) {
  const double step = std::min(0.01, M_PI / (40.0 * p.lambda()));
  std::vector<double> t;
  for (double v = 0.0; v <= 4.0 * M_PI; v += step) t.push_back(v);
  return t;
}

double max_abs_q(const CouplerParams& p, double a, double b) {
  double m = 0.0;
  for (int i = 0; i <= 20000; ++i) m = std::max(m, std::abs(squeeze_factors(p, a + (b - a) * i / 20000.0).Q));
  return m;
}

// The literal closed form for principal squeezing.
double eta_literal(const CouplerParams& p, double t) {
  const double eps = p.epsilon_total();
  const double th = p.chi * t;
  const double s2 = std::sin(th) * std::sin(th);
  const double c2 = std::cos(2.0 * th);
  const double root = std::sqrt(1.0 + std::exp(-8.0 * eps * s2 * c2) -
                                2.0 * std::exp(-4.0 * eps * s2 * c2) * std::cos(2.0 * th - 4.0 * eps * s2 * std::sin(2.0 * th)));
  return 2.0 * evolve_amplitude(p, t).modulus_sq() * (1.0 - std::exp(-4.0 * eps * s2) - std::exp(-4.0 * eps * s2) * root);
}

}  // namespace

TEST_CASE("coherent input is minimum uncertainty at t = 0") {
  for (const CouplerParams& p : parameter_sets()) {
    const SqueezingSample s = squeezing_sample(p, 0.0);
    CHECK(std::abs(s.S) < 1e-12);
    CHECK(std::abs(s.Q) < 1e-12);
    CHECK(std::abs(s.eta) < 1e-12);
  }
}

TEST_CASE("a linear coupler keeps coherent states") {
  for (CouplerParams p : parameter_sets()) {
    p.chi = 0.0;
    for (double t = 0.0; t < 10.0; t += 0.77) {
      const SqueezeFactors sq = squeeze_factors(p, t);
      CHECK(std::abs(sq.S) < 1e-12);
      CHECK(std::abs(sq.Q) < 1e-12);
    }
  }
}

TEST_CASE("weak field reference values") {
  const SqueezeFactors at_full = squeeze_factors(kWeak, 2.0 * M_PI);
  CHECK(std::abs(at_full.S) < 1e-12);
  CHECK(std::abs(at_full.Q) < 1e-12);
  CHECK(std::abs(principal_squeezing(kWeak, 2.0 * M_PI)) < 1e-12);

  const double expected = -0.16 * std::exp(-0.32);
  CHECK(squeeze_factors(kWeak, M_PI).S == doctest::Approx(expected).epsilon(1e-12));
  CHECK(principal_squeezing(kWeak, M_PI) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(quadrature_variance(kWeak, M_PI, 0.0) == doctest::Approx((expected + 1.0) / 2.0).epsilon(1e-12));
  CHECK(quadrature_variance(kWeak, M_PI, 0.0) == doctest::Approx(0.44191).epsilon(1e-5));
}

TEST_CASE("quadrature variance ties to S and Q") {
  for (const CouplerParams& p : parameter_sets())
    for (double t = 0.0; t < 12.0; t += 0.83) {
      const SqueezeFactors sq = squeeze_factors(p, t);
      CHECK(2.0 * quadrature_variance(p, t, 0.0) - 1.0 == doctest::Approx(sq.S).epsilon(1e-10).scale(1.0));
      CHECK(2.0 * quadrature_variance(p, t, M_PI / 2.0) - 1.0 == doctest::Approx(sq.Q).epsilon(1e-10).scale(1.0));
      CHECK(quadrature_variance(p, 0.0, 0.3 * t) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("principal squeezing is the minimum over the homodyne phase") {
  for (const CouplerParams& p : parameter_sets())
    for (double t = 0.1; t < 12.0; t += 1.37) {
      auto f = [&](double phi) { return 2.0 * quadrature_variance(p, t, phi) - 1.0; };
      double best_phi = 0.0;
      double best = f(0.0);
      for (int i = 1; i < 720; ++i) {
        const double phi = M_PI * i / 720.0;
        if (f(phi) < best) {
          best = f(phi);
          best_phi = phi;
        }
      }
      const auto [phi, value] =
          boost::math::tools::brent_find_minima(f, best_phi - M_PI / 720.0, best_phi + M_PI / 720.0, 52);
      CHECK(value == doctest::Approx(principal_squeezing(p, t)).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("variance bounds and uncertainty relation") {
  for (const CouplerParams& p : parameter_sets()) {
    const auto samples = squeezing_sweep(p, fine_grid(p));
    for (const SqueezingSample& s : samples) {
      CHECK(s.S >= -1.0);
      CHECK(s.Q >= -1.0);
      CHECK(s.eta >= -1.0);
      CHECK((s.S + 1.0) * (s.Q + 1.0) >= 1.0 - 1e-10);
      CHECK(s.eta <= std::min(s.S, s.Q) + 1e-10);
    }
  }
}

TEST_CASE("weak field principal squeezing is never positive") {
  for (double delta : {0.0, 50.0}) {
    const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, delta, 0.2, 0.2);
    for (const SqueezingSample& s : squeezing_sweep(p, fine_grid(p))) CHECK(s.eta <= 1e-12);
  }
}

TEST_CASE("strong fields can give positive principal squeezing") {
  // eta <= 0 is not a general property; see the notes in the README
  const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 0.0, 2.0, 0.0);
  double worst = -1.0;
  for (const SqueezingSample& s : squeezing_sweep(p, fine_grid(p))) worst = std::max(worst, s.eta);
  CHECK(worst > 1.0);
}

TEST_CASE("sum rule for equal amplitudes on resonance") {
  for (double alpha : {0.2, 0.7, 2.0}) {
    const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 0.0, alpha, alpha);
    for (int i = 0; i < 1000; ++i) {
      const double t = 4.0 * M_PI * i / 999.0;
      const SqueezeFactors sq = squeeze_factors(p, t);
      const double f = envelope(p, 1, t);
      CHECK(std::abs(sq.S + sq.Q - 4.0 * alpha * alpha * (1.0 - f * f)) < 1e-11 * std::max(1.0, alpha * alpha));
      // squeezing never shows in both quadratures at once
      if (std::min(sq.S, sq.Q) < 0.0) CHECK(sq.S + sq.Q >= -1e-12);
    }
  }
}

TEST_CASE("special times for equal amplitudes on resonance") {
  for (double alpha : {0.2, 0.7, 2.0}) {
    const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 0.0, alpha, alpha);
    for (int m = 1; m <= 4; ++m) {
      const SqueezeFactors at_pi = squeeze_factors(p, m * M_PI / p.chi);
      CHECK(std::abs(at_pi.S) < 1e-10);
      CHECK(std::abs(at_pi.Q) < 1e-10);

      // chi t = m pi / 2 reduction
      const double t = m * M_PI / (2.0 * p.chi);
      const double f = envelope(p, 1, t);
      const double sign = m % 2 ? -1.0 : 1.0;
      const double c2 = std::cos(t * p.lambda()) * std::cos(t * p.lambda());
      const double s2 = std::sin(t * p.lambda()) * std::sin(t * p.lambda());
      const double S = 2.0 * alpha * alpha * ((1.0 - sign) - 2.0 * (f * f - sign) * c2);
      const double Q = 2.0 * alpha * alpha * ((1.0 - sign) - 2.0 * (f * f - sign) * s2);
      const SqueezeFactors sq = squeeze_factors(p, t);
      CHECK(std::abs(sq.S - S) < 1e-10);
      CHECK(std::abs(sq.Q - Q) < 1e-10);
    }
  }
}

TEST_CASE("closed form principal squeezing agrees with the moment route") {
  for (const CouplerParams& p : parameter_sets())
    for (double t = 0.0; t <= 4.0 * M_PI; t += 0.0173) {
      const double eta = principal_squeezing(p, t);
      CHECK(std::abs(principal_squeezing_closed_form(p, t) - eta) < 1e-9);
      if (p.delta() == 0.0) CHECK(std::abs(eta_literal(p, t) - eta) < 1e-9);
    }
}

TEST_CASE("odd quarter periods give the reduced principal squeezing") {
  for (const CouplerParams& p : parameter_sets())
    for (int m : {1, 3, 5}) {
      const double t = m * M_PI / (2.0 * p.chi);
      const double ref = -4.0 * evolve_amplitude(p, t).modulus_sq() * std::exp(-4.0 * p.epsilon_total());
      CHECK(std::abs(principal_squeezing(p, t) - ref) < 1e-12);
    }
}

TEST_CASE("detuned weak field Q collapses at chi t = pi") {
  // Q is largest around chi t = pi/2 and vanishes at chi t = pi.
  for (auto [a1, a2] : {std::pair{0.2, 0.2}, std::pair{2.0, 0.0}}) {
    const CouplerParams p = CouplerParams::with_detuning(1.0, 0.5, 50.0, a1, a2);
    const double around_half = max_abs_q(p, 0.45 * 2.0 * M_PI, 0.55 * 2.0 * M_PI);
    const double around_full = max_abs_q(p, 0.99 * 2.0 * M_PI, 1.01 * 2.0 * M_PI);
    CHECK(around_half > 10.0 * around_full);
    CHECK(std::abs(squeeze_factors(p, 2.0 * M_PI).Q) < 1e-10);
  }
}

TEST_CASE("sweep preserves order") {
  const std::vector<double> times = {3.0, 0.0, 1.0, 2.5};
  const auto out = squeezing_sweep(kWeak, times);
  REQUIRE(out.size() == times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(out[i].t == times[i]);
    CHECK(out[i].S == squeeze_factors(kWeak, times[i]).S);
  }
}
