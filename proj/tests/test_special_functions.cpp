#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hermite.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include <cmath>
#include <vector>

#include "kerrlab/special_functions.hpp"

using namespace kerrlab;

namespace {
double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("log_gamma at known points") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma agrees with Boost up to 200") {
  for (double x = 0.05; x <= 200.0; x += 0.37) {
    const double ref = boost::math::lgamma(x);
    CHECK(std::abs(log_gamma(x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
  for (int k = 1; k < 400; ++k) {
    const double ref = boost::math::lgamma(0.5 * k);
    CHECK(std::abs(log_gamma(0.5 * k) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("log_factorial sums logarithms") {
  double acc = 0.0;
  for (int n = 0; n <= 170; ++n) {
    if (n > 1) acc += std::log(static_cast<double>(n));
    CHECK(std::abs(log_factorial(n) - acc) <= 1e-12 * std::max(1.0, acc));
  }
  CHECK_THROWS_AS(log_factorial(-1), std::domain_error);
}

TEST_CASE("associated Laguerre small cases") {
  CHECK(associated_laguerre(0, 3, 7.2) == 1.0);
  CHECK(associated_laguerre(1, 0, 0.5) == doctest::Approx(0.5));
  // 3 - 3x + x^2/2 at x = 2
  CHECK(associated_laguerre(2, 1, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(associated_laguerre(-1, 0, 1.0), std::domain_error);
}

TEST_CASE("associated Laguerre agrees with Boost for non-negative superscripts") {
  for (int n = 0; n <= 60; ++n)
    for (unsigned a = 0; a <= 10; ++a)
      for (double x = -10.0; x <= 10.0; x += 0.7) {
        const double ref = boost::math::laguerre(static_cast<unsigned>(n), a, x);
        // |L_n^a(x)| <= C(n+a, n) e^{x/2} for x >= 0 sets the scale near the zeros
        const double bound =
            x < 0.0 ? std::abs(ref) : std::exp(log_factorial(n + a) - log_factorial(n) - log_factorial(a) + 0.5 * x);
        CHECK(std::abs(associated_laguerre(n, static_cast<int>(a), x) - ref) <= 1e-12 * std::max(1.0, bound));
      }
}

TEST_CASE("explicit sum and recurrence agree") {
  for (int n = 0; n <= 30; ++n)
    for (int a = 0; a <= 10; ++a)
      for (double x = -10.0; x <= 10.0; x += 0.5) {
        const double lhs = detail::laguerre_explicit(n, a, x);
        const double rhs = detail::laguerre_recurrence(n, static_cast<double>(a), x);
        // the explicit sum loses up to eps times the sum of its term magnitudes, L_n^a(-|x|)
        const double scale = std::max(1.0, detail::laguerre_recurrence(n, static_cast<double>(a), -std::abs(x)));
        CHECK(std::abs(lhs - rhs) <= 1e-13 * scale);
      }
}

TEST_CASE("negative superscripts satisfy the lowering identity") {
  // L_n^a = L_n^{a+1} - L_{n-1}^{a+1}, valid for every a
  for (int a = -1; a >= -10; --a)
    for (int n = 1; n <= 30; ++n)
      for (double x = -4.0; x <= 4.0; x += 0.25) {
        const double lhs = associated_laguerre(n, a, x);
        const double rhs = associated_laguerre(n, a + 1, x) - associated_laguerre(n - 1, a + 1, x);
        CHECK(rel_diff(lhs, rhs) < 1e-9);
      }
}

TEST_CASE("Laguerre generating function") {
  // sum_n k^n L_n^{nu-n}(x) = e^{-xk} (1+k)^nu
  for (int nu = 0; nu <= 6; ++nu)
    for (double k : {-0.5, -0.3, -0.1, 0.2, 0.4, 0.5})
      for (double x : {-4.0, -1.5, 0.0, 0.7, 2.5, 4.0}) {
        double sum = 0.0;
        double kn = 1.0;
        for (int n = 0; n <= 200; ++n) {
          sum += kn * associated_laguerre(n, nu - n, x);
          kn *= k;
        }
        CHECK(sum == doctest::Approx(std::exp(-x * k) * std::pow(1.0 + k, nu)).epsilon(1e-9));
      }
}

TEST_CASE("Laguerre sequence matches single evaluations") {
  std::vector<double> seq(41);
  for (double a : {0.0, 1.0, 3.5, 7.0})
    for (double x : {0.0, 0.3, 5.0, 12.0}) {
      associated_laguerre_sequence(a, x, std::span<double>(seq));
      for (int n = 0; n <= 40; ++n)
        CHECK(rel_diff(seq[n], detail::laguerre_recurrence(n, a, x)) < 1e-12);
    }
}

TEST_CASE("Hermite small cases and Boost agreement") {
  CHECK(hermite(0, 3.3) == 1.0);
  CHECK(hermite(1, 2.0) == 4.0);
  CHECK(hermite(3, 1.0) == -4.0);
  CHECK_THROWS_AS(hermite(-1, 0.0), std::domain_error);
  for (unsigned m = 0; m <= 40; ++m)
    for (double x = -6.0; x <= 6.0; x += 0.3)
      CHECK(rel_diff(hermite(static_cast<int>(m), x), boost::math::hermite(m, x)) <= 1e-12 * std::max(1.0, std::abs(boost::math::hermite(m, x))));
}

TEST_CASE("Hermite parity") {
  for (int m = 0; m <= 20; ++m)
    for (double x : {0.1, 0.9, 1.7, 3.2}) {
      const double lhs = hermite(m, -x);
      const double rhs = (m % 2 ? -1.0 : 1.0) * hermite(m, x);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("Hermite functions match scaled polynomials") {
  std::vector<double> h(41);
  for (double x = -5.0; x <= 5.0; x += 0.25) {
    hermite_function_sequence(x, std::span<double>(h));
    for (unsigned n = 0; n <= 40; ++n) {
      const double ref = boost::math::hermite(n, x) * std::exp(-0.5 * x * x) /
                         std::sqrt(std::pow(2.0, n) * boost::math::factorial<double>(n));
      CHECK(std::abs(h[n] - ref) < 1e-11);
    }
  }
}

TEST_CASE("Hermite functions are orthogonal with norm sqrt(pi)") {
  const int n_max = 60;
  const int nodes = 4001;
  const double L = 20.0;
  const double dx = 2.0 * L / (nodes - 1);
  std::vector<std::vector<double>> table(nodes, std::vector<double>(n_max + 1));
  for (int i = 0; i < nodes; ++i) hermite_function_sequence(-L + i * dx, std::span<double>(table[i]));
  for (int m = 0; m <= n_max; m += 3)
    for (int n = 0; n <= n_max; n += 4) {
      double acc = 0.0;
      for (int i = 0; i < nodes; ++i) acc += table[i][m] * table[i][n];
      acc *= dx;
      CHECK(acc == doctest::Approx(m == n ? std::sqrt(M_PI) : 0.0).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("high-order Hermite functions stay finite") {
  std::vector<double> h(401);
  hermite_function_sequence(10.0, std::span<double>(h));
  for (double v : h) {
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 2.0);
  }
}
