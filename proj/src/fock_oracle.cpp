#include "kerrlab/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "kerrlab/parallel.hpp"
#include "kerrlab/special_functions.hpp"
#include "series_detail.hpp"

namespace kerrlab {

using detail::log_fact;

Complex TwoModeFockState::amplitude(int n1, int n2) const {
  const int N = n1 + n2;
  if (n1 < 0 || n2 < 0 || N > n_max) return 0.0;
  return blocks[N](n1);
}

double TwoModeFockState::norm_sq() const {
  double acc = 0.0;
  for (const auto& b : blocks) acc += b.squaredNorm();
  return acc;
}

double TwoModeFockState::block_probability(int N) const {
  if (N < 0 || N > n_max) return 0.0;
  return blocks[N].squaredNorm();
}

double TwoModeFockState::mean_total_photons() const {
  double acc = 0.0;
  for (int N = 0; N <= n_max; ++N) acc += N * blocks[N].squaredNorm();
  return acc;
}

int default_cutoff(double eps) { return static_cast<int>(std::ceil(eps + 10.0 * std::sqrt(eps) + 20.0)); }

namespace {

// ln of the Poisson(eps) mass at N; eps > 0.
double log_poisson(double eps, int N) { return -eps + N * std::log(eps) - log_fact(N); }

double poisson_tail(double eps, int n_max) {
  if (eps == 0.0) return 0.0;
  double tail = 0.0;
  for (int N = n_max + 1;; ++N) {
    const double term = std::exp(log_poisson(eps, N));
    tail += term;
    if (N > eps && term < 1e-30 * std::max(tail, 1e-300)) break;
    if (term == 0.0 && N > eps) break;
  }
  return tail;
}

// alpha^n / sqrt(n!) for real alpha, sign kept separately to stay in log space.
double coherent_weight(double alpha, int n) {
  if (n == 0) return 1.0;
  if (alpha == 0.0) return 0.0;
  const double mag = std::exp(n * std::log(std::abs(alpha)) - 0.5 * log_fact(n));
  return (alpha < 0.0 && (n & 1)) ? -mag : mag;
}

}  // namespace

TwoModeFockState coherent_product_state(double alpha1, double alpha2, double tail_tol) {
  if (!(tail_tol > 0.0)) throw std::invalid_argument("coherent_product_state: tail_tol must be positive");
  const double eps = alpha1 * alpha1 + alpha2 * alpha2;
  int n_max = default_cutoff(eps);
  double loss = poisson_tail(eps, n_max);
  while (loss >= tail_tol) loss = poisson_tail(eps, ++n_max);

  TwoModeFockState state;
  state.n_max = n_max;
  state.trunc_loss = loss;
  state.blocks.resize(static_cast<std::size_t>(n_max + 1));
  const double vacuum = std::exp(-0.5 * eps);
  for (int N = 0; N <= n_max; ++N) {
    Eigen::VectorXcd b(N + 1);
    for (int n1 = 0; n1 <= N; ++n1) b(n1) = vacuum * coherent_weight(alpha1, n1) * coherent_weight(alpha2, N - n1);
    state.blocks[N] = std::move(b);
  }
  return state;
}

Eigen::MatrixXd block_hamiltonian(const CouplerParams& p, int N) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(N + 1, N + 1);
  const double kerr = p.chi * N * (N - 1.0);
  for (int n1 = 0; n1 <= N; ++n1) {
    h(n1, n1) = p.omega1 * n1 + p.omega2 * (N - n1) + kerr;
    if (n1 < N) {
      // <n1+1, N-n1-1| a1^dag a2 |n1, N-n1>
      const double hop = p.kappa * std::sqrt((n1 + 1.0) * (N - n1));
      h(n1 + 1, n1) = hop;
      h(n1, n1 + 1) = hop;
    }
  }
  return h;
}

TwoModeFockState evolve(const TwoModeFockState& state, const CouplerParams& p, double t) {
  if (t < 0.0) throw std::invalid_argument("evolve: t must be >= 0");
  TwoModeFockState out = state;
  parallel_for(state.blocks.size(), [&](std::size_t N) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block_hamiltonian(p, static_cast<int>(N)));
    const Eigen::MatrixXd& v = solver.eigenvectors();
    const Eigen::VectorXcd phases =
        (solver.eigenvalues().cast<Complex>() * Complex(0.0, -t)).array().exp().matrix();
    const Eigen::VectorXcd coeffs = v.transpose().cast<Complex>() * state.blocks[N];
    out.blocks[N] = v.cast<Complex>() * phases.cwiseProduct(coeffs);
  });
  return out;
}

double ReducedDensityMatrix::purity() const { return (rho * rho).trace().real(); }

double ReducedDensityMatrix::hermiticity_error() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double ReducedDensityMatrix::min_eigenvalue() const {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

namespace {

ReducedDensityMatrix reduce(const TwoModeFockState& state, bool keep_first) {
  const int d = state.n_max + 1;
  ReducedDensityMatrix out{Eigen::MatrixXcd::Zero(d, d)};
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n <= m; ++n) {
      Complex acc = 0.0;
      for (int k = 0; k + m <= state.n_max; ++k) {
        acc += keep_first ? state.amplitude(m, k) * std::conj(state.amplitude(n, k))
                          : state.amplitude(k, m) * std::conj(state.amplitude(k, n));
      }
      out.rho(m, n) = acc;
      out.rho(n, m) = std::conj(acc);
    }
  }
  return out;
}

}  // namespace

ReducedDensityMatrix reduce_mode1(const TwoModeFockState& state) { return reduce(state, true); }

ReducedDensityMatrix reduce_mode2(const TwoModeFockState& state) { return reduce(state, false); }

ReducedDensityMatrix to_coupler_frame(const ReducedDensityMatrix& rho, const CouplerParams& p, double t) {
  const double w = 0.5 * (p.omega1 + p.omega2) * t;
  ReducedDensityMatrix out = rho;
  for (int m = 0; m < rho.dimension(); ++m)
    for (int n = 0; n < rho.dimension(); ++n) out.rho(m, n) *= std::polar(1.0, w * (m - n));
  return out;
}

Complex oracle_moment(const ReducedDensityMatrix& rho, const CouplerParams& p, double t, int m, int n) {
  const int d = rho.dimension();
  if (m < 0 || n < 0 || m + n > d - 1)
    throw std::domain_error("oracle_moment: m + n = " + std::to_string(m + n) + " exceeds cutoff " +
                            std::to_string(d - 1));
  Complex acc = 0.0;
  for (int q = 0; q + std::max(m, n) < d; ++q) {
    const double ladder = std::exp(0.5 * (log_fact(q + n) + log_fact(q + m)) - log_fact(q));
    acc += rho.rho(q + n, q + m) * ladder;
  }
  return acc * std::polar(1.0, 0.5 * (p.omega1 + p.omega2) * t * (n - m));
}

double oracle_wigner(const ReducedDensityMatrix& rho, Complex beta, OrderingParam s) {
  const int d = rho.dimension();
  const double c = s.width_factor();
  const double b2 = std::norm(beta);
  const double pref = c / M_PI * std::exp(-c * b2);
  const bool husimi = s.value() == -1.0;
  const double q = husimi ? 0.0 : (s.value() + 1.0) / (s.value() - 1.0);
  const double y = husimi ? 0.0 : -c * c * b2 / q;

  std::vector<double> lag(static_cast<std::size_t>(d));
  Complex acc = 0.0;
  for (int k = 0; k < d; ++k) {
    const int len = d - k;
    if (!husimi) associated_laguerre_sequence(static_cast<double>(k), y, std::span<double>(lag.data(), len));
    const Complex shift = int_pow(c * beta, k);
    for (int n = 0; n < len; ++n) {
      const int m = n + k;
      // <m|T|n> for m >= n
      double radial;
      if (husimi) {
        radial = std::exp(n * std::log(std::max(b2, 1e-300)) - log_fact(n));
        if (n == 0) radial = 1.0;
        radial *= std::exp(0.5 * (log_fact(n) - log_fact(m)));
      } else {
        radial = std::exp(0.5 * (log_fact(n) - log_fact(m))) * std::pow(q, n) * lag[n];
      }
      const Complex t_mn = pref * radial * shift;
      // W = sum rho_mn <n|T|m>, with <n|T|m> = conj(<m|T|n>)
      acc += rho.rho(m, n) * std::conj(t_mn);
      if (k > 0) acc += rho.rho(n, m) * t_mn;
    }
  }
  return acc.real();
}

double oracle_phase_distribution(const ReducedDensityMatrix& rho, double theta, OrderingParam s) {
  if (s.value() != -1.0) throw std::invalid_argument("oracle_phase_distribution: only s = -1 is supported");
  const int d = rho.dimension();
  Complex acc = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const double w = std::exp(log_gamma(0.5 * (n + m) + 1.0) - 0.5 * (log_fact(n) + log_fact(m)));
      acc += rho.rho(m, n) * std::polar(w, (n - m) * theta);
    }
  }
  return acc.real() / (2.0 * M_PI);
}

double oracle_quadrature_distribution(const ReducedDensityMatrix& rho, double x) {
  const int d = rho.dimension();
  Eigen::VectorXd psi(d);
  hermite_function_sequence(std::sqrt(2.0) * x, std::span<double>(psi.data(), static_cast<std::size_t>(d)));
  psi *= std::pow(2.0 / M_PI, 0.25);  // position wavefunctions for x = (a + a^dag)/2
  return (psi.transpose().cast<Complex>() * rho.rho * psi.cast<Complex>()).value().real();
}

Complex oracle_characteristic(const ReducedDensityMatrix& rho, Complex zeta, OrderingParam s) {
  const int d = rho.dimension();
  const double z2 = std::norm(zeta);
  std::vector<double> lag(static_cast<std::size_t>(d));
  Complex acc = 0.0;
  for (int k = 0; k < d; ++k) {
    const int len = d - k;
    associated_laguerre_sequence(static_cast<double>(k), z2, std::span<double>(lag.data(), len));
    const Complex up = int_pow(zeta, k);
    const Complex down = int_pow(-std::conj(zeta), k);
    for (int n = 0; n < len; ++n) {
      const int m = n + k;
      const double radial = std::exp(0.5 * (log_fact(n) - log_fact(m))) * lag[n];
      // tr(rho D) = sum rho_nm <m|D|n>
      acc += rho.rho(n, m) * (radial * up);
      if (k > 0) acc += rho.rho(m, n) * (radial * down);
    }
  }
  return std::exp(0.5 * (s.value() - 1.0) * z2) * acc;
}

OracleSnapshot oracle_snapshot(const CouplerParams& p, double t, double tail_tol) {
  const TwoModeFockState state = evolve(coherent_product_state(p.alpha1, p.alpha2, tail_tol), p, t);
  OracleSnapshot out;
  out.lab = reduce_mode1(state);
  out.frame = to_coupler_frame(out.lab, p, t);
  out.trunc_loss = state.trunc_loss;
  return out;
}

}  // namespace kerrlab
