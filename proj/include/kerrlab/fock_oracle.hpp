#ifndef KERRLAB_FOCK_ORACLE_HPP
#define KERRLAB_FOCK_ORACLE_HPP

#include <vector>

#include <Eigen/Core>

#include "kerrlab/coupler.hpp"
#include "kerrlab/phase_space.hpp"

namespace kerrlab {

/// Two-mode state truncated at total photon number n_max, stored as one amplitude vector per
/// block of fixed N = n1 + n2. blocks[N](n1) is the amplitude of |n1, N - n1>.
struct TwoModeFockState {
  int n_max = 0;
  std::vector<Eigen::VectorXcd> blocks;
  double trunc_loss = 0.0;  // probability discarded at construction

  Complex amplitude(int n1, int n2) const;
  double norm_sq() const;
  double block_probability(int N) const;
  /// <n1 + n2>.
  double mean_total_photons() const;
};

/// Default cutoff ceil(eps + 10 sqrt(eps) + 20) for total intensity eps.
int default_cutoff(double eps);

/// |alpha1> x |alpha2> truncated at the smallest n_max >= default_cutoff for which the
/// discarded probability is below tail_tol.
TwoModeFockState coherent_product_state(double alpha1, double alpha2, double tail_tol = 1e-10);

/// Exact evolution under the coupler Hamiltonian with cross-Kerr 2 chi: each block is
/// diagonalized densely and propagated in its eigenbasis.
TwoModeFockState evolve(const TwoModeFockState& state, const CouplerParams& p, double t);

/// Hamiltonian restricted to the block N, in the basis n1 = 0..N.
Eigen::MatrixXd block_hamiltonian(const CouplerParams& p, int N);

/// Single-mode density matrix, d x d.
struct ReducedDensityMatrix {
  Eigen::MatrixXcd rho;

  int dimension() const { return static_cast<int>(rho.rows()); }
  Complex trace() const { return rho.trace(); }
  double purity() const;
  /// max |rho - rho^dag|.
  double hermiticity_error() const;
  double min_eigenvalue() const;
};

ReducedDensityMatrix reduce_mode1(const TwoModeFockState& state);
ReducedDensityMatrix reduce_mode2(const TwoModeFockState& state);

/// rho_mn exp[i t (omega1 + omega2)(m - n)/2]: the state of the slowly varying operator A_1.
/// The distribution routines below expect this frame.
ReducedDensityMatrix to_coupler_frame(const ReducedDensityMatrix& rho, const CouplerParams& p, double t);

/// tr(rho a^dag^m a^n) exp[i t (omega1 + omega2)(n - m)/2] for a lab-frame rho.
/// Throws std::domain_error if m + n > d - 1.
Complex oracle_moment(const ReducedDensityMatrix& rho, const CouplerParams& p, double t, int m, int n);

/// s-ordered quasiprobability from the Fock-basis kernel (associated Laguerre matrix elements).
double oracle_wigner(const ReducedDensityMatrix& rho, Complex beta, OrderingParam s);

/// Radially integrated Q function; only s = -1 is accepted.
double oracle_phase_distribution(const ReducedDensityMatrix& rho, double theta, OrderingParam s = -1.0);

/// <x|rho|x> with x the quadrature (a + a^dag)/2.
double oracle_quadrature_distribution(const ReducedDensityMatrix& rho, double x);

/// exp(s |zeta|^2/2) tr[rho D(zeta)].
Complex oracle_characteristic(const ReducedDensityMatrix& rho, Complex zeta, OrderingParam s);

/// Coupler-frame reduced state of mode 1 at time t, plus the construction loss.
struct OracleSnapshot {
  ReducedDensityMatrix lab;
  ReducedDensityMatrix frame;
  double trunc_loss = 0.0;
};

OracleSnapshot oracle_snapshot(const CouplerParams& p, double t, double tail_tol = 1e-10);

}  // namespace kerrlab

#endif  // KERRLAB_FOCK_ORACLE_HPP
