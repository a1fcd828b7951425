#ifndef KERRLAB_PHASE_SPACE_HPP
#define KERRLAB_PHASE_SPACE_HPP

#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <json.hpp>

#include "kerrlab/coupler.hpp"
#include "kerrlab/series.hpp"

namespace kerrlab {

/// Ordering parameter s of the quasiprobability family: 0 is Wigner, -1 is Husimi Q.
/// The Glauber P function (s = 1) is excluded. Converts implicitly from double and throws
/// std::invalid_argument for s >= 1 or NaN.
class OrderingParam {
 public:
  OrderingParam(double s);  // NOLINT(google-explicit-constructor)

  static OrderingParam wigner() { return OrderingParam(0.0); }
  static OrderingParam husimi() { return OrderingParam(-1.0); }

  double value() const { return s_; }
  /// Gaussian width factor c = 2 / (1 - s).
  double width_factor() const { return 2.0 / (1.0 - s_); }

 private:
  double s_;
};

/// s-ordered characteristic function C(zeta, t, s) of mode 1.
Complex characteristic_function(const CouplerParams& p, double t, OrderingParam s, Complex zeta,
                                const SeriesControl& control = {});

/// s-parameterized quasiprobability W(beta, t, s) of mode 1, summed as a double series over
/// normally ordered moments with Laguerre kernels. Terms (n1, n2) and (n2, n1) are complex
/// conjugates; the sum runs over n2 >= n1 as 2 Re{.} plus the real diagonal.
double quasiprob(const CouplerParams& p, double t, OrderingParam s, Complex beta, const SeriesControl& control = {});

struct GridBounds {
  double x_min = -5.0;
  double x_max = 5.0;
  double y_min = -5.0;
  double y_max = 5.0;

  bool operator==(const GridBounds&) const = default;
};

/// Sampled quasiprobability on a rectangle of the beta = x + i y plane.
struct PhaseSpaceGrid {
  using Values = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  CouplerParams params;
  GridBounds bounds;
  int nx = 0;
  int ny = 0;
  double s = 0.0;
  double t = 0.0;
  Values values;  // ny rows (y index outer) by nx columns
  double normalization = 0.0;  // Riemann sum of values times cell area

  double dx() const { return (bounds.x_max - bounds.x_min) / (nx - 1); }
  double dy() const { return (bounds.y_max - bounds.y_min) / (ny - 1); }
  double x(int i) const { return bounds.x_min + i * dx(); }
  double y(int j) const { return bounds.y_min + j * dy(); }
};

/// quasiprob() on an nx-by-ny grid (both >= 2). A truncation failure is rethrown with the
/// offending grid point in its message.
PhaseSpaceGrid quasiprob_grid(const CouplerParams& p, double t, OrderingParam s, const GridBounds& bounds, int nx,
                              int ny, const SeriesControl& control = {});

/// CSV rows "x,y,value" in y-outer order, preceded by a "# normalization=" comment line.
void write_csv(std::ostream& out, const PhaseSpaceGrid& grid);

/// {axes, s, t, params, values, normalization}; values is a list of rows, one per y.
nlohmann::json to_json(const PhaseSpaceGrid& grid);

nlohmann::json to_json(const CouplerParams& p);

/// D = eps - |abar_1(t)|^2, the intensity held by mode 2. Never negative.
double compute_D(const CouplerParams& p, double t);

/// True when chi t = (m + 1/2) pi for some integer m >= 0, to relative tolerance 1e-9.
bool on_cat_lattice(const CouplerParams& p, double t);

/// Closed form of the quasiprobability at chi t = (m + 1/2) pi: two Gaussians at +-i abar_1
/// plus an interference term damped by exp(-2D). Throws PreconditionError off the lattice.
double cat_quasiprob(const CouplerParams& p, double t, OrderingParam s, Complex beta);

/// Quadrature (position) distribution P(x, t) as a triple series with Hermite kernels.
double quadrature_distribution(const CouplerParams& p, double t, double x, const SeriesControl& control = {});

/// Closed form of P(x, t) on the cat lattice. Throws PreconditionError off the lattice.
double cat_quadrature_distribution(const CouplerParams& p, double t, double x);

struct MarginalResult {
  double value = 0.0;
  bool extent_sufficient = true;
  std::string warning;
};

/// P(x, t) as the y-marginal of the Wigner function (composite Simpson on ny points over
/// [-y_extent, y_extent]). Flags the result when y_extent < |abar_1| + 3, i.e. less than six
/// standard deviations beyond the outermost component.
MarginalResult quadrature_from_wigner(const CouplerParams& p, double t, double x, double y_extent, int ny,
                                      const SeriesControl& control = {});

/// Integral of quadrature_distribution over [x_min, x_max] by adaptive Gauss-Kronrod.
double quadrature_distribution_integral(const CouplerParams& p, double t, double x_min, double x_max,
                                        const SeriesControl& control = {});

}  // namespace kerrlab

#endif  // KERRLAB_PHASE_SPACE_HPP
