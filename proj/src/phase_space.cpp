#include "kerrlab/phase_space.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "kerrlab/parallel.hpp"
#include "kerrlab/special_functions.hpp"
#include "series_detail.hpp"

namespace kerrlab {

using detail::log_fact;
using detail::ShellSum;

OrderingParam::OrderingParam(double s) : s_(s) {
  if (!(s < 1.0)) throw std::invalid_argument("ordering parameter s must be < 1, got " + std::to_string(s));
}

namespace {

// z^{n2(n2-1)/2 - n1(n1-1)/2} as a phase angle.
double kerr_phase(const RotationFactor& z, int n1, int n2) {
  const long long zp = static_cast<long long>(n2) * (n2 - 1) / 2 - static_cast<long long>(n1) * (n1 - 1) / 2;
  return -z.angle * static_cast<double>(zp);
}

ShellSum<Complex> characteristic_terms(const CouplerParams& p, double t, Complex zeta, int order) {
  const Complex abar = evolve_amplitude(p, t).value();
  const RotationFactor z = rotation_factor(p, t);
  // a^{n1}/n1! and b^{n2}/n2! with a = zeta abar*, b = -zeta* abar
  std::vector<Complex> pa(order), pb(order);
  pa[0] = pb[0] = 1.0;
  for (int n = 1; n < order; ++n) {
    pa[n] = pa[n - 1] * zeta * std::conj(abar) / static_cast<double>(n);
    pb[n] = pb[n - 1] * (-std::conj(zeta)) * abar / static_cast<double>(n);
  }
  std::vector<Complex> deph(2 * order - 1);
  for (int k = -(order - 1); k < order; ++k) deph[k + order - 1] = kerr_dephasing(p, t, k);

  Complex sum = 0.0;
  double shell = 0.0;
  for (int n1 = 0; n1 < order; ++n1) {
    for (int n2 = 0; n2 < order; ++n2) {
      const Complex term =
          pa[n1] * pb[n2] * std::polar(1.0, kerr_phase(z, n1, n2)) * deph[n2 - n1 + order - 1];
      sum += term;
      if (n1 == order - 1 || n2 == order - 1) shell += std::abs(term);
    }
  }
  return {sum, shell};
}

ShellSum<double> wigner_terms(const CouplerParams& p, double t, double c, Complex beta, int order) {
  const EvolvedAmplitude amp = evolve_amplitude(p, t);
  const double r = amp.modulus();
  const double b = std::abs(beta);
  const double x = c * b * b;
  const double log_prefactor = std::log(c / M_PI) - x;
  if (r == 0.0) return {std::exp(log_prefactor), 0.0};

  const RotationFactor z = rotation_factor(p, t);
  const double log_r = std::log(r);
  const double log_c = std::log(c);
  const double log_b = b > 0.0 ? std::log(b) : 0.0;
  const double phibar = amp.phase();
  const double arg_beta = b > 0.0 ? std::arg(beta) : 0.0;

  std::vector<double> lag(order);
  double sum = 0.0;
  double shell = 0.0;
  for (int k = 0; k < order; ++k) {
    if (k > 0 && b == 0.0) break;  // beta*^k vanishes
    const int len = order - k;
    associated_laguerre_sequence(static_cast<double>(k), x, std::span<double>(lag.data(), len));
    const Complex deph = kerr_dephasing(p, t, k);
    const double deph_mag = std::abs(deph);
    const double deph_arg = std::arg(deph);
    const double weight = k == 0 ? 1.0 : 2.0;
    for (int n1 = 0; n1 < len; ++n1) {
      const int n2 = n1 + k;
      const double log_mag = log_prefactor + (n1 + n2) * log_r + n2 * log_c + k * log_b - log_fact(n2);
      const double phase = k * (phibar - arg_beta) + kerr_phase(z, n1, n2) + deph_arg;
      const double mag = std::exp(log_mag) * deph_mag * lag[n1];
      const double sign = (n1 & 1) ? -1.0 : 1.0;
      sum += weight * sign * mag * std::cos(phase);
      if (n2 == order - 1) shell += weight * std::abs(mag);
    }
  }
  return {sum, shell};
}

ShellSum<double> quadrature_terms(const CouplerParams& p, double t, double x, int order) {
  const EvolvedAmplitude amp = evolve_amplitude(p, t);
  const double r = amp.modulus();
  std::vector<double> h(order);
  hermite_function_sequence(std::sqrt(2.0) * x, std::span<double>(h));
  const double norm = std::sqrt(2.0 / M_PI);
  if (r == 0.0) return {norm * h[0] * h[0], 0.0};

  // |abar|^{n1+n2} / (r! sqrt((n1-r)! (n2-r)!)) split as A[n1-r] A[n2-r] C[r] with
  // A[j] = |abar|^j / sqrt(j!) and C[r] = |abar|^{2r} / r!.
  const double log_r = std::log(r);
  std::vector<double> A(order), C(order);
  for (int j = 0; j < order; ++j) {
    A[j] = std::exp(j * log_r - 0.5 * log_fact(j));
    C[j] = std::exp(2.0 * j * log_r - log_fact(j));
  }
  const RotationFactor z = rotation_factor(p, t);
  const double phibar = amp.phase();

  double sum = 0.0;
  double shell = 0.0;
  for (int k = 0; k < order; ++k) {
    const Complex deph = kerr_dephasing(p, t, k);
    const double deph_mag = std::abs(deph);
    const double deph_arg = std::arg(deph);
    const double weight = k == 0 ? 1.0 : 2.0;
    for (int n1 = 0; n1 + k < order; ++n1) {
      const int n2 = n1 + k;
      double inner = 0.0;
      double inner_abs = 0.0;
      for (int q = 0; q <= n1; ++q) {
        const double v = C[q] * A[n1 - q] * A[n2 - q] * h[n1 - q] * h[n2 - q];
        inner += (q & 1) ? -v : v;
        inner_abs += std::abs(v);
      }
      const double phase = k * phibar + kerr_phase(z, n1, n2) + deph_arg;
      sum += weight * deph_mag * inner * std::cos(phase);
      if (n2 == order - 1) shell += weight * deph_mag * inner_abs;
    }
  }
  return {norm * sum, norm * shell};
}

double simpson(const std::vector<double>& f, double h) {
  // f.size() is odd
  double acc = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += (i % 2 ? 4.0 : 2.0) * f[i];
  return acc * h / 3.0;
}

}  // namespace

Complex characteristic_function(const CouplerParams& p, double t, OrderingParam s, Complex zeta,
                                const SeriesControl& control) {
  const Complex series = detail::sum_until_converged(control, "characteristic_function", [&](int order) {
    return characteristic_terms(p, t, zeta, order);
  });
  return std::exp(0.5 * (s.value() - 1.0) * std::norm(zeta)) * series;
}

double quasiprob(const CouplerParams& p, double t, OrderingParam s, Complex beta, const SeriesControl& control) {
  const double c = s.width_factor();
  return detail::sum_until_converged(control, "quasiprob",
                                     [&](int order) { return wigner_terms(p, t, c, beta, order); });
}

PhaseSpaceGrid quasiprob_grid(const CouplerParams& p, double t, OrderingParam s, const GridBounds& bounds, int nx,
                              int ny, const SeriesControl& control) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("quasiprob_grid: nx and ny must be >= 2");
  if (!(bounds.x_max > bounds.x_min) || !(bounds.y_max > bounds.y_min))
    throw std::invalid_argument("quasiprob_grid: empty bounds");
  PhaseSpaceGrid grid;
  grid.params = p;
  grid.bounds = bounds;
  grid.nx = nx;
  grid.ny = ny;
  grid.s = s.value();
  grid.t = t;
  grid.values.resize(ny, nx);
  parallel_for(static_cast<std::size_t>(ny), [&](std::size_t j) {
    const double y = grid.y(static_cast<int>(j));
    for (int i = 0; i < nx; ++i) {
      const double x = grid.x(i);
      try {
        grid.values(static_cast<Eigen::Index>(j), i) = quasiprob(p, t, s, Complex(x, y), control);
      } catch (const TruncationError& e) {
        std::ostringstream where;
        where << "quasiprob_grid at beta = (" << x << ", " << y << ")";
        throw TruncationError(where.str(), e.achieved_bound(), e.order());
      }
    }
  });
  grid.normalization = grid.values.sum() * grid.dx() * grid.dy();
  return grid;
}

void write_csv(std::ostream& out, const PhaseSpaceGrid& grid) {
  const auto old_precision = out.precision(17);
  out << "# normalization=" << grid.normalization << " s=" << grid.s << " t=" << grid.t << "\n";
  out << "x,y,value\n";
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) out << grid.x(i) << ',' << grid.y(j) << ',' << grid.values(j, i) << '\n';
  out.precision(old_precision);
}

nlohmann::json to_json(const CouplerParams& p) {
  return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"chi", p.chi},
          {"kappa", p.kappa},   {"alpha1", p.alpha1}, {"alpha2", p.alpha2}};
}

nlohmann::json to_json(const PhaseSpaceGrid& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < grid.ny; ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < grid.nx; ++i) row.push_back(grid.values(j, i));
    rows.push_back(std::move(row));
  }
  return {{"axes",
           {{"x", {{"min", grid.bounds.x_min}, {"max", grid.bounds.x_max}, {"n", grid.nx}}},
            {"y", {{"min", grid.bounds.y_min}, {"max", grid.bounds.y_max}, {"n", grid.ny}}}}},
          {"s", grid.s},
          {"t", grid.t},
          {"params", to_json(grid.params)},
          {"values", std::move(rows)},
          {"normalization", grid.normalization}};
}

double compute_D(const CouplerParams& p, double t) {
  return std::max(0.0, p.epsilon_total() - evolve_amplitude(p, t).modulus_sq());
}

bool on_cat_lattice(const CouplerParams& p, double t) {
  const double theta = p.chi * t;
  const double m = std::round(theta / M_PI - 0.5);
  if (m < 0.0) return false;
  const double target = (m + 0.5) * M_PI;
  return std::abs(theta - target) <= 1e-9 * target;
}

namespace {
void require_cat_lattice(const CouplerParams& p, double t, const char* who) {
  if (!on_cat_lattice(p, t)) {
    std::ostringstream msg;
    msg << who << ": chi*t = " << p.chi * t << " is not an odd multiple of pi/2";
    throw PreconditionError(msg.str());
  }
}
}  // namespace

double cat_quasiprob(const CouplerParams& p, double t, OrderingParam s, Complex beta) {
  require_cat_lattice(p, t, "cat_quasiprob");
  const double c = s.width_factor();
  const Complex a = evolve_amplitude(p, t).value();
  const Complex ia(0.0, 1.0);
  const double D = compute_D(p, t);
  const double left = std::exp(-c * std::norm(beta - ia * a));
  const double right = std::exp(-c * std::norm(beta + ia * a));
  const double fringe = 2.0 * std::exp(-c * std::norm(beta) - 2.0 * D + (c - 2.0) * std::norm(a)) *
                        std::sin(2.0 * c * (beta * std::conj(a)).real());
  return c / (2.0 * M_PI) * (left + right + fringe);
}

double quadrature_distribution(const CouplerParams& p, double t, double x, const SeriesControl& control) {
  return detail::sum_until_converged(control, "quadrature_distribution",
                                     [&](int order) { return quadrature_terms(p, t, x, order); });
}

double cat_quadrature_distribution(const CouplerParams& p, double t, double x) {
  require_cat_lattice(p, t, "cat_quadrature_distribution");
  const EvolvedAmplitude a = evolve_amplitude(p, t);
  const double D = compute_D(p, t);
  const double ay = a.alpha_y;
  return (std::exp(-2.0 * (x + ay) * (x + ay)) + std::exp(-2.0 * (x - ay) * (x - ay)) +
          2.0 * std::exp(-2.0 * (x * x + ay * ay + D)) * std::sin(4.0 * x * a.alpha_x)) /
         std::sqrt(2.0 * M_PI);
}

MarginalResult quadrature_from_wigner(const CouplerParams& p, double t, double x, double y_extent, int ny,
                                      const SeriesControl& control) {
  if (ny < 3) throw std::invalid_argument("quadrature_from_wigner: ny must be >= 3");
  if (!(y_extent > 0.0)) throw std::invalid_argument("quadrature_from_wigner: y_extent must be positive");
  if (ny % 2 == 0) ++ny;
  const double h = 2.0 * y_extent / (ny - 1);
  std::vector<double> f(static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j) f[j] = quasiprob(p, t, OrderingParam::wigner(), Complex(x, -y_extent + j * h), control);

  MarginalResult result;
  result.value = simpson(f, h);
  const double needed = evolve_amplitude(p, t).modulus() + 3.0;
  if (y_extent < needed) {
    result.extent_sufficient = false;
    std::ostringstream msg;
    msg << "y_extent " << y_extent << " < |abar_1| + 6 sigma = " << needed;
    result.warning = msg.str();
  }
  return result;
}

double quadrature_distribution_integral(const CouplerParams& p, double t, double x_min, double x_max,
                                        const SeriesControl& control) {
  auto f = [&](double x) { return quadrature_distribution(p, t, x, control); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, x_min, x_max, 15, 1e-13);
}

}  // namespace kerrlab
