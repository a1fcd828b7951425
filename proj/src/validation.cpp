#include "kerrlab/validation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrlab/fock_oracle.hpp"
#include "kerrlab/parallel.hpp"
#include "kerrlab/phase_space.hpp"
#include "kerrlab/phase_statistics.hpp"
#include "kerrlab/squeezing.hpp"

namespace kerrlab {

std::vector<ValidationSet> default_validation_sets() {
  return {{"weak", CouplerParams::with_detuning(1.0, 0.5, 0.0, 0.2, 0.2)},
          {"strong-single", CouplerParams::with_detuning(1.0, 0.5, 0.0, 2.0, 0.0)},
          {"strong-single-detuned", CouplerParams::with_detuning(1.0, 0.5, 50.0, 2.0, 0.0)},
          {"strong-both", CouplerParams::with_detuning(1.0, 0.5, 0.0, 2.0, 2.0)}};
}

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return !c.pass; }));
}

namespace {

Comparison compare(const std::string& set, double t, std::string quantity, Complex analytic, Complex oracle,
                   double tolerance) {
  Comparison c;
  c.set = set;
  c.t = t;
  c.quantity = std::move(quantity);
  c.analytic = analytic;
  c.oracle = oracle;
  c.abs_error = std::abs(analytic - oracle);
  const double scale = std::abs(analytic);
  c.rel_error = scale > 0.0 ? c.abs_error / scale : c.abs_error;
  c.tolerance = tolerance;
  c.pass = c.abs_error <= tolerance;
  return c;
}

struct OracleSqueezing {
  double S, Q, eta;
};

OracleSqueezing squeezing_from_oracle(const ReducedDensityMatrix& rho, const CouplerParams& p, double t) {
  const Complex a1 = oracle_moment(rho, p, t, 0, 1);
  const Complex a2 = oracle_moment(rho, p, t, 0, 2);
  const double n = oracle_moment(rho, p, t, 1, 1).real();
  return {2.0 * a2.real() + 2.0 * n - 4.0 * a1.real() * a1.real(),
          -2.0 * a2.real() + 2.0 * n - 4.0 * a1.imag() * a1.imag(),
          2.0 * (n - std::norm(a1) - std::abs(a2 - a1 * a1))};
}

std::vector<Comparison> compare_at(const ValidationSet& set, double t, const ValidationOptions& o,
                                   double& trunc_loss) {
  const CouplerParams& p = set.params;
  const OracleSnapshot snap = oracle_snapshot(p, t);
  trunc_loss = snap.trunc_loss;
  std::vector<Comparison> out;

  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; m + n <= 4; ++n) {
      out.push_back(compare(set.name, t, "moment(" + std::to_string(m) + "," + std::to_string(n) + ")",
                            moment(p, t, m, n), oracle_moment(snap.lab, p, t, m, n), o.moment_tolerance));
    }
  }

  const SqueezeFactors sq = squeeze_factors(p, t);
  const OracleSqueezing osq = squeezing_from_oracle(snap.lab, p, t);
  out.push_back(compare(set.name, t, "S", sq.S, osq.S, o.moment_tolerance));
  out.push_back(compare(set.name, t, "Q", sq.Q, osq.Q, o.moment_tolerance));
  out.push_back(compare(set.name, t, "eta", principal_squeezing(p, t), osq.eta, o.moment_tolerance));

  for (double y : {-1.5, 0.0, 1.5}) {
    for (double x : {-1.5, 0.0, 1.5}) {
      const Complex beta(x, y);
      out.push_back(compare(set.name, t,
                            "wigner(" + std::to_string(x) + "," + std::to_string(y) + ")",
                            quasiprob(p, t, OrderingParam::wigner(), beta),
                            oracle_wigner(snap.frame, beta, OrderingParam::wigner()), o.distribution_tolerance));
    }
  }

  const PhaseSeries phase(p, t);
  for (int j = 0; j <= 8; ++j) {
    const double theta = -M_PI + j * M_PI / 4.0;
    out.push_back(compare(set.name, t, "phase(" + std::to_string(j) + "pi/4-pi)", phase(theta),
                          oracle_phase_distribution(snap.frame, theta), o.distribution_tolerance));
  }
  return out;
}

nlohmann::json complex_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

ValidationReport run_validation(const ValidationOptions& options) {
  const std::size_t n_sets = options.sets.size();
  const auto n_times = static_cast<std::size_t>(std::max(options.n_times, 1));
  std::vector<std::vector<Comparison>> slots(n_sets * n_times);
  std::vector<double> losses(n_sets * n_times, 0.0);

  parallel_for(slots.size(), [&](std::size_t i) {
    const std::size_t set = i / n_times;
    const std::size_t k = i % n_times;
    const double t = n_times == 1 ? 0.0 : options.t_max * static_cast<double>(k) / static_cast<double>(n_times - 1);
    slots[i] = compare_at(options.sets[set], t, options, losses[i]);
  });

  ValidationReport report;
  report.trunc_loss.assign(n_sets, 0.0);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (auto& c : slots[i]) report.comparisons.push_back(std::move(c));
    report.trunc_loss[i / n_times] = std::max(report.trunc_loss[i / n_times], losses[i]);
  }
  for (double loss : report.trunc_loss) report.max_trunc_loss = std::max(report.max_trunc_loss, loss);
  report.trunc_loss_ok = report.max_trunc_loss <= options.max_trunc_loss;
  return report;
}

nlohmann::json to_json(const ValidationReport& report, const ValidationOptions& options) {
  nlohmann::json sets = nlohmann::json::array();
  for (std::size_t i = 0; i < options.sets.size(); ++i) {
    sets.push_back({{"name", options.sets[i].name},
                    {"params", to_json(options.sets[i].params)},
                    {"trunc_loss", report.trunc_loss[i]}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const Comparison& c : report.comparisons) {
    rows.push_back({{"set", c.set},
                    {"t", c.t},
                    {"quantity", c.quantity},
                    {"analytic", complex_json(c.analytic)},
                    {"oracle", complex_json(c.oracle)},
                    {"abs_error", c.abs_error},
                    {"rel_error", c.rel_error},
                    {"tolerance", c.tolerance},
                    {"pass", c.pass}});
  }
  return {{"summary",
           {{"comparisons", report.comparisons.size()},
            {"failures", report.failures()},
            {"max_trunc_loss", report.max_trunc_loss},
            {"trunc_loss_ok", report.trunc_loss_ok},
            {"passed", report.passed()}}},
          {"sets", std::move(sets)},
          {"comparisons", std::move(rows)}};
}

}  // namespace kerrlab
