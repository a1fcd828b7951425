#ifndef KERRLAB_VALIDATION_HPP
#define KERRLAB_VALIDATION_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "kerrlab/coupler.hpp"

namespace kerrlab {

struct ValidationSet {
  std::string name;
  CouplerParams params;
};

/// kappa = 1, chi = 0.5 and alpha in {(0.2,0.2), (2,0), (2,0) at delta = 50, (2,2)}.
std::vector<ValidationSet> default_validation_sets();

struct ValidationOptions {
  std::vector<ValidationSet> sets = default_validation_sets();
  int n_times = 25;          // uniform over [0, t_max], endpoints included
  double t_max = 4.0 * M_PI;
  double moment_tolerance = 1e-7;        // moments and S, Q, eta
  double distribution_tolerance = 1e-5;  // Wigner and phase probes
  double max_trunc_loss = 1e-10;
};

struct Comparison {
  std::string set;
  double t = 0.0;
  std::string quantity;
  Complex analytic;
  Complex oracle;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<Comparison> comparisons;
  std::vector<double> trunc_loss;  // one per set, in set order
  double max_trunc_loss = 0.0;
  bool trunc_loss_ok = true;

  std::size_t failures() const;
  bool passed() const { return failures() == 0 && trunc_loss_ok; }
};

/// Compares moments (m + n <= 4), S, Q, eta, nine Wigner probes at s = 0 and nine phase
/// probes at s = -1 between the series evaluators and the Fock-space oracle.
ValidationReport run_validation(const ValidationOptions& options = {});

nlohmann::json to_json(const ValidationReport& report, const ValidationOptions& options);

}  // namespace kerrlab

#endif  // KERRLAB_VALIDATION_HPP
