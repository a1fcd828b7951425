#ifndef KERRLAB_TOOLS_CLI_HPP
#define KERRLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kerrlab/coupler.hpp"
#include "kerrlab/phase_space.hpp"

namespace kerrlab::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Bad flags, config or preset. Maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string preset;
  CouplerParams params = CouplerParams::with_detuning(1.0, 0.5, 0.0, 0.2, 0.2);

  // time range for sweep / phasevar
  double tmin = 0.0;
  double tmax = 4.0 * M_PI;
  int tsteps = 1001;
  std::string observable = "squeezing";  // or "phase_variance"
  std::vector<std::string> columns = {"S", "Q", "eta"};

  // explicit times for wigner / quaddist / phasedist
  std::vector<double> times = {M_PI};
  std::optional<double> s;  // command default when unset

  GridBounds grid;
  int nx = 101;
  int ny = 101;

  double xmin = -4.0;
  double xmax = 4.0;
  int xnodes = 401;
  int theta_nodes = 721;

  std::optional<double> tolerance;  // validate: overrides both tolerances
  bool restrict_set = false;        // validate: only params, not the default sets

  std::string format = "csv";
  std::string out;

  bool operator==(const RunConfig&) const = default;
};

std::vector<std::string> preset_names();
/// Throws UsageError for unknown names.
RunConfig preset(const std::string& name);

nlohmann::json to_json(const RunConfig& config);
/// Overlays the keys present in j onto base.
RunConfig from_json(const nlohmann::json& j, RunConfig base = {});

/// Applies "key=value ..." to params. Keys: omega1, omega2, delta, chi, kappa, alpha1, alpha2.
void apply_set(CouplerParams& params, const std::string& assignments);

/// Throws UsageError if the config is unusable for the command.
void check(const RunConfig& config, const std::string& command);

int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_phasevar(const RunConfig& config, std::ostream& out);
int cmd_wigner(const RunConfig& config, std::ostream& out);
int cmd_quaddist(const RunConfig& config, std::ostream& out);
int cmd_phasedist(const RunConfig& config, std::ostream& out);
int cmd_validate(const RunConfig& config, std::ostream& out);

/// Full command line entry point. Results go to out (or --out), diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kerrlab::cli

#endif  // KERRLAB_TOOLS_CLI_HPP
