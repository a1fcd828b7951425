#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "kerrlab/parallel.hpp"
#include "kerrlab/phase_statistics.hpp"
#include "kerrlab/squeezing.hpp"
#include "kerrlab/validation.hpp"

namespace kerrlab::cli {

namespace {

constexpr double kFig4Short = 3.139997;
constexpr double kFig4Long = 6.36005;

RunConfig base_preset(const std::string& name, double delta, double a1, double a2) {
  RunConfig c;
  c.preset = name;
  c.params = CouplerParams::with_detuning(1.0, 0.5, delta, a1, a2);
  return c;
}

RunConfig squeezing_preset(const std::string& name, double delta, double a1, double a2,
                           std::vector<std::string> columns) {
  RunConfig c = base_preset(name, delta, a1, a2);
  c.columns = std::move(columns);
  if (delta != 0.0) c.tsteps = 4001;  // resolves the fast exchange oscillation
  return c;
}

RunConfig wigner_preset(const std::string& name, double delta, double a1, double a2, double t) {
  RunConfig c = base_preset(name, delta, a1, a2);
  c.times = {t};
  c.s = 0.0;
  return c;
}

RunConfig quaddist_preset(const std::string& name, double delta, double a1, double a2, double t) {
  RunConfig c = base_preset(name, delta, a1, a2);
  c.times = {t};
  c.xmin = -5.0;
  c.xmax = 5.0;
  c.xnodes = 501;
  return c;
}

const std::map<std::string, RunConfig>& presets() {
  static const std::map<std::string, RunConfig> table = [] {
    std::map<std::string, RunConfig> m;
    auto add = [&](RunConfig c) { m.emplace(c.preset, std::move(c)); };
    add(squeezing_preset("fig1a", 0.0, 0.2, 0.2, {"S", "Q", "eta"}));
    add(squeezing_preset("fig1b", 50.0, 0.2, 0.2, {"Q"}));
    add(squeezing_preset("fig2a", 0.0, 2.0, 0.0, {"S", "Q", "eta"}));
    add(squeezing_preset("fig2b", 50.0, 2.0, 0.0, {"Q"}));
    add(squeezing_preset("fig2c", 50.0, 2.0, 0.0, {"eta"}));
    add(wigner_preset("fig3a", 0.0, 2.0, 0.0, M_PI));
    add(wigner_preset("fig3b", 0.0, 2.0, 2.0, M_PI));
    add(wigner_preset("fig4a", 0.0, 0.2, 0.2, kFig4Short));
    add(wigner_preset("fig4b", 0.0, 2.0, 0.0, kFig4Long));
    add(wigner_preset("fig4c", 50.0, 2.0, 0.0, kFig4Long));
    add(quaddist_preset("fig5a-solid", 0.0, 2.0, 0.0, M_PI));
    add(quaddist_preset("fig5a-short", 0.0, 2.0, 2.0, M_PI));
    add(quaddist_preset("fig5a-long", std::sqrt(5.0), 2.0, 0.0, M_PI));
    add(quaddist_preset("fig5b-solid", 0.0, 0.2, 0.2, kFig4Short));
    add(quaddist_preset("fig5b-short", 0.0, 2.0, 0.0, kFig4Long));
    add(quaddist_preset("fig5b-long", 50.0, 2.0, 0.0, kFig4Long));
    RunConfig fig6 = base_preset("fig6", 0.0, 2.0, 2.0);
    fig6.times = {0.0, M_PI / 4.0, 2.94, M_PI};
    fig6.s = -1.0;
    add(fig6);
    for (auto [name, delta] : {std::pair{"fig7a", 0.0}, std::pair{"fig7b", 50.0}}) {
      RunConfig c = base_preset(name, delta, 2.0, 2.0);
      c.observable = "phase_variance";
      c.columns = {"phase_variance"};
      c.s = -1.0;
      add(c);
    }
    return m;
  }();
  return table;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double to_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad number '" + text + "' in " + what);
  }
}

int to_int(const std::string& text, const std::string& what) {
  const double v = to_double(text, what);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw UsageError("expected an integer in " + what + ", got " + text);
  return static_cast<int>(v);
}

std::vector<double> time_grid(const RunConfig& c) {
  if (c.tmin == c.tmax) return {c.tmin};
  std::vector<double> t(static_cast<std::size_t>(c.tsteps));
  for (int i = 0; i < c.tsteps; ++i) t[i] = c.tmin + (c.tmax - c.tmin) * i / (c.tsteps - 1);
  t.back() = c.tmax;
  return t;
}

double s_or(const RunConfig& c, double fallback) { return c.s.value_or(fallback); }

struct PrecisionGuard {
  std::ostream& out;
  std::streamsize old;
  explicit PrecisionGuard(std::ostream& o) : out(o), old(o.precision(17)) {}
  ~PrecisionGuard() { out.precision(old); }
};

nlohmann::json header_json(const RunConfig& c) {
  return {{"preset", c.preset}, {"params", to_json(c.params)}};
}

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, config] : presets()) names.push_back(name);
  return names;
}

RunConfig preset(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown preset '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

nlohmann::json to_json(const RunConfig& c) {
  return {{"preset", c.preset},
          {"params", kerrlab::to_json(c.params)},
          {"tmin", c.tmin},
          {"tmax", c.tmax},
          {"tsteps", c.tsteps},
          {"observable", c.observable},
          {"columns", c.columns},
          {"times", c.times},
          {"s", c.s ? nlohmann::json(*c.s) : nlohmann::json(nullptr)},
          {"grid",
           {{"x_min", c.grid.x_min},
            {"x_max", c.grid.x_max},
            {"y_min", c.grid.y_min},
            {"y_max", c.grid.y_max},
            {"nx", c.nx},
            {"ny", c.ny}}},
          {"xmin", c.xmin},
          {"xmax", c.xmax},
          {"xnodes", c.xnodes},
          {"theta_nodes", c.theta_nodes},
          {"tolerance", c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json(nullptr)},
          {"restrict_set", c.restrict_set},
          {"format", c.format},
          {"out", c.out}};
}

RunConfig from_json(const nlohmann::json& j, RunConfig c) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    auto get = [&](const nlohmann::json& obj, const char* key, auto& field) {
      if (obj.contains(key)) obj.at(key).get_to(field);
    };
    get(j, "preset", c.preset);
    if (j.contains("params")) {
      const auto& p = j.at("params");
      get(p, "omega1", c.params.omega1);
      get(p, "omega2", c.params.omega2);
      get(p, "chi", c.params.chi);
      get(p, "kappa", c.params.kappa);
      get(p, "alpha1", c.params.alpha1);
      get(p, "alpha2", c.params.alpha2);
    }
    get(j, "tmin", c.tmin);
    get(j, "tmax", c.tmax);
    get(j, "tsteps", c.tsteps);
    get(j, "observable", c.observable);
    get(j, "columns", c.columns);
    get(j, "times", c.times);
    if (j.contains("s")) c.s = j.at("s").is_null() ? std::nullopt : std::optional<double>(j.at("s").get<double>());
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      get(g, "x_min", c.grid.x_min);
      get(g, "x_max", c.grid.x_max);
      get(g, "y_min", c.grid.y_min);
      get(g, "y_max", c.grid.y_max);
      get(g, "nx", c.nx);
      get(g, "ny", c.ny);
    }
    get(j, "xmin", c.xmin);
    get(j, "xmax", c.xmax);
    get(j, "xnodes", c.xnodes);
    get(j, "theta_nodes", c.theta_nodes);
    if (j.contains("tolerance"))
      c.tolerance = j.at("tolerance").is_null() ? std::nullopt : std::optional<double>(j.at("tolerance").get<double>());
    get(j, "restrict_set", c.restrict_set);
    get(j, "format", c.format);
    get(j, "out", c.out);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config: ") + e.what());
  }
  return c;
}

void apply_set(CouplerParams& p, const std::string& assignments) {
  for (const std::string& item : split(assignments, ' ')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const double v = to_double(item.substr(eq + 1), "--set " + key);
    if (key == "omega1") p.omega1 = v;
    else if (key == "omega2") p.omega2 = v;
    else if (key == "delta") {
      p.omega1 = v;
      p.omega2 = 0.0;
    } else if (key == "chi") p.chi = v;
    else if (key == "kappa") p.kappa = v;
    else if (key == "alpha1") p.alpha1 = v;
    else if (key == "alpha2") p.alpha2 = v;
    else throw UsageError("--set: unknown key '" + key + "'");
  }
}

void check(const RunConfig& c, const std::string& command) {
  try {
    c.params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  if (c.s && !(*c.s < 1.0)) throw UsageError("--s must be < 1");
  if (command == "sweep" || command == "phasevar") {
    if (!(c.tmin <= c.tmax)) throw UsageError("time range needs tmin <= tmax");
    if (c.tmin < 0.0) throw UsageError("tmin must be >= 0");
    if (c.tsteps < 2) throw UsageError("--tsteps must be >= 2");
    if (command == "sweep" && c.observable != "squeezing" && c.observable != "phase_variance")
      throw UsageError("observable must be squeezing or phase_variance");
    if (command == "sweep" && c.observable == "squeezing") {
      if (c.columns.empty()) throw UsageError("no columns selected");
      for (const auto& col : c.columns)
        if (col != "S" && col != "Q" && col != "eta") throw UsageError("unknown column '" + col + "'");
    }
  }
  if (command == "wigner" || command == "quaddist" || command == "phasedist") {
    if (c.times.empty()) throw UsageError("no evaluation times");
    for (double t : c.times)
      if (!(t >= 0.0) || !std::isfinite(t)) throw UsageError("times must be finite and >= 0");
  }
  if (command == "wigner") {
    if (c.nx < 2 || c.ny < 2) throw UsageError("grid resolution must be >= 2 in both directions");
    if (!(c.grid.x_max > c.grid.x_min) || !(c.grid.y_max > c.grid.y_min)) throw UsageError("empty grid bounds");
  }
  if (command == "quaddist") {
    if (c.xnodes < 2) throw UsageError("x resolution must be >= 2");
    if (!(c.xmax > c.xmin)) throw UsageError("empty x range");
  }
  if (command == "phasedist" && c.theta_nodes < 2) throw UsageError("theta resolution must be >= 2");
  if (command == "validate" && c.tolerance && !(*c.tolerance >= 0.0)) throw UsageError("--tolerance must be >= 0");
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  check(c, "sweep");
  if (c.observable == "phase_variance") return cmd_phasevar(c, out);
  const std::vector<double> times = time_grid(c);
  const std::vector<SqueezingSample> rows = squeezing_sweep(c.params, times);
  auto pick = [](const SqueezingSample& r, const std::string& col) {
    return col == "S" ? r.S : col == "Q" ? r.Q : r.eta;
  };
  PrecisionGuard guard(out);
  if (c.format == "csv") {
    out << 't';
    for (const auto& col : c.columns) out << ',' << col;
    out << '\n';
    for (const auto& r : rows) {
      out << r.t;
      for (const auto& col : c.columns) out << ',' << pick(r, col);
      out << '\n';
    }
  } else {
    nlohmann::json j = header_json(c);
    nlohmann::json cols = nlohmann::json::array({"t"});
    for (const auto& col : c.columns) cols.push_back(col);
    j["columns"] = cols;
    nlohmann::json data = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row = nlohmann::json::array({r.t});
      for (const auto& col : c.columns) row.push_back(pick(r, col));
      data.push_back(std::move(row));
    }
    j["rows"] = std::move(data);
    write_json(out, j);
  }
  return kOk;
}

int cmd_phasevar(const RunConfig& c, std::ostream& out) {
  check(c, "phasevar");
  const std::vector<double> times = time_grid(c);
  const auto rows = phase_variance_sweep(c.params, times, s_or(c, -1.0));
  PrecisionGuard guard(out);
  if (c.format == "csv") {
    out << "t,phase_variance\n";
    for (const auto& r : rows) out << r.t << ',' << r.variance << '\n';
  } else {
    nlohmann::json j = header_json(c);
    j["s"] = s_or(c, -1.0);
    j["columns"] = {"t", "phase_variance"};
    nlohmann::json data = nlohmann::json::array();
    for (const auto& r : rows) data.push_back({r.t, r.variance});
    j["rows"] = std::move(data);
    write_json(out, j);
  }
  return kOk;
}

int cmd_wigner(const RunConfig& c, std::ostream& out) {
  check(c, "wigner");
  const double s = s_or(c, 0.0);
  std::vector<PhaseSpaceGrid> grids;
  for (double t : c.times) grids.push_back(quasiprob_grid(c.params, t, s, c.grid, c.nx, c.ny));
  if (c.format == "csv") {
    for (const auto& g : grids) write_csv(out, g);
  } else {
    nlohmann::json j = header_json(c);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& g : grids) list.push_back(to_json(g));
    j["grids"] = std::move(list);
    write_json(out, j);
  }
  return kOk;
}

int cmd_quaddist(const RunConfig& c, std::ostream& out) {
  check(c, "quaddist");
  const auto n = static_cast<std::size_t>(c.xnodes);
  const double h = (c.xmax - c.xmin) / (c.xnodes - 1);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = i + 1 == n ? c.xmax : c.xmin + static_cast<double>(i) * h;

  struct Curve {
    double t;
    std::vector<double> values;
    double normalization;
  };
  std::vector<Curve> curves;
  for (double t : c.times) {
    Curve curve{t, std::vector<double>(n), 0.0};
    parallel_for(n, [&](std::size_t i) { curve.values[i] = quadrature_distribution(c.params, t, xs[i]); });
    for (std::size_t i = 1; i < n; ++i) curve.normalization += 0.5 * h * (curve.values[i] + curve.values[i - 1]);
    curves.push_back(std::move(curve));
  }

  PrecisionGuard guard(out);
  if (c.format == "csv") {
    for (const auto& cv : curves) out << "# t=" << cv.t << " normalization=" << cv.normalization << '\n';
    out << "t,x,P\n";
    for (const auto& cv : curves)
      for (std::size_t i = 0; i < n; ++i) out << cv.t << ',' << xs[i] << ',' << cv.values[i] << '\n';
  } else {
    nlohmann::json j = header_json(c);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& cv : curves)
      list.push_back({{"t", cv.t}, {"x", xs}, {"P", cv.values}, {"normalization", cv.normalization}});
    j["distributions"] = std::move(list);
    write_json(out, j);
  }
  return kOk;
}

int cmd_phasedist(const RunConfig& c, std::ostream& out) {
  check(c, "phasedist");
  const double s = s_or(c, -1.0);
  std::vector<PhaseDistribution> curves;
  for (double t : c.times) curves.push_back(tabulate_phase_distribution(c.params, t, s, c.theta_nodes));

  PrecisionGuard guard(out);
  if (c.format == "csv") {
    for (const auto& cv : curves) out << "# t=" << cv.t << " s=" << cv.s << " normalization=" << cv.integral() << '\n';
    out << "t,theta,P\n";
    for (const auto& cv : curves)
      for (std::size_t i = 0; i < cv.values.size(); ++i)
        out << cv.t << ',' << cv.theta_nodes[i] << ',' << cv.values[i] << '\n';
  } else {
    nlohmann::json j = header_json(c);
    j["s"] = s;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& cv : curves)
      list.push_back({{"t", cv.t}, {"theta", cv.theta_nodes}, {"P", cv.values}, {"normalization", cv.integral()}});
    j["distributions"] = std::move(list);
    write_json(out, j);
  }
  return kOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  check(c, "validate");
  ValidationOptions options;
  if (c.restrict_set) {
    std::string name = "custom";
    for (const auto& set : default_validation_sets())
      if (set.params == c.params) name = set.name;
    options.sets = {{name, c.params}};
  }
  if (c.tolerance) {
    options.moment_tolerance = *c.tolerance;
    options.distribution_tolerance = *c.tolerance;
  }
  const ValidationReport report = run_validation(options);
  write_json(out, to_json(report, options));
  return report.passed() ? kOk : kFailure;
}

namespace {

struct Flags {
  std::string preset, config, out, format, grid, set, times, columns, xrange;
  double s = 0.0, tmin = 0.0, tmax = 0.0, tolerance = 0.0;
  int tsteps = 0, nodes = 0;
  bool dump = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--preset", f.preset, "Preset: " + [] {
    std::string s;
    for (const auto& n : preset_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  sub->add_option("--config", f.config, "JSON config file (as written by --dump-config)");
  sub->add_option("--out", f.out, "Output path (default stdout)");
  sub->add_option("--format", f.format, "csv or json");
  sub->add_option("--s", f.s, "Ordering parameter s < 1");
  sub->add_option("--tmin", f.tmin, "Sweep start time");
  sub->add_option("--tmax", f.tmax, "Sweep end time");
  sub->add_option("--tsteps", f.tsteps, "Sweep samples (>= 2)");
  sub->add_option("--t", f.times, "Comma-separated evaluation times");
  sub->add_option("--grid", f.grid, "xmin,xmax,ymin,ymax,nx,ny");
  sub->add_option("--xrange", f.xrange, "xmin,xmax,n for quadrature distributions");
  sub->add_option("--nodes", f.nodes, "Theta nodes for phase distributions");
  sub->add_option("--columns", f.columns, "Comma-separated subset of S,Q,eta");
  sub->add_option("--set", f.set, "Parameter overrides \"key=value ...\"");
  sub->add_option("--tolerance", f.tolerance, "validate: tolerance for every comparison");
  sub->add_flag("--dump-config", f.dump, "Print the resolved config as JSON and exit");
}

RunConfig resolve(const CLI::App& sub, const Flags& f) {
  nlohmann::json file = nlohmann::json::object();
  if (sub.count("--config")) {
    std::ifstream in(f.config);
    if (!in) throw UsageError("cannot open config '" + f.config + "'");
    try {
      file = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config '" + f.config + "' is not valid JSON: " + e.what());
    }
    if (!file.is_object()) throw UsageError("config must be a JSON object");
  }
  std::string preset_name;
  if (sub.count("--preset")) preset_name = f.preset;
  else if (file.contains("preset") && file.at("preset").is_string()) preset_name = file.at("preset").get<std::string>();

  RunConfig c = preset_name.empty() ? RunConfig{} : preset(preset_name);
  c = from_json(file, c);
  c.preset = preset_name;

  if (sub.count("--out")) c.out = f.out;
  if (sub.count("--format")) c.format = f.format;
  if (sub.count("--s")) c.s = f.s;
  if (sub.count("--tmin")) c.tmin = f.tmin;
  if (sub.count("--tmax")) c.tmax = f.tmax;
  if (sub.count("--tsteps")) c.tsteps = f.tsteps;
  if (sub.count("--t")) {
    c.times.clear();
    for (const auto& item : split(f.times, ',')) c.times.push_back(to_double(item, "--t"));
  }
  if (sub.count("--grid")) {
    const auto parts = split(f.grid, ',');
    if (parts.size() != 6) throw UsageError("--grid expects xmin,xmax,ymin,ymax,nx,ny");
    c.grid = {to_double(parts[0], "--grid"), to_double(parts[1], "--grid"), to_double(parts[2], "--grid"),
              to_double(parts[3], "--grid")};
    c.nx = to_int(parts[4], "--grid");
    c.ny = to_int(parts[5], "--grid");
  }
  if (sub.count("--xrange")) {
    const auto parts = split(f.xrange, ',');
    if (parts.size() != 3) throw UsageError("--xrange expects xmin,xmax,n");
    c.xmin = to_double(parts[0], "--xrange");
    c.xmax = to_double(parts[1], "--xrange");
    c.xnodes = to_int(parts[2], "--xrange");
  }
  if (sub.count("--nodes")) c.theta_nodes = f.nodes;
  if (sub.count("--columns")) c.columns = split(f.columns, ',');
  if (sub.count("--set")) {
    apply_set(c.params, f.set);
    c.restrict_set = true;
  }
  if (sub.count("--tolerance")) c.tolerance = f.tolerance;
  return c;
}

int dispatch(const std::string& command, const RunConfig& c, std::ostream& out) {
  if (command == "sweep") return cmd_sweep(c, out);
  if (command == "phasevar") return cmd_phasevar(c, out);
  if (command == "wigner") return cmd_wigner(c, out);
  if (command == "quaddist") return cmd_quaddist(c, out);
  if (command == "phasedist") return cmd_phasedist(c, out);
  return cmd_validate(c, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Codirectional Kerr coupler: squeezing, quasiprobabilities, phase statistics"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands = {
      {"sweep", "Squeezing factors (or phase variance) over a time range"},
      {"wigner", "Quasiprobability on a phase-space grid"},
      {"quaddist", "Quadrature distribution P(x)"},
      {"phasedist", "Phase distribution P(theta)"},
      {"phasevar", "Phase variance over a time range"},
      {"validate", "Series evaluators against the Fock-space oracle"}};
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const RunConfig config = resolve(*sub, flags);
    if (flags.dump) {
      std::ofstream file;
      if (sub->count("--out")) {
        file.open(config.out);
        if (!file) throw UsageError("cannot write '" + config.out + "'");
      }
      write_json(file.is_open() ? file : out, to_json(config));
      return kOk;
    }
    check(config, command);
    if (config.out.empty()) return dispatch(command, config, out);
    std::ostringstream buffer;
    const int code = dispatch(command, config, buffer);
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + config.out + "'");
    file << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "kerrlab " << command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const TruncationError& e) {
    err << "kerrlab " << command << ": series truncation failed: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "kerrlab " << command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "kerrlab " << command << ": " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace kerrlab::cli
