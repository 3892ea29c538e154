#include "cli/app.hpp"

#include "cli/grid.hpp"
#include "cli/output.hpp"

#include <casimir1d/casimir1d.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace casimir1d::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kForceTol = 1e-10;
constexpr double kEntropyTol = 1e-8;
constexpr double kDensityTol = 1e-10;

struct Settings {
  double q = 1.0;
  double d = 1.0;
  double temperature = 0.0;
  std::string method = "both";
  std::string zero_mode = "on";
  std::string units = "raw";
  double tol = 0.0;  // 0 selects the command default
  double lambda = kDefaultCutoffLambda;
  double switch_point = 0.0;
  std::size_t max_half_periods = 4000;
  std::size_t jobs = 1;
  std::string out;
  bool json = false;
  std::string config;
  // figure
  std::string id;
  std::size_t points = 0;
  std::vector<double> temperatures{0.5, 1.0, 2.0};
  double min = 0.0;
  double max = 0.0;
  // sweep
  std::string quantity = "force";
  std::string variable = "d";
  std::string spacing = "log";
  double fixed = 0.0;
};

const std::vector<std::string> kScatteringColumns = {
    "q",    "d",    "B_re", "B_im", "C_re",      "C_im",          "D_re",
    "D_im", "G_re", "G_im", "unitarity", "flux_residual", "kernel"};
const std::vector<std::string> kForceColumns = {"d",     "That", "method",    "value",
                                                "err",   "evals", "converged", "units"};
const std::vector<std::string> kEntropyColumns = {"d",   "That",  "lambda",    "method", "value",
                                                  "err", "evals", "converged", "tol"};
const std::vector<std::string> kDensityColumns = {"dtilde", "That",      "value", "err",
                                                  "evals",  "converged", "tol"};

// ---------------------------------------------------------------- selections

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Method> parse_methods(const std::string& spec) {
  if (trim(spec) == "both") return {Method::canonical, Method::lifshitz};
  std::vector<Method> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const auto token = trim(spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos));
    if (!token.empty()) {
      Method m;
      try {
        m = method_from_string(token);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw UsageError("empty method set");
  return out;
}

std::vector<EntropyMethod> parse_entropy_methods(const std::string& method,
                                                 const std::string& zero_mode) {
  if (zero_mode != "on" && zero_mode != "off" && zero_mode != "both") {
    throw UsageError("--zero-mode must be on, off or both");
  }
  std::vector<EntropyMethod> out;
  for (Method m : parse_methods(method)) {
    if (m == Method::canonical) {
      out.push_back(EntropyMethod::canonical);
      continue;
    }
    if (zero_mode != "off") out.push_back(EntropyMethod::lifshitz);
    if (zero_mode != "on") out.push_back(EntropyMethod::lifshitz_no_zero_mode);
  }
  return out;
}

ForceScale parse_units(const std::string& s) {
  try {
    return force_scale_from_string(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ordered_json names(const std::vector<Method>& ms) {
  ordered_json a = ordered_json::array();
  for (auto m : ms) a.push_back(std::string(to_string(m)));
  return a;
}

ordered_json names(const std::vector<EntropyMethod>& ms) {
  ordered_json a = ordered_json::array();
  for (auto m : ms) a.push_back(std::string(to_string(m)));
  return a;
}

// ---------------------------------------------------------------- evaluation

ForceOptions force_options(const Settings& s, double tol) {
  ForceOptions o;
  o.tol = tol;
  o.switch_point = s.switch_point;
  o.max_half_periods = s.max_half_periods;
  return o;
}

double effective_switch_point(const Settings& s, double d) {
  if (s.switch_point > 0.0) return s.switch_point;
  return std::max(kDefaultForceSwitchPoint, default_switch_point(2.0 * d));
}

Record force_record(const ForceValue& f, ForceScale units) {
  Record r;
  r["d"] = f.point.d;
  r["That"] = f.point.temperature;
  r["method"] = std::string(to_string(f.method));
  r["value"] = apply_force_scale(f.value, units);
  r["err"] = std::abs(apply_force_scale(f.estimate.abs_error_estimate, units));
  r["evals"] = f.estimate.evaluations;
  r["converged"] = f.estimate.converged;
  r["units"] = std::string(to_string(units));
  return r;
}

Record eval_force(const DimensionlessPoint& p, Method m, const ForceOptions& o, ForceScale units) {
  try {
    return force_record(force(p, m, o), units);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::runtime_error&) {
    ForceValue failed;
    failed.value = std::numeric_limits<double>::quiet_NaN();
    failed.method = m;
    failed.point = p;
    failed.estimate.abs_error_estimate = std::numeric_limits<double>::infinity();
    return force_record(failed, units);
  }
}

EntropyValue entropy_value(const DimensionlessPoint& p, EntropyMethod m, double lambda, double tol,
                           std::size_t jobs) {
  switch (m) {
    case EntropyMethod::canonical: {
      EntropyOptions o;
      o.tol = tol;
      o.jobs = jobs;
      return entropy_canonical(p, lambda, o);
    }
    case EntropyMethod::lifshitz:
      return entropy_lifshitz(p, lambda, true, tol);
    case EntropyMethod::lifshitz_no_zero_mode:
      return entropy_lifshitz(p, lambda, false, tol);
  }
  throw std::logic_error("unhandled entropy method");
}

Record entropy_record(const EntropyValue& e, double tol) {
  Record r;
  r["d"] = e.point.d;
  r["That"] = e.point.temperature;
  r["lambda"] = e.cutoff_lambda;
  r["method"] = std::string(to_string(e.method));
  r["value"] = e.value;
  r["err"] = e.estimate.abs_error_estimate;
  r["evals"] = e.estimate.evaluations;
  r["converged"] = e.estimate.converged;
  r["tol"] = tol;
  return r;
}

Record density_record(const EntropyDensity& e, double tol) {
  Record r;
  r["dtilde"] = e.dtilde;
  r["That"] = e.temperature;
  r["value"] = e.value;
  r["err"] = e.estimate.abs_error_estimate;
  r["evals"] = e.estimate.evaluations;
  r["converged"] = e.estimate.converged;
  r["tol"] = tol;
  return r;
}

bool all_converged(const Table& t) {
  return std::all_of(t.rows.begin(), t.rows.end(), [](const Record& r) {
    const auto it = r.find("converged");
    return it == r.end() || it->get<bool>();
  });
}

// ---------------------------------------------------------------- output

ordered_json base_metadata(const std::string& command, const std::vector<std::string>& args) {
  ordered_json m;
  m["tool"] = "casimir1d";
  m["version"] = CASIMIR1D_VERSION;
  m["command"] = command;
  m["arguments"] = args;
  m["number_format"] = "17 significant digits, '.' decimal separator";
  return m;
}

int emit(const Settings& s, const Table& t, ordered_json meta, std::ostream& out) {
  const bool ok = all_converged(t);
  if (s.out.empty()) {
    if (s.json) {
      write_json(out, t);
    } else {
      write_csv(out, t);
    }
  } else {
    write_table_file(s.out, t, s.json);
    meta["format"] = s.json ? "json" : "csv";
    meta["columns"] = t.columns;
    meta["rows"] = t.rows.size();
    meta["all_converged"] = ok;
    write_metadata_file(s.out + ".meta.json", meta);
  }
  return ok ? kSuccess : kNotConverged;
}

// ---------------------------------------------------------------- commands

int cmd_scattering(const Settings& s, const std::vector<std::string>& args, std::ostream& out) {
  const auto c = coefficients_closed_form(s.q, s.d);
  Record r;
  r["q"] = s.q;
  r["d"] = s.d;
  r["B_re"] = c.B.real();
  r["B_im"] = c.B.imag();
  r["C_re"] = c.C.real();
  r["C_im"] = c.C.imag();
  r["D_re"] = c.D.real();
  r["D_im"] = c.D.imag();
  r["G_re"] = c.G.real();
  r["G_im"] = c.G.imag();
  r["unitarity"] = c.unitarity();
  r["flux_residual"] = c.flux_residual();
  r["kernel"] = kernel(s.q, s.d).value;
  Table t{kScatteringColumns, {r}};
  auto meta = base_metadata("scattering", args);
  meta["effective_config"] = {{"q", s.q}, {"d", s.d}};
  return emit(s, t, std::move(meta), out);
}

int cmd_force(const Settings& s, const std::vector<std::string>& args, std::ostream& out) {
  const DimensionlessPoint p{s.d, s.temperature};
  p.validate();
  const auto methods = parse_methods(s.method);
  const auto units = parse_units(s.units);
  const double tol = s.tol > 0 ? s.tol : kForceTol;
  const auto opts = force_options(s, tol);
  Table t{kForceColumns, parallel_map(methods.size(), s.jobs, [&](std::size_t i) {
            return eval_force(p, methods[i], opts, units);
          })};
  auto meta = base_metadata("force", args);
  meta["effective_config"] = {{"d", s.d},
                              {"That", s.temperature},
                              {"methods", names(methods)},
                              {"tol", tol},
                              {"units", to_string(units)},
                              {"switch_point", effective_switch_point(s, s.d)},
                              {"max_half_periods", s.max_half_periods},
                              {"jobs", s.jobs}};
  return emit(s, t, std::move(meta), out);
}

int cmd_entropy(const Settings& s, const std::vector<std::string>& args, std::ostream& out) {
  const DimensionlessPoint p{s.d, s.temperature};
  p.validate();
  if (!(s.temperature > 0.0)) throw UsageError("entropy requires --That > 0");
  const auto methods = parse_entropy_methods(s.method, s.zero_mode);
  const double tol = s.tol > 0 ? s.tol : kEntropyTol;
  Table t{kEntropyColumns, {}};
  for (auto m : methods) t.rows.push_back(entropy_record(entropy_value(p, m, s.lambda, tol, s.jobs), tol));
  auto meta = base_metadata("entropy", args);
  meta["effective_config"] = {{"d", s.d},
                              {"That", s.temperature},
                              {"lambda", s.lambda},
                              {"methods", names(methods)},
                              {"tol", tol},
                              {"qmax_over_t", EntropyOptions{}.qmax_over_t},
                              {"outer_panels", EntropyOptions{}.outer_panels},
                              {"jobs", s.jobs}};
  return emit(s, t, std::move(meta), out);
}

std::string temperature_tag(double t) { return "T" + format_number(t); }

int cmd_figure(const Settings& s, const std::vector<std::string>& args, std::ostream& out,
               bool units_given) {
  const std::string& id = s.id;
  if (id != "1" && id != "2" && id != "3a" && id != "3b") {
    throw UsageError("unknown figure id '" + id + "' (1, 2, 3a, 3b)");
  }
  const std::filesystem::path dir = s.out.empty() ? std::filesystem::path(".") : std::filesystem::path(s.out);
  std::filesystem::create_directories(dir);
  const std::string ext = s.json ? ".json" : ".csv";

  struct Curve {
    std::string file;
    double temperature;
    Method method;
  };
  std::vector<Curve> curves;
  std::vector<double> grid;
  double tol = 0.0;
  std::vector<std::string> columns;
  std::string grid_name = "d";
  ForceScale units = ForceScale::raw_dimensionless;
  const auto& temps = s.temperatures;
  if (temps.empty()) throw UsageError("figure needs at least one temperature");
  for (double t : temps) {
    if (!(t > 0.0)) throw UsageError("figure temperatures must be > 0");
  }

  const auto pick = [&](double lo, double hi, std::size_t n) {
    return log_grid(s.min > 0 ? s.min : lo, s.max > 0 ? s.max : hi, s.points ? s.points : n);
  };
  if (id == "1" || id == "2") {
    grid = pick(0.1, 10.0, 60);
    tol = s.tol > 0 ? s.tol : kForceTol;
    columns = kForceColumns;
    units = units_given ? parse_units(s.units)
                        : (id == "1" ? ForceScale::fig1_scale : ForceScale::fig2_scale);
    const std::vector<double> ts = id == "1" ? std::vector<double>{0.0} : temps;
    for (double t : ts) {
      for (Method m : {Method::canonical, Method::lifshitz}) {
        const std::string tag = id == "1" ? "" : "_" + temperature_tag(t);
        curves.push_back({"fig" + id + tag + "_" + std::string(to_string(m)) + ext, t, m});
      }
    }
  } else if (id == "3a") {
    grid = pick(0.5, 100.0, 60);
    grid_name = "dtilde";
    tol = s.tol > 0 ? s.tol : kDensityTol;
    columns = kDensityColumns;
    for (double t : temps) curves.push_back({"fig3a_" + temperature_tag(t) + ext, t, Method::canonical});
  } else {
    grid = pick(0.5, 20.0, 40);
    tol = s.tol > 0 ? s.tol : kEntropyTol;
    columns = kEntropyColumns;
    if (!(s.lambda > grid.back())) throw UsageError("--lambda must exceed the largest separation");
    for (double t : temps) curves.push_back({"fig3b_" + temperature_tag(t) + ext, t, Method::canonical});
  }

  const std::size_t n = grid.size();
  const auto opts = force_options(s, tol);
  const auto rows = parallel_map(curves.size() * n, s.jobs, [&](std::size_t k) -> Record {
    const auto& c = curves[k / n];
    const double x = grid[k % n];
    if (id == "1" || id == "2") return eval_force({x, c.temperature}, c.method, opts, units);
    if (id == "3a") return density_record(entropy_density_canonical(x, c.temperature, tol), tol);
    EntropyOptions eo;
    eo.tol = tol;
    return entropy_record(entropy_canonical({x, c.temperature}, s.lambda, eo), tol);
  });

  bool ok = true;
  ordered_json files = ordered_json::array();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    Table t{columns, {rows.begin() + c * n, rows.begin() + (c + 1) * n}};
    ok = ok && all_converged(t);
    const auto path = dir / curves[c].file;
    write_table_file(path.string(), t, s.json);
    files.push_back({{"file", curves[c].file},
                     {"That", curves[c].temperature},
                     {"method", id == "1" || id == "2" ? std::string(to_string(curves[c].method))
                                                       : std::string("canonical")},
                     {"all_converged", all_converged(t)}});
    out << path.string() << '\n';
  }

  auto meta = base_metadata("figure", args);
  ordered_json cfg;
  cfg["id"] = id;
  cfg["grid"] = {{"variable", grid_name},
                 {"spacing", "log"},
                 {"min", grid.front()},
                 {"max", grid.back()},
                 {"points", grid.size()}};
  cfg["temperatures"] = id == "1" ? std::vector<double>{0.0} : temps;
  cfg["tol"] = tol;
  if (id == "1" || id == "2") {
    cfg["units"] = to_string(units);
    cfg["units_meaning"] = units == ForceScale::fig1_scale   ? "force in units of -hbar gamma^2 / v^3"
                           : units == ForceScale::fig2_scale ? "force in units of -hbar gamma^2 / (4 pi v^3)"
                                                             : "force in units of hbar gamma^2 / v^3";
    cfg["switch_point"] = s.switch_point > 0 ? ordered_json(s.switch_point)
                                             : ordered_json("max(100, 2 pi / d)");
    cfg["max_half_periods"] = s.max_half_periods;
  }
  if (id == "3b") cfg["lambda"] = s.lambda;
  if (id == "3a" || id == "3b") cfg["qmax_over_t"] = EntropyOptions{}.qmax_over_t;
  cfg["jobs"] = s.jobs;
  meta["effective_config"] = cfg;
  meta["format"] = s.json ? "json" : "csv";
  meta["columns"] = columns;
  meta["files"] = files;
  meta["all_converged"] = ok;
  write_metadata_file((dir / ("fig" + id + ".meta.json")).string(), meta);
  return ok ? kSuccess : kNotConverged;
}

int cmd_sweep(const Settings& s, const std::vector<std::string>& args, std::ostream& out,
              bool fixed_given) {
  if (s.variable != "d" && s.variable != "That") throw UsageError("--variable must be d or That");
  if (s.spacing != "linear" && s.spacing != "log") throw UsageError("--spacing must be linear or log");
  if (s.quantity != "force" && s.quantity != "entropy") {
    throw UsageError("--quantity must be force or entropy");
  }
  if (s.points < 2) throw UsageError("--points must be at least 2");
  if (!(s.min < s.max)) throw UsageError("sweep needs --min < --max");
  if ((s.variable == "d" || s.spacing == "log") && !(s.min > 0)) {
    throw UsageError("sweep needs --min > 0 for d and for log spacing");
  }
  const bool sweep_d = s.variable == "d";
  const double fixed = fixed_given ? s.fixed : (sweep_d ? 0.0 : 1.0);
  const auto grid = s.spacing == "log" ? log_grid(s.min, s.max, s.points)
                                       : linear_grid(s.min, s.max, s.points);
  const auto point = [&](double x) {
    DimensionlessPoint p = sweep_d ? DimensionlessPoint{x, fixed} : DimensionlessPoint{fixed, x};
    p.validate();
    return p;
  };
  for (double x : grid) point(x);

  auto meta = base_metadata("sweep", args);
  ordered_json cfg;
  cfg["quantity"] = s.quantity;
  cfg["variable"] = s.variable;
  cfg["min"] = s.min;
  cfg["max"] = s.max;
  cfg["points"] = s.points;
  cfg["spacing"] = s.spacing;
  cfg["fixed"] = {{"variable", sweep_d ? "That" : "d"}, {"value", fixed}};
  cfg["jobs"] = s.jobs;

  Table t;
  if (s.quantity == "force") {
    const auto methods = parse_methods(s.method);
    const auto units = parse_units(s.units);
    const double tol = s.tol > 0 ? s.tol : kForceTol;
    const auto opts = force_options(s, tol);
    const std::size_t m = methods.size();
    t = {kForceColumns, parallel_map(grid.size() * m, s.jobs, [&](std::size_t k) {
           return eval_force(point(grid[k / m]), methods[k % m], opts, units);
         })};
    cfg["methods"] = names(methods);
    cfg["tol"] = tol;
    cfg["units"] = to_string(units);
    cfg["switch_point"] = s.switch_point > 0 ? ordered_json(s.switch_point)
                                             : ordered_json("max(100, 2 pi / d)");
    cfg["max_half_periods"] = s.max_half_periods;
  } else {
    const auto methods = parse_entropy_methods(s.method, s.zero_mode);
    const double tol = s.tol > 0 ? s.tol : kEntropyTol;
    for (double x : grid) {
      if (!(point(x).temperature > 0)) throw UsageError("entropy sweeps need That > 0");
    }
    const std::size_t m = methods.size();
    t = {kEntropyColumns, parallel_map(grid.size() * m, s.jobs, [&](std::size_t k) {
           return entropy_record(entropy_value(point(grid[k / m]), methods[k % m], s.lambda, tol, 1),
                                 tol);
         })};
    cfg["methods"] = names(methods);
    cfg["tol"] = tol;
    cfg["lambda"] = s.lambda;
  }
  meta["effective_config"] = cfg;
  return emit(s, t, std::move(meta), out);
}

// ---------------------------------------------------------------- config file

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto key = trim(text.substr(0, eq));
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    kv.emplace_back(key, trim(text.substr(eq + 1)));
  }
  return kv;
}

std::string config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& name) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == name || a.rfind(name + "=", 0) == 0;
  });
}

/// Appends config-file settings for options not given on the command line.
std::vector<std::string> merge_config(const CLI::App& app, std::vector<std::string> args,
                                      std::ostream& err) {
  const auto path = config_path(args);
  if (path.empty()) return args;
  const CLI::App* sub = nullptr;
  for (const auto& a : args) {
    for (const auto* c : app.get_subcommands({})) {
      if (c->get_name() == a) sub = c;
    }
    if (sub) break;
  }
  if (!sub) return args;
  for (const auto& [key, value] : read_config(path)) {
    const std::string name = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(name);
    if (!opt || key == "config") {
      err << "warning: config key '" << key << "' is not an option of '" << sub->get_name()
          << "'\n";
      continue;
    }
    if (given_on_command_line(args, name)) continue;
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1" || value == "on" || value == "yes") args.push_back(name);
      continue;
    }
    args.push_back(name);
    args.push_back(value);
  }
  return args;
}

// ---------------------------------------------------------------- wiring

void add_output_options(CLI::App* c, Settings& s) {
  c->add_option("--out", s.out, "Write the table to this file (plus <file>.meta.json)");
  c->add_flag("--json", s.json, "Emit JSON records instead of CSV");
}

void add_force_numerics(CLI::App* c, Settings& s) {
  c->add_option("--switch-point", s.switch_point,
                "Start of the accelerated oscillatory tail (0: max(100, 2 pi / d))")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  c->add_option("--max-half-periods", s.max_half_periods, "Tail panel cap")
      ->check(CLI::Range(std::size_t{4}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Casimir force and entropy between two delta-function barriers", "casimir1d"};
  app.set_version_flag("--version", std::string(CASIMIR1D_VERSION));
  app.require_subcommand(1);
  app.add_option("--config", s.config, "key=value file; command-line flags take precedence");
  app.fallthrough();

  auto* scattering = app.add_subcommand("scattering", "Amplitudes B, C, D, G and the force kernel");
  scattering->add_option("--q", s.q, "Reduced wavenumber (> 0)")->required();
  scattering->add_option("--d", s.d, "Reduced separation (> 0)")->capture_default_str();
  add_output_options(scattering, s);

  auto* force_cmd = app.add_subcommand("force", "Casimir force at one point");
  force_cmd->add_option("--d", s.d, "Reduced separation (> 0)")->capture_default_str();
  force_cmd->add_option("--That", s.temperature, "Reduced temperature (>= 0)")->capture_default_str();
  force_cmd->add_option("--method", s.method, "canonical, lifshitz, both, or a comma list")
      ->capture_default_str();
  force_cmd->add_option("--tol", s.tol, "Absolute tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  force_cmd->add_option("--units", s.units, "raw, fig1 or fig2")->capture_default_str();
  force_cmd->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_force_numerics(force_cmd, s);
  add_output_options(force_cmd, s);

  auto* entropy_cmd = app.add_subcommand("entropy", "Casimir entropy at one point");
  entropy_cmd->add_option("--d", s.d, "Reduced separation (> 0)")->capture_default_str();
  entropy_cmd->add_option("--That", s.temperature, "Reduced temperature (> 0)")->required();
  entropy_cmd->add_option("--method", s.method, "canonical, lifshitz, both, or a comma list")
      ->capture_default_str();
  entropy_cmd->add_option("--zero-mode", s.zero_mode, "Lifshitz zero mode: on, off or both")
      ->capture_default_str();
  entropy_cmd->add_option("--lambda", s.lambda, "Infrared cutoff")->check(CLI::PositiveNumber)->capture_default_str();
  entropy_cmd->add_option("--tol", s.tol, "Absolute tolerance (default 1e-8)")->check(CLI::PositiveNumber);
  entropy_cmd->add_option("--jobs", s.jobs, "Threads for the outer separation integral")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(entropy_cmd, s);

  auto* figure_cmd = app.add_subcommand("figure", "Write the data behind a figure (1, 2, 3a, 3b)");
  figure_cmd->add_option("--id", s.id, "Figure id: 1, 2, 3a or 3b")->required();
  figure_cmd->add_option("--out", s.out, "Output directory (default: current directory)");
  figure_cmd->add_flag("--json", s.json, "Emit JSON records instead of CSV");
  figure_cmd->add_option("--points", s.points, "Grid points (default 60; 40 for 3b)");
  figure_cmd->add_option("--min", s.min, "Smallest separation on the grid");
  figure_cmd->add_option("--max", s.max, "Largest separation on the grid");
  figure_cmd->add_option("--temperatures", s.temperatures, "Comma list of reduced temperatures")
      ->delimiter(',')
      ->capture_default_str();
  figure_cmd->add_option("--tol", s.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  figure_cmd->add_option("--lambda", s.lambda, "Infrared cutoff for 3b")->check(CLI::PositiveNumber)->capture_default_str();
  figure_cmd->add_option("--units", s.units, "raw, fig1 or fig2 (default: the figure's own)");
  figure_cmd->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_force_numerics(figure_cmd, s);

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate on a one-dimensional grid");
  sweep_cmd->add_option("--quantity", s.quantity, "force or entropy")->capture_default_str();
  sweep_cmd->add_option("--variable", s.variable, "d or That")->capture_default_str();
  sweep_cmd->add_option("--min", s.min, "Grid start")->required();
  sweep_cmd->add_option("--max", s.max, "Grid end")->required();
  sweep_cmd->add_option("--points", s.points, "Grid points (>= 2)")->required();
  sweep_cmd->add_option("--spacing", s.spacing, "linear or log")->capture_default_str();
  sweep_cmd->add_option("--fixed", s.fixed, "Value of the other coordinate (default d=1 or That=0)");
  sweep_cmd->add_option("--method", s.method, "canonical, lifshitz, both, or a comma list")
      ->capture_default_str();
  sweep_cmd->add_option("--zero-mode", s.zero_mode, "Lifshitz zero mode for entropy: on, off or both")
      ->capture_default_str();
  sweep_cmd->add_option("--tol", s.tol, "Absolute tolerance")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--lambda", s.lambda, "Infrared cutoff for entropy")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--units", s.units, "raw, fig1 or fig2")->capture_default_str();
  sweep_cmd->add_option("--jobs", s.jobs, "Worker threads (1: strictly serial)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_force_numerics(sweep_cmd, s);
  add_output_options(sweep_cmd, s);

  try {
    auto merged = merge_config(app, args, err);
    std::vector<std::string> reversed(merged.rbegin(), merged.rend());
    app.parse(reversed);
    if (*scattering) return cmd_scattering(s, args, out);
    if (*force_cmd) return cmd_force(s, args, out);
    if (*entropy_cmd) return cmd_entropy(s, args, out);
    if (*figure_cmd) return cmd_figure(s, args, out, figure_cmd->count("--units") > 0);
    if (*sweep_cmd) return cmd_sweep(s, args, out, sweep_cmd->count("--fixed") > 0);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  }
}

}  // namespace casimir1d::cli
