// auxin: command-line front end for the PIN1/IAA transport model.
//
//   auxin trivial   --preset M2 --cells 20
//   auxin simulate  --preset M1 --t-end 200 --state-out pattern.json --svg
//   auxin continue  --preset M1 --param t --window 0.1:6 --switch --svg
//   auxin atlas     --preset M2 --x rho_iaa:0.01:3:60 --y t:0.1:20:60 --boundary-types
//
// Exit codes: 0 success, 2 configuration error, 3 numerical blow-up,
// 4 continuation produced nothing.

#include "auxin/atlas.hpp"
#include "auxin/continuation.hpp"
#include "auxin/integrate.hpp"
#include "auxin/io.hpp"
#include "auxin/model.hpp"
#include "auxin/svg.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kFormatVersion = 1;

enum ExitCode { kOk = 0, kConfigError = 2, kBlowUp = 3, kContinuationFailure = 4 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string preset = "M2";
  std::string params_file;
  std::vector<std::string> overrides;
  int cells = 20;
  int probe = 6;
  std::string out_dir;
  bool svg = false;
};

struct SimulateOptions {
  double t_end = 10.0;
  double dt = auxin::kDefaultTimeStep;
  int stride = 1;
  double amplitude = 0.2;
  int frequency = 5;
  std::string from;
  std::string state_out;
  bool orbit = false;
  double transient = 0.5;
};

struct ContinueOptions {
  std::string param = "t";
  std::string window = "0.1:6";
  std::string from = "trivial";
  double start = std::numeric_limits<double>::quiet_NaN();
  double relax_time = 500.0;
  double ds0 = 0.01;
  double ds_max = 0.1;
  int max_points = 4000;
  bool do_switch = false;
  int switch_depth = 1;
};

struct AtlasOptions {
  std::string x;
  std::string y;
  bool log_x = false;
  bool log_y = false;
  int jobs = 0;
  bool boundary_types = false;
};

// ---------------------------------------------------------------------------
// Output bookkeeping

class RunRecorder {
 public:
  RunRecorder(std::string command, fs::path dir) : command_(std::move(command)), dir_(std::move(dir)) {
    start_ = std::chrono::steady_clock::now();
    fs::create_directories(dir_);
  }

  const fs::path& dir() const { return dir_; }

  void write(const std::string& name, const std::string& text) {
    auxin::write_text_file(dir_ / name, text);
    outputs_.push_back(name);
  }

  void note(const std::string& key, json value) { notes_[key] = std::move(value); }

  void finish(const json& config, int exit_code) {
    json manifest;
    manifest["tool"] = "auxin";
    manifest["version"] = kVersion;
    manifest["format_version"] = kFormatVersion;
    manifest["command"] = command_;
    manifest["config"] = config;
    manifest["exit_code"] = exit_code;
    manifest["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    manifest["outputs"] = json::array();
    for (const auto& name : outputs_) {
      manifest["outputs"].push_back({{"file", name}, {"sha256", sha256_file(dir_ / name)}});
    }
    if (!notes_.empty()) manifest["notes"] = notes_;
    const fs::path tmp = dir_ / "manifest.json.tmp";
    auxin::write_json_file(tmp, manifest);
    fs::rename(tmp, dir_ / "manifest.json");
  }

 private:
  static std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
  }

  std::string command_;
  fs::path dir_;
  std::vector<std::string> outputs_;
  json notes_ = json::object();
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Configuration resolution

auxin::ParameterSet resolve_params(const CommonOptions& c) {
  auxin::ParameterSet prm = auxin::preset(c.preset);
  if (!c.params_file.empty()) prm = auxin::params_from_json(auxin::read_json_file(c.params_file), prm);
  for (const auto& o : c.overrides) auxin::apply_override(prm, o);
  prm.validate();
  return prm;
}

fs::path resolve_out_dir(const CommonOptions& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("AUXIN_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

json common_json(const CommonOptions& c, const auxin::ParameterSet& prm) {
  return {{"preset", c.preset},       {"params_file", c.params_file}, {"overrides", c.overrides},
          {"cells", c.cells},         {"probe", c.probe},             {"svg", c.svg},
          {"parameters", auxin::params_to_json(prm)}};
}

void check_probe(const CommonOptions& c, int n) {
  if (c.probe < 1 || c.probe > n) throw ConfigError("--probe must lie in 1.." + std::to_string(n));
}

std::pair<double, double> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("--window must be lo:hi");
  try {
    const double lo = std::stod(text.substr(0, colon));
    const double hi = std::stod(text.substr(colon + 1));
    if (!(lo < hi)) throw ConfigError("--window needs lo < hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("--window must be lo:hi with numbers");
  }
}

std::string csv(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream os;
  writer(os);
  return os.str();
}

const char* stability_name(const auxin::StabilityTag& tag) { return tag.stable() ? "Stable" : "Unstable"; }

// ---------------------------------------------------------------------------
// Commands

int cmd_trivial(const CommonOptions& c) {
  const auxin::ParameterSet prm = resolve_params(c);
  const auxin::CellRow row(c.cells);
  const Eigen::VectorXd u = auxin::trivial_solution(row, prm);
  const auxin::NumericsConfig num;
  const auxin::SteadyProblem problem(row, prm, auxin::Param::t);
  const auxin::Spectrum spectrum = problem.spectrum(u, prm.t, num);
  const auxin::StabilityTag tag = auxin::classify_stability(spectrum, num);

  json report;
  report["a_star"] = u(c.cells);
  report["p_star"] = u(0);
  report["stability"] = stability_name(tag);
  report["unstable_count"] = tag.unstable_count;
  report["leading_eigenvalue"] = {spectrum.leading().real(), spectrum.leading().imag()};
  report["parameters"] = auxin::params_to_json(prm);
  report["cells"] = c.cells;

  std::cout << std::setprecision(7) << "a* = " << u(c.cells) << "\np* = " << u(0) << "\nstability: "
            << stability_name(tag) << " (" << tag.unstable_count << " unstable eigenvalues, leading "
            << spectrum.leading() << ")\n";

  RunRecorder rec("trivial", resolve_out_dir(c));
  rec.write("trivial.json", report.dump(2) + "\n");
  rec.finish(common_json(c, prm), kOk);
  return kOk;
}

int cmd_simulate(const CommonOptions& c, const SimulateOptions& s) {
  const auxin::ParameterSet prm = resolve_params(c);
  if (!(s.t_end > 0.0) || !(s.dt > 0.0) || s.stride < 1) throw ConfigError("--t-end, --dt and --stride must be positive");
  if (s.amplitude < 0.0) throw ConfigError("--amplitude must be >= 0");

  auxin::DynamicState state0;
  int n = c.cells;
  if (s.from.empty()) {
    state0 = auxin::perturbed_trivial(auxin::CellRow(n), prm, s.amplitude, s.frequency);
  } else {
    const auxin::StateFile f = auxin::read_state_file(s.from);
    n = f.n;
    state0 = auxin::lift_to_dynamic(f.u, prm);
  }
  check_probe(c, n);
  const auxin::CellRow row(n);

  json config = common_json(c, prm);
  config["cells"] = n;
  config["simulate"] = {{"t_end", s.t_end},         {"dt", s.dt},       {"stride", s.stride},
                        {"amplitude", s.amplitude}, {"frequency", s.frequency}, {"from", s.from},
                        {"orbit", s.orbit},         {"transient", s.transient}};

  RunRecorder rec("simulate", resolve_out_dir(c));
  auxin::Trajectory traj;
  int code = kOk;
  try {
    traj = auxin::simulate(state0, row, prm, s.t_end, s.dt, s.stride);
  } catch (const auxin::BlowUpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    traj = e.partial;
    code = kBlowUp;
    rec.note("blow_up_time", e.time);
  }
  rec.write("trajectory.csv", csv([&](std::ostream& os) { auxin::write_trajectory_csv(os, traj); }));
  if (code == kOk && !s.state_out.empty()) {
    const fs::path target = fs::path(s.state_out).is_absolute() ? fs::path(s.state_out) : rec.dir() / s.state_out;
    json st = auxin::state_to_json(auxin::to_steady(traj.states.back()), prm.t, auxin::Param::t);
    auxin::write_json_file(target, st);
    if (target.parent_path() == rec.dir()) {
      rec.write(target.filename().string(), st.dump(2) + "\n");
    }
  }
  if (code == kOk && s.orbit) {
    const auxin::OrbitSummary orbit = auxin::analyze_orbit(traj, c.probe, s.transient);
    rec.write("orbit.json", auxin::orbit_to_json(orbit).dump(2) + "\n");
    const auto phase = auxin::phase_plane(traj, c.probe, row, prm);
    rec.write("phase.csv", csv([&](std::ostream& os) { auxin::write_phase_csv(os, phase); }));
    std::cout << "orbit: converged=" << (orbit.converged ? "true" : "false") << " period=" << orbit.period << "\n";
    if (c.svg) {
      auxin::svg::Series loop{"a_" + std::to_string(c.probe), {}, {}};
      for (const auto& p : phase) {
        loop.x.push_back(p.a);
        loop.y.push_back(p.dadt);
      }
      rec.write("phase.svg", auxin::svg::line_plot({loop}, "a_" + std::to_string(c.probe),
                                                   "da_" + std::to_string(c.probe) + "/dt", "phase plane"));
    }
  }
  if (c.svg && traj.size() > 0) {
    rec.write("spacetime.svg", auxin::svg::space_time(traj, "IAA concentration"));
    auxin::svg::Series profile{"t = " + std::to_string(traj.times.back()), {}, {}};
    for (int i = 1; i <= n; ++i) {
      profile.x.push_back(i);
      profile.y.push_back(traj.states.back().a()(i - 1));
    }
    rec.write("profile.svg", auxin::svg::line_plot({profile}, "cell", "a", "final IAA profile"));
  }
  const auto& last = traj.states.back();
  std::cout << "t = " << traj.times.back() << ", a range [" << last.a().minCoeff() << ", " << last.a().maxCoeff()
            << "], peaks " << auxin::count_peaks(last.a()) << "\n";
  rec.finish(config, code);
  return code;
}

struct StartPoint {
  Eigen::VectorXd u;
  double lambda;
};

StartPoint resolve_start(const CommonOptions& c, const ContinueOptions& o, const auxin::ParameterSet& prm,
                         auxin::Param param, double lo, double hi) {
  const std::string& from = o.from;
  if (from == "trivial") {
    const double lambda = std::isnan(o.start) ? lo + 0.01 * (hi - lo) : o.start;
    return {auxin::trivial_solution(auxin::CellRow(c.cells), prm.with(param, lambda)), lambda};
  }
  if (from.rfind("tile:", 0) == 0) {
    const auto last = from.rfind(':');
    if (last <= 5) throw ConfigError("--from tile needs tile:<file>:<copies>");
    const std::string file = from.substr(5, last - 5);
    int copies = 0;
    try {
      copies = std::stoi(from.substr(last + 1));
    } catch (const std::logic_error&) {
      throw ConfigError("--from tile copies must be an integer");
    }
    if (copies < 1) throw ConfigError("--from tile copies must be >= 1");
    const auxin::StateFile f = auxin::read_state_file(file);
    const double lambda = std::isnan(o.start) ? prm[param] : o.start;
    const auxin::ParameterSet at = prm.with(param, lambda);
    const auxin::DynamicState tiled = auxin::tile_pattern(f.u, copies, at);
    const auxin::CellRow row(tiled.cells());
    const auxin::Trajectory relaxed = auxin::simulate(tiled, row, at, o.relax_time, auxin::kDefaultTimeStep, 1000);
    return {auxin::to_steady(relaxed.states.back()), lambda};
  }
  const auxin::StateFile f = auxin::read_state_file(from);
  double lambda = prm[param];
  if (f.lambda && f.param && *f.param == auxin::param_name(param)) lambda = *f.lambda;
  if (!std::isnan(o.start)) lambda = o.start;
  return {f.u, lambda};
}

int cmd_continue(const CommonOptions& c, const ContinueOptions& o) {
  const auxin::ParameterSet prm = resolve_params(c);
  const auxin::Param param = auxin::param_from_name(o.param);
  const auto [lo, hi] = parse_window(o.window);
  if (o.switch_depth < 0) throw ConfigError("--switch-depth must be >= 0");

  auxin::ContinuationConfig cfg;
  cfg.ds0 = o.ds0;
  cfg.ds_max = o.ds_max;
  cfg.max_points = o.max_points;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  json config = common_json(c, prm);
  config["continue"] = {{"param", o.param},   {"window", {lo, hi}},      {"from", o.from},
                        {"ds0", o.ds0},       {"ds_max", o.ds_max},      {"max_points", o.max_points},
                        {"switch", o.do_switch}, {"switch_depth", o.switch_depth},
                        {"relax_time", o.relax_time}};
  if (!std::isnan(o.start)) config["continue"]["start"] = o.start;

  const StartPoint start = resolve_start(c, o, prm, param, lo, hi);
  const int n = static_cast<int>(start.u.size() / 2);
  check_probe(c, n);
  config["cells"] = n;
  const auxin::SteadyProblem problem(auxin::CellRow(n), prm, param);

  RunRecorder rec("continue", resolve_out_dir(c));
  json failures = json::array();
  std::vector<auxin::Branch> branches;
  try {
    const auxin::SolutionPoint first = auxin::make_point(problem, start.u, start.lambda, nullptr, cfg);
    branches.push_back(auxin::continue_branch(problem, first, lo, hi, cfg));
  } catch (const std::exception& e) {
    failures.push_back({{"stage", "start"}, {"error", e.what()}});
  }

  // Breadth-first switching at branch points, depth-limited.
  if (o.do_switch) {
    std::size_t level_begin = 0;
    for (int depth = 0; depth < o.switch_depth; ++depth) {
      const std::size_t level_end = branches.size();
      for (std::size_t b = level_begin; b < level_end; ++b) {
        for (const auto& ev : branches[b].events) {
          if (ev.kind != auxin::EventKind::BranchPoint || ev.unresolved) continue;
          try {
            const auto starters = auxin::switch_branch(problem, ev, cfg);
            branches.push_back(auxin::continue_branch(problem, starters.front(), lo, hi, cfg));
          } catch (const std::exception& e) {
            failures.push_back({{"stage", "switch"}, {"lambda", ev.lambda}, {"error", e.what()}});
          }
        }
      }
      level_begin = level_end;
    }
  }

  json events;
  events["branches"] = json::array();
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const std::string name = "branch_" + std::to_string(b) + ".csv";
    rec.write(name, csv([&](std::ostream& os) { auxin::write_branch_csv(os, branches[b], c.probe); }));
    json entry = auxin::events_to_json(branches[b]);
    entry["file"] = name;
    events["branches"].push_back(std::move(entry));
    std::cout << name << ": " << branches[b].points.size() << " points";
    for (const auto& ev : branches[b].events) {
      std::cout << (ev.unresolved ? " (" : " ") << auxin::event_name(ev.kind) << "@" << ev.lambda
                << (ev.unresolved ? ")" : "");
    }
    std::cout << "\n";
  }
  events["failures"] = failures;
  rec.write("events.json", events.dump(2) + "\n");
  if (c.svg && !branches.empty()) {
    rec.write("diagram.svg", auxin::svg::bifurcation_diagram(branches, c.probe, "bifurcation diagram"));
  }
  if (!failures.empty()) rec.note("failures", failures);
  const bool produced = !branches.empty() && branches.front().points.size() > 1;
  const int code = produced ? kOk : kContinuationFailure;
  if (!produced) std::cerr << "error: continuation produced no branch\n";
  rec.finish(config, code);
  return code;
}

int cmd_atlas(const CommonOptions& c, const AtlasOptions& a) {
  const auxin::ParameterSet prm = resolve_params(c);
  if (a.x.empty() || a.y.empty()) throw ConfigError("atlas needs --x and --y");
  auxin::GridSpec gx = auxin::parse_grid_spec(a.x);
  auxin::GridSpec gy = auxin::parse_grid_spec(a.y);
  gx.log_spacing = a.log_x;
  gy.log_spacing = a.log_y;
  gx.validate();
  gy.validate();
  if (gx.param == gy.param) throw ConfigError("--x and --y must name different parameters");
  const int jobs = a.jobs > 0 ? a.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  json config = common_json(c, prm);
  config["atlas"] = {{"x", a.x}, {"y", a.y}, {"log_x", a.log_x}, {"log_y", a.log_y}, {"boundary_types", a.boundary_types}};

  const auxin::NumericsConfig num;
  const auxin::StabilityGrid grid = auxin::stability_map(gx, gy, prm, c.cells, num, jobs);
  RunRecorder rec("atlas", resolve_out_dir(c));
  rec.write("grid.csv", csv([&](std::ostream& os) { auxin::write_grid_csv(os, grid); }));
  std::optional<auxin::BoundaryTypeCurve> curve;
  if (a.boundary_types) {
    curve = auxin::boundary_type_map(grid, num, jobs);
    rec.write("boundary.csv", csv([&](std::ostream& os) { auxin::write_boundary_csv(os, *curve); }));
  }
  if (c.svg) rec.write("atlas.svg", auxin::svg::stability_heatmap(grid, curve ? &*curve : nullptr));
  std::cout << "stable nodes: " << grid.stable_count() << " of " << grid.cells.size() << "\n";
  rec.finish(config, kOk);
  return kOk;
}

void add_common(CLI::App* app, CommonOptions& c) {
  app->add_option("--preset", c.preset, "Parameter preset (M1, M2, M3)")->capture_default_str();
  app->add_option("--params", c.params_file, "JSON parameter file applied over the preset");
  app->add_option("--set", c.overrides, "Override key=value, applied last")->take_all();
  app->add_option("--cells", c.cells, "Number of interior cells")->capture_default_str();
  app->add_option("--probe", c.probe, "Cell shown in diagrams (1-based)")->capture_default_str();
  app->add_option("--out", c.out_dir, "Output directory (default $AUXIN_OUT_DIR or .)");
  app->add_flag("--svg", c.svg, "Also write SVG figures");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bifurcation analysis of PIN1/IAA transport on a row of cells"};
  app.set_version_flag("--version", std::string("auxin ") + kVersion + " (format " + std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);

  CommonOptions common;
  SimulateOptions sim;
  ContinueOptions cont;
  AtlasOptions atlas;

  auto* trivial = app.add_subcommand("trivial", "Homogeneous steady state and its stability");
  add_common(trivial, common);

  auto* simulate = app.add_subcommand("simulate", "RK4 time integration");
  add_common(simulate, common);
  simulate->add_option("--t-end", sim.t_end)->capture_default_str();
  simulate->add_option("--dt", sim.dt)->capture_default_str();
  simulate->add_option("--stride", sim.stride, "Record every k-th step")->capture_default_str();
  simulate->add_option("--amplitude", sim.amplitude, "Initial sine perturbation amplitude")->capture_default_str();
  simulate->add_option("--frequency", sim.frequency)->capture_default_str();
  simulate->add_option("--from", sim.from, "Initial state file instead of the perturbed trivial state");
  simulate->add_option("--state-out", sim.state_out, "Write the final state as JSON");
  simulate->add_flag("--orbit", sim.orbit, "Analyse the trajectory as a periodic orbit");
  simulate->add_option("--transient", sim.transient, "Fraction discarded before orbit analysis")->capture_default_str();

  auto* cont_cmd = app.add_subcommand("continue", "Pseudo-arclength continuation of steady states");
  add_common(cont_cmd, common);
  cont_cmd->add_option("--param", cont.param, "Continuation parameter")->capture_default_str();
  cont_cmd->add_option("--window", cont.window, "lo:hi")->capture_default_str();
  cont_cmd->add_option("--from", cont.from, "trivial, a state file, or tile:<file>:<copies>")->capture_default_str();
  cont_cmd->add_option("--start", cont.start, "Starting parameter value");
  cont_cmd->add_option("--relax-time", cont.relax_time, "Simulation time for tiled seeds")->capture_default_str();
  cont_cmd->add_option("--ds0", cont.ds0)->capture_default_str();
  cont_cmd->add_option("--ds-max", cont.ds_max)->capture_default_str();
  cont_cmd->add_option("--max-points", cont.max_points, "Per direction")->capture_default_str();
  cont_cmd->add_flag("--switch", cont.do_switch, "Follow branches emerging from branch points");
  cont_cmd->add_option("--switch-depth", cont.switch_depth)->capture_default_str();

  auto* atlas_cmd = app.add_subcommand("atlas", "Stability map of the trivial solution");
  add_common(atlas_cmd, common);
  atlas_cmd->add_option("--x", atlas.x, "name:lo:hi:count");
  atlas_cmd->add_option("--y", atlas.y, "name:lo:hi:count");
  atlas_cmd->add_flag("--log-x", atlas.log_x);
  atlas_cmd->add_flag("--log-y", atlas.log_y);
  atlas_cmd->add_option("--jobs", atlas.jobs, "Worker threads (default: logical cores)");
  atlas_cmd->add_flag("--boundary-types", atlas.boundary_types, "Label the stability boundary BP/Hopf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*trivial) return cmd_trivial(common);
    if (*simulate) return cmd_simulate(common, sim);
    if (*cont_cmd) return cmd_continue(common, cont);
    if (*atlas_cmd) return cmd_atlas(common, atlas);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const auxin::ModelError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const auxin::IoError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const auxin::BlowUpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBlowUp;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kContinuationFailure;
  }
  return kOk;
}
