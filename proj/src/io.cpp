#include "auxin/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace auxin {

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(17) << v;
  return ss.str();
}

nlohmann::json to_array(const Eigen::VectorXd& v) {
  return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd from_array(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw IoError(std::string("'") + key + "' must be an array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw IoError(std::string("'") + key + "' must contain only numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

nlohmann::json params_to_json(const ParameterSet& prm) {
  nlohmann::json j = nlohmann::json::object();
  for (Param p : kAllParams) j[std::string(param_name(p))] = prm[p];
  return j;
}

ParameterSet params_from_json(const nlohmann::json& j, const ParameterSet& base) {
  if (!j.is_object()) throw IoError("parameter file must hold a JSON object");
  ParameterSet out = base;
  for (const auto& [key, value] : j.items()) {
    const Param p = param_from_name(key);
    if (!value.is_number()) throw IoError("parameter '" + key + "' must be a number");
    out[p] = value.get<double>();
  }
  out.validate();
  return out;
}

void apply_override(ParameterSet& prm, std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw InvalidParameters("override must look like key=value, got '" + std::string(assignment) + "'");
  }
  const Param p = param_from_name(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidParameters("override value '" + text + "' is not a number");
  prm[p] = v;
}

// ---------------------------------------------------------------------------

nlohmann::json state_to_json(const Eigen::VectorXd& u, std::optional<double> lambda, std::optional<Param> param) {
  const auto n = u.size() / 2;
  nlohmann::json j;
  j["n"] = n;
  j["p"] = to_array(u.head(n));
  j["a"] = to_array(u.tail(n));
  if (lambda) j["lambda"] = *lambda;
  if (param) j["param"] = std::string(param_name(*param));
  return j;
}

nlohmann::json state_to_json(const DynamicState& state) {
  nlohmann::json j;
  j["n"] = state.cells();
  j["p"] = to_array(state.p());
  j["a"] = to_array(state.a());
  return j;
}

StateFile state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw IoError("state file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "p" && key != "a" && key != "lambda" && key != "param") {
      throw IoError("unknown key '" + key + "' in state file");
    }
  }
  if (!j.contains("a") || !j.contains("p")) throw IoError("state file needs 'p' and 'a'");
  const Eigen::VectorXd a = from_array(j["a"], "a");
  Eigen::VectorXd p = from_array(j["p"], "p");
  const auto n = a.size();
  if (j.contains("n") && j["n"] != n) throw IoError("state file 'n' disagrees with the length of 'a'");
  if (p.size() == n + 2) {
    p = p.segment(1, n).eval();
  } else if (p.size() != n) {
    throw IoError("state file 'p' must have n or n+2 entries");
  }
  if (n < 2) throw IoError("state file needs at least 2 cells");
  StateFile out;
  out.n = static_cast<int>(n);
  out.u.resize(2 * n);
  out.u << p, a;
  if (j.contains("lambda")) out.lambda = j["lambda"].get<double>();
  if (j.contains("param")) out.param = j["param"].get<std::string>();
  return out;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

StateFile read_state_file(const std::filesystem::path& path) { return state_from_json(read_json_file(path)); }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  if (traj.size() == 0) return;
  const int n = traj.states.front().cells();
  os << "t";
  for (int k = 0; k <= n + 1; ++k) os << ",p_" << k;
  for (int i = 1; i <= n; ++i) os << ",a_" << i;
  os << "\n";
  for (std::size_t r = 0; r < traj.size(); ++r) {
    os << fmt(traj.times[r]);
    const Eigen::VectorXd& x = traj.states[r].packed();
    for (Eigen::Index k = 0; k < x.size(); ++k) os << "," << fmt(x(k));
    os << "\n";
  }
}

void write_phase_csv(std::ostream& os, const std::vector<PhaseSample>& samples) {
  os << "t,a_probe,da_probe_dt\n";
  for (const auto& s : samples) os << fmt(s.t) << "," << fmt(s.a) << "," << fmt(s.dadt) << "\n";
}

void write_branch_csv(std::ostream& os, const Branch& branch, int probe_cell) {
  if (probe_cell < 1 || probe_cell > branch.row.n) throw IoError("probe cell out of range");
  os << "index,lambda,a_probe,stable,unstable_count,dlambda_ds\n";
  for (std::size_t k = 0; k < branch.points.size(); ++k) {
    const auto& pt = branch.points[k];
    os << k << "," << fmt(pt.lambda) << "," << fmt(pt.a_at(probe_cell)) << "," << (pt.stability.stable() ? 1 : 0)
       << "," << pt.stability.unstable_count << "," << fmt(pt.test.dlambda_ds) << "\n";
  }
}

void write_grid_csv(std::ostream& os, const StabilityGrid& grid) {
  os << param_name(grid.y.param) << "\\" << param_name(grid.x.param);
  for (int i = 0; i < grid.x.count; ++i) os << "," << fmt(grid.x.value(i));
  os << "\n";
  for (int j = 0; j < grid.y.count; ++j) {
    os << fmt(grid.y.value(j));
    for (int i = 0; i < grid.x.count; ++i) os << "," << static_cast<int>(grid.at(i, j));
    os << "\n";
  }
}

void write_boundary_csv(std::ostream& os, const BoundaryTypeCurve& curve) {
  os << "x,y,kind\n";
  for (const auto& s : curve.samples) {
    os << fmt(s.x) << "," << fmt(s.y) << ",";
    if (s.unresolved) {
      os << "unresolved";
    } else {
      os << (s.kind == EventKind::Hopf ? "Hopf" : "BranchPoint");
    }
    os << "\n";
  }
}

// ---------------------------------------------------------------------------

nlohmann::json event_to_json(const BifurcationEvent& ev) {
  nlohmann::json j;
  j["kind"] = std::string(event_name(ev.kind));
  j["unresolved"] = ev.unresolved;
  j["lambda"] = ev.lambda;
  j["beta"] = ev.beta ? nlohmann::json(*ev.beta) : nlohmann::json(nullptr);
  j["residual_norm"] = ev.residual_norm;
  j["augmented_deficiency"] = ev.augmented_deficiency;
  j["dlambda_ds"] = ev.dlambda_ds;
  j["bracket_width"] = ev.bracket_width;
  j["after_index"] = ev.after_index;
  if (!ev.note.empty()) j["note"] = ev.note;
  if (ev.u.size() > 0) j["state"] = state_to_json(ev.u);
  return j;
}

nlohmann::json events_to_json(const Branch& branch) {
  nlohmann::json j;
  j["param"] = std::string(param_name(branch.param));
  j["window"] = {branch.lambda_lo, branch.lambda_hi};
  j["cells"] = branch.row.n;
  j["points"] = branch.points.size();
  j["terminations"] = branch.terminations;
  j["events"] = nlohmann::json::array();
  for (const auto& ev : branch.events) j["events"].push_back(event_to_json(ev));
  return j;
}

nlohmann::json orbit_to_json(const OrbitSummary& orbit) {
  nlohmann::json j;
  j["converged"] = orbit.converged;
  j["period"] = orbit.period;
  j["period_spread"] = orbit.period_spread;
  j["section_level"] = orbit.section_level;
  j["probe_cell"] = orbit.probe_cell;
  j["a_min"] = to_array(orbit.a_min);
  j["a_max"] = to_array(orbit.a_max);
  j["poincare_points"] = nlohmann::json::array();
  for (const auto& pp : orbit.poincare_points) {
    j["poincare_points"].push_back({{"time", pp.time}, {"a", to_array(pp.a)}});
  }
  if (!orbit.diagnostics.empty()) j["diagnostics"] = orbit.diagnostics;
  return j;
}

}  // namespace auxin
