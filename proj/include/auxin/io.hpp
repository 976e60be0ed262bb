#pragma once

#include "auxin/atlas.hpp"
#include "auxin/continuation.hpp"
#include "auxin/integrate.hpp"
#include "auxin/model.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace auxin {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parameters

nlohmann::json params_to_json(const ParameterSet& prm);
// Starts from `base` and overrides the keys present; unknown keys throw.
ParameterSet params_from_json(const nlohmann::json& j, const ParameterSet& base = {});
// "key=value"
void apply_override(ParameterSet& prm, std::string_view assignment);

// ---------------------------------------------------------------------------
// State files: {"n": n, "p": [...], "a": [...], "lambda"?, "param"?}
// "p" holds either the n interior values or the n+2 values with ghosts.

struct StateFile {
  int n = 0;
  Eigen::VectorXd u;  // steady layout (p_1..p_n, a_1..a_n)
  std::optional<double> lambda;
  std::optional<std::string> param;
};

nlohmann::json state_to_json(const Eigen::VectorXd& u, std::optional<double> lambda = std::nullopt,
                             std::optional<Param> param = std::nullopt);
nlohmann::json state_to_json(const DynamicState& state);
StateFile state_from_json(const nlohmann::json& j);
StateFile read_state_file(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// ---------------------------------------------------------------------------
// CSV

// t,p_0..p_{n+1},a_1..a_n
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
// t,a_probe,da_probe_dt
void write_phase_csv(std::ostream& os, const std::vector<PhaseSample>& samples);
// index,lambda,a_probe,stable,unstable_count,dlambda_ds
void write_branch_csv(std::ostream& os, const Branch& branch, int probe_cell);
// Header row of x values, first column y values, cells 0/1/9.
void write_grid_csv(std::ostream& os, const StabilityGrid& grid);
// x,y,kind
void write_boundary_csv(std::ostream& os, const BoundaryTypeCurve& curve);

// ---------------------------------------------------------------------------
// JSON summaries

nlohmann::json event_to_json(const BifurcationEvent& ev);
nlohmann::json events_to_json(const Branch& branch);
nlohmann::json orbit_to_json(const OrbitSummary& orbit);

}  // namespace auxin
