#pragma once

#include "auxin/continuation.hpp"
#include "auxin/model.hpp"
#include "auxin/numerics.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace auxin {

struct GridSpec {
  Param param = Param::t;
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
  bool log_spacing = false;

  double value(int i) const;
  void validate() const;
};

// "name:lo:hi:count", e.g. "rho_iaa:0.01:3:60".
GridSpec parse_grid_spec(std::string_view text);

enum class CellState : std::uint8_t { Unstable = 0, Stable = 1, Invalid = 9 };

/// Stability of the trivial solution on a count_x by count_y grid.
struct StabilityGrid {
  GridSpec x;
  GridSpec y;
  ParameterSet base;
  int n = 20;
  // Row-major in y: cells[j * x.count + i] is the node (x_i, y_j).
  std::vector<CellState> cells;
  std::vector<int> unstable_counts;

  CellState at(int i, int j) const { return cells[static_cast<std::size_t>(j) * x.count + i]; }
  ParameterSet params_at(int i, int j) const;
  int stable_count() const;
};

struct BoundarySample {
  double x = 0.0;
  double y = 0.0;
  EventKind kind = EventKind::BranchPoint;
  bool unresolved = false;
};

struct BoundaryTypeCurve {
  std::vector<BoundarySample> samples;
};

struct NodeStability {
  CellState state = CellState::Invalid;
  int unstable_count = 0;
  bool leading_pair_complex = false;
};

// Stability of the trivial solution at one parameter set; Invalid when the
// closed form or the Jacobian cannot be evaluated.
NodeStability trivial_stability(const ParameterSet& prm, int n, const NumericsConfig& cfg = {});

/// Grid scan with `workers` threads (1 = serial). The result does not
/// depend on the worker count.
StabilityGrid stability_map(const GridSpec& x, const GridSpec& y, const ParameterSet& base, int n,
                            const NumericsConfig& cfg = {}, int workers = 1);

/// Refines every stable/unstable transition between neighbouring nodes to
/// 1e-3 relative width and labels it by how the spectrum crosses.
BoundaryTypeCurve boundary_type_map(const StabilityGrid& grid, const NumericsConfig& cfg = {}, int workers = 1);

BoundaryTypeCurve boundary_type_map(const GridSpec& x, const GridSpec& y, const ParameterSet& base, int n,
                                    const NumericsConfig& cfg = {}, int workers = 1);

}  // namespace auxin
