#include "auxin/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace auxin {

double GridSpec::value(int i) const {
  if (i == count - 1) return hi;
  const double f = static_cast<double>(i) / (count - 1);
  if (log_spacing) return lo * std::pow(hi / lo, f);
  return lo + f * (hi - lo);
}

void GridSpec::validate() const {
  if (!(lo < hi)) throw std::invalid_argument("grid axis " + std::string(param_name(param)) + " needs lo < hi");
  if (count < 2) throw std::invalid_argument("grid axis needs at least 2 samples");
  if (log_spacing && !(lo > 0.0)) throw std::invalid_argument("log-spaced grid axis needs lo > 0");
}

GridSpec parse_grid_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) throw std::invalid_argument("grid axis must be name:lo:hi:count, got '" + std::string(text) + "'");
  GridSpec spec;
  spec.param = param_from_name(parts[0]);
  auto number = [&](std::string_view s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + std::string(s) + "' in grid axis");
    }
  };
  spec.lo = number(parts[1]);
  spec.hi = number(parts[2]);
  const double count = number(parts[3]);
  if (count != std::floor(count)) throw std::invalid_argument("grid count must be an integer");
  spec.count = static_cast<int>(count);
  spec.validate();
  return spec;
}

ParameterSet StabilityGrid::params_at(int i, int j) const {
  return base.with(x.param, x.value(i)).with(y.param, y.value(j));
}

int StabilityGrid::stable_count() const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), CellState::Stable));
}

NodeStability trivial_stability(const ParameterSet& prm, int n, const NumericsConfig& cfg) {
  NodeStability out;
  try {
    const CellRow row(n);
    const Eigen::VectorXd u = trivial_solution(row, prm);
    if (!u.allFinite()) return out;
    const SteadyProblem problem(row, prm, Param::t);
    const StabilityTag tag = classify_stability(problem.spectrum(u, prm.t, cfg), cfg);
    out.state = tag.stable() ? CellState::Stable : CellState::Unstable;
    out.unstable_count = tag.unstable_count;
    out.leading_pair_complex = tag.leading_pair_complex;
  } catch (const std::exception&) {
    out.state = CellState::Invalid;
  }
  return out;
}

namespace {

void parallel_for(int count, int workers, const std::function<void(int)>& body) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) body(k);
    });
  }
  for (auto& t : pool) t.join();
}

struct Transition {
  int i0, j0, i1, j1;
};

BoundarySample refine(const StabilityGrid& grid, const Transition& tr, const NumericsConfig& cfg) {
  // Along x when the nodes share a row, along y otherwise.
  const bool along_x = tr.j0 == tr.j1;
  const GridSpec& axis = along_x ? grid.x : grid.y;
  const ParameterSet fixed = along_x ? grid.base.with(grid.y.param, grid.y.value(tr.j0))
                                     : grid.base.with(grid.x.param, grid.x.value(tr.i0));
  double lo = along_x ? axis.value(tr.i0) : axis.value(tr.j0);
  double hi = along_x ? axis.value(tr.i1) : axis.value(tr.j1);
  NodeStability s_lo = trivial_stability(fixed.with(axis.param, lo), grid.n, cfg);
  NodeStability s_hi = trivial_stability(fixed.with(axis.param, hi), grid.n, cfg);
  bool unresolved = false;
  while (std::abs(hi - lo) > 1e-3 * std::max(std::abs(lo), std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    const NodeStability s_mid = trivial_stability(fixed.with(axis.param, mid), grid.n, cfg);
    if (s_mid.state == CellState::Invalid) {
      unresolved = true;
      break;
    }
    if (s_mid.state == s_lo.state) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
      s_hi = s_mid;
    }
  }
  const NodeStability& unstable = s_lo.state == CellState::Unstable ? s_lo : s_hi;
  BoundarySample sample;
  const double where = 0.5 * (lo + hi);
  sample.x = along_x ? where : grid.x.value(tr.i0);
  sample.y = along_x ? grid.y.value(tr.j0) : where;
  if (unstable.unstable_count == 1 && !unstable.leading_pair_complex) {
    sample.kind = EventKind::BranchPoint;
  } else if (unstable.unstable_count == 2 && unstable.leading_pair_complex) {
    sample.kind = EventKind::Hopf;
  } else {
    sample.kind = unstable.leading_pair_complex ? EventKind::Hopf : EventKind::BranchPoint;
    unresolved = true;
  }
  sample.unresolved = unresolved;
  return sample;
}

}  // namespace

StabilityGrid stability_map(const GridSpec& x, const GridSpec& y, const ParameterSet& base, int n,
                            const NumericsConfig& cfg, int workers) {
  x.validate();
  y.validate();
  if (x.param == y.param) throw std::invalid_argument("grid axes must use distinct parameters");
  base.validate();
  CellRow(n).validate();
  StabilityGrid grid;
  grid.x = x;
  grid.y = y;
  grid.base = base;
  grid.n = n;
  const int total = x.count * y.count;
  grid.cells.assign(total, CellState::Invalid);
  grid.unstable_counts.assign(total, 0);
  parallel_for(total, workers, [&](int k) {
    const NodeStability s = trivial_stability(grid.params_at(k % x.count, k / x.count), n, cfg);
    grid.cells[k] = s.state;
    grid.unstable_counts[k] = s.unstable_count;
  });
  return grid;
}

BoundaryTypeCurve boundary_type_map(const StabilityGrid& grid, const NumericsConfig& cfg, int workers) {
  std::vector<Transition> transitions;
  auto differs = [&](int i0, int j0, int i1, int j1) {
    const CellState a = grid.at(i0, j0);
    const CellState b = grid.at(i1, j1);
    return a != CellState::Invalid && b != CellState::Invalid && a != b;
  };
  for (int j = 0; j < grid.y.count; ++j) {
    for (int i = 0; i < grid.x.count; ++i) {
      if (i + 1 < grid.x.count && differs(i, j, i + 1, j)) transitions.push_back({i, j, i + 1, j});
      if (j + 1 < grid.y.count && differs(i, j, i, j + 1)) transitions.push_back({i, j, i, j + 1});
    }
  }
  BoundaryTypeCurve curve;
  curve.samples.resize(transitions.size());
  parallel_for(static_cast<int>(transitions.size()), workers,
               [&](int k) { curve.samples[k] = refine(grid, transitions[k], cfg); });
  return curve;
}

BoundaryTypeCurve boundary_type_map(const GridSpec& x, const GridSpec& y, const ParameterSet& base, int n,
                                    const NumericsConfig& cfg, int workers) {
  return boundary_type_map(stability_map(x, y, base, n, cfg, workers), cfg, workers);
}

}  // namespace auxin
