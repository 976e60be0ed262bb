#include "auxin/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace auxin {

BlowUpError::BlowUpError(double t, Trajectory p)
    : std::runtime_error("integration blew up at t = " + std::to_string(t)), time(t), partial(std::move(p)) {}

namespace {

bool bounded(const Eigen::VectorXd& x) {
  return x.allFinite() && x.lpNorm<Eigen::Infinity>() <= kBlowUpBound;
}

}  // namespace

DynamicState rk4_step(const DynamicState& state, double dt, const CellRow& row, const ParameterSet& prm,
                      double time) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  if (state.cells() != row.n) throw ModelError("state and cell row disagree on n");
  auto rhs = [&prm](const Eigen::VectorXd& x) { return dynamic_rhs<double>(x, prm); };
  Eigen::VectorXd next;
  try {
    next = rk4_step(state.packed(), dt, rhs);
  } catch (const ModelError&) {
    throw BlowUpError(time + dt, Trajectory{});
  }
  if (!bounded(next)) throw BlowUpError(time + dt, Trajectory{});
  return DynamicState(row.n, std::move(next));
}

DynamicState perturbed_trivial(const CellRow& row, const ParameterSet& prm, double amplitude, int frequency) {
  if (amplitude < 0.0) throw std::invalid_argument("perturbation amplitude must be >= 0");
  DynamicState s = lift_to_dynamic(trivial_solution(row, prm), prm);
  if (amplitude == 0.0) return s;
  for (int i = 1; i <= row.n; ++i) {
    s.a()(i - 1) += amplitude * std::sin(frequency * (i + 2) * std::numbers::pi / (row.n + 4));
  }
  return s;
}

Trajectory simulate(const DynamicState& state0, const CellRow& row, const ParameterSet& prm, double t_end,
                    double dt, int sample_stride) {
  if (!(t_end > 0.0) || !(dt > 0.0)) throw std::invalid_argument("t_end and dt must be positive");
  if (sample_stride < 1) throw std::invalid_argument("sample stride must be >= 1");
  const auto steps = static_cast<long>(std::ceil(t_end / dt - 1e-9));

  Trajectory traj;
  traj.sample_stride = sample_stride;
  traj.times.push_back(0.0);
  traj.states.push_back(state0);

  auto rhs = [&prm](const Eigen::VectorXd& x) { return dynamic_rhs<double>(x, prm); };
  Eigen::VectorXd x = state0.packed();
  for (long k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    try {
      x = rk4_step(x, dt, rhs);
    } catch (const ModelError&) {
      // A stage left the model domain, e.g. an overflowing weight.
      throw BlowUpError(t, std::move(traj));
    }
    if (!bounded(x)) throw BlowUpError(t, std::move(traj));
    if (k % sample_stride == 0 || k == steps) {
      traj.times.push_back(t);
      traj.states.emplace_back(row.n, x);
    }
  }
  return traj;
}

OrbitSummary analyze_orbit(const Trajectory& traj, int probe_cell, double transient_fraction) {
  OrbitSummary out;
  out.probe_cell = probe_cell;
  if (traj.size() < 2) {
    out.diagnostics = "trajectory too short";
    return out;
  }
  const int n = traj.states.front().cells();
  if (probe_cell < 1 || probe_cell > n) throw std::invalid_argument("probe cell out of range");
  const auto first = static_cast<std::size_t>(transient_fraction * static_cast<double>(traj.size()));
  if (first + 2 > traj.size()) {
    out.diagnostics = "transient fraction leaves fewer than two samples";
    return out;
  }

  out.a_min = traj.states[first].a();
  out.a_max = traj.states[first].a();
  double mean = 0.0;
  for (std::size_t k = first; k < traj.size(); ++k) {
    const auto a = traj.states[k].a();
    out.a_min = out.a_min.cwiseMin(a);
    out.a_max = out.a_max.cwiseMax(a);
    mean += a(probe_cell - 1);
  }
  mean /= static_cast<double>(traj.size() - first);
  out.section_level = mean;

  for (std::size_t k = first + 1; k < traj.size(); ++k) {
    const Eigen::VectorXd a0 = traj.states[k - 1].a();
    const Eigen::VectorXd a1 = traj.states[k].a();
    const double y0 = a0(probe_cell - 1) - mean;
    const double y1 = a1(probe_cell - 1) - mean;
    if (y0 < 0.0 && y1 >= 0.0) {
      const double w = y0 / (y0 - y1);
      PoincarePoint pt;
      pt.time = traj.times[k - 1] + w * (traj.times[k] - traj.times[k - 1]);
      pt.a = a0 + w * (a1 - a0);
      out.poincare_points.push_back(std::move(pt));
    }
  }

  if (out.poincare_points.size() < 3) {
    out.diagnostics = "only " + std::to_string(out.poincare_points.size()) +
                      " section crossings: steady state or t_end too short (envelope width " +
                      std::to_string((out.a_max - out.a_min).maxCoeff()) + ")";
    return out;
  }
  std::vector<double> gaps;
  for (std::size_t k = 1; k < out.poincare_points.size(); ++k) {
    gaps.push_back(out.poincare_points[k].time - out.poincare_points[k - 1].time);
  }
  const double avg = std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
  double var = 0.0;
  for (double g : gaps) var += (g - avg) * (g - avg);
  out.period = avg;
  out.period_spread = std::sqrt(var / static_cast<double>(gaps.size()));
  out.converged = avg > 0.0 && out.period_spread <= 0.01 * avg;
  if (!out.converged) out.diagnostics = "crossing gaps vary by more than 1% of their mean";
  return out;
}

std::vector<PhaseSample> phase_plane(const Trajectory& traj, int probe_cell, const CellRow& row,
                                     const ParameterSet& prm) {
  if (probe_cell < 1 || probe_cell > row.n) throw std::invalid_argument("probe cell out of range");
  std::vector<PhaseSample> out;
  out.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const DynamicState rate = dynamic_rhs(traj.states[k], row, prm);
    out.push_back({traj.times[k], traj.states[k].a()(probe_cell - 1), rate.a()(probe_cell - 1)});
  }
  return out;
}

int count_peaks(const Eigen::VectorXd& a) {
  const Eigen::Index n = a.size();
  const double mean = a.mean();
  auto same = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(std::abs(x), std::abs(y)); };
  int peaks = 0;
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i;
    while (j + 1 < n && same(a(j + 1), a(i))) ++j;
    const bool rises = i == 0 || a(i) > a(i - 1);
    const bool falls = j == n - 1 || a(j) > a(j + 1);
    if (rises && falls && a(i) > mean) ++peaks;
    i = j + 1;
  }
  return peaks;
}

DynamicState tile_pattern(const Eigen::VectorXd& pattern, int copies, const ParameterSet& prm) {
  if (copies < 1) throw std::invalid_argument("copies must be >= 1");
  const auto n = pattern.size() / 2;
  Eigen::VectorXd tiled(2 * n * copies);
  for (int c = 0; c < copies; ++c) {
    tiled.segment(c * n, n) = pattern.head(n);
    tiled.segment(n * copies + c * n, n) = pattern.tail(n);
  }
  return lift_to_dynamic(tiled, prm);
}

}  // namespace auxin
