// Acceptance suite: one PASS/FAIL line per criterion.
//
// Usage: auxin_acceptance [criterion ...]   (default: all of 1..9)

#include "auxin/atlas.hpp"
#include "auxin/continuation.hpp"
#include "auxin/integrate.hpp"
#include "auxin/model.hpp"
#include "auxin/numerics.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace auxin;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const ContinuationConfig& config() {
  static const ContinuationConfig cfg;
  return cfg;
}

std::optional<BifurcationEvent> first_event(const Branch& b, EventKind kind) {
  std::optional<BifurcationEvent> best;
  for (const auto& e : b.events) {
    if (e.kind != kind || e.unresolved) continue;
    if (!best || e.lambda < best->lambda) best = e;
  }
  return best;
}

std::optional<BifurcationEvent> nearest_event(const Branch& b, EventKind kind, double target) {
  std::optional<BifurcationEvent> best;
  for (const auto& e : b.events) {
    if (e.kind != kind || e.unresolved) continue;
    if (!best || std::abs(e.lambda - target) < std::abs(best->lambda - target)) best = e;
  }
  return best;
}

Branch trivial_branch(const SteadyProblem& problem, double lo, double hi) {
  return continue_branch(problem, trivial_point(problem, lo + 0.01, config()), lo, hi, config());
}

// Newton-refined states of `branch` where lambda crosses `target`.
std::vector<Eigen::VectorXd> crossings(const SteadyProblem& problem, const Branch& branch, double target) {
  std::vector<Eigen::VectorXd> out;
  for (std::size_t k = 0; k + 1 < branch.points.size(); ++k) {
    const auto& A = branch.points[k];
    const auto& B = branch.points[k + 1];
    if ((A.lambda - target) * (B.lambda - target) > 0 || A.lambda == B.lambda) continue;
    const double f = (target - A.lambda) / (B.lambda - A.lambda);
    try {
      out.push_back(problem.solve(A.u + f * (B.u - A.u), target, config().numerics).u);
    } catch (const std::exception&) {
    }
  }
  return out;
}

double max_residual(const SteadyProblem& problem, const Branch& branch) {
  double worst = 0.0;
  for (const auto& pt : branch.points) {
    worst = std::max(worst, problem.residual(pt.u, pt.lambda).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

// Shared fixtures, built on first use.

struct M1Fixture {
  SteadyProblem problem{CellRow(20), preset("M1"), Param::t};
  Branch trivial;
  std::optional<BifurcationEvent> bp;
  std::optional<Branch> switched;
  double seconds = 0.0;
};

M1Fixture& m1() {
  static M1Fixture fx = [] {
    M1Fixture f;
    const auto t0 = std::chrono::steady_clock::now();
    f.trivial = trivial_branch(f.problem, 0.1, 6.0);
    f.bp = first_event(f.trivial, EventKind::BranchPoint);
    if (f.bp) {
      const auto starters = switch_branch(f.problem, *f.bp, config());
      f.switched = continue_branch(f.problem, starters.front(), 0.1, 6.0, config());
    }
    f.seconds = seconds_since(t0);
    return f;
  }();
  return fx;
}

struct M2Fixture {
  SteadyProblem problem{CellRow(20), preset("M2"), Param::t};
  Branch trivial;
  std::optional<Branch> pattern;
  double seconds = 0.0;
};

M2Fixture& m2() {
  static M2Fixture fx = [] {
    M2Fixture f;
    const auto t0 = std::chrono::steady_clock::now();
    f.trivial = trivial_branch(f.problem, 0.1, 8.0);
    if (const auto bp = nearest_event(f.trivial, EventKind::BranchPoint, 5.4047)) {
      const auto starters = switch_branch(f.problem, *bp, config());
      f.pattern = continue_branch(f.problem, starters.front(), 0.1, 8.0, config());
    }
    f.seconds = seconds_since(t0);
    return f;
  }();
  return fx;
}

// Settled pattern: M1, n = 20, T = 3.5, integrated to t = 200.
Eigen::VectorXd settled_pattern() {
  const CellRow row(20);
  const ParameterSet prm = preset("M1").with(Param::t, 3.5);
  const Trajectory traj = simulate(perturbed_trivial(row, prm), row, prm, 200.0, kDefaultTimeStep, 1000);
  return to_steady(traj.states.back());
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& o) {
  M1Fixture& f = m1();
  o.require(f.bp.has_value(), "trivial-branch BranchPoint found");
  if (f.bp) {
    o.detail << "BP at T = " << f.bp->lambda;
    o.require(std::abs(f.bp->lambda - 0.8983) <= 0.01, "T = 0.8983 +- 0.01");
  }
  o.detail << ", " << f.seconds << " s (incl. switching)";
  o.require(f.seconds <= 60.0, "runtime <= 1 min");
}

void criterion2(Outcome& o) {
  M2Fixture& f = m2();
  const auto hopf = nearest_event(f.trivial, EventKind::Hopf, 3.3113);
  const auto bp = nearest_event(f.trivial, EventKind::BranchPoint, 5.4047);
  o.require(hopf.has_value() && std::abs(hopf->lambda - 3.3113) <= 0.02, "Hopf at T = 3.3113 +- 0.02");
  o.require(bp.has_value() && std::abs(bp->lambda - 5.4047) <= 0.05, "BP at T = 5.4047 +- 0.05");
  if (hopf) o.detail << "Hopf at T = " << hopf->lambda;
  if (bp) o.detail << ", BP at T = " << bp->lambda;
  bool gains = false;
  if (f.pattern) {
    for (const auto& e : f.pattern->events) {
      if (e.kind != EventKind::Hopf || e.unresolved || e.after_index + 1 >= f.pattern->points.size()) continue;
      const auto& before = f.pattern->points[e.after_index].stability;
      const auto& after = f.pattern->points[e.after_index + 1].stability;
      if (before.stable() != after.stable()) {
        gains = true;
        o.detail << ", stability-gaining Hopf on pattern branch at T = " << e.lambda;
        break;
      }
    }
  }
  o.require(gains, "stability-gaining Hopf on the pattern branch");
  o.detail << ", " << f.seconds << " s";
  o.require(f.seconds <= 120.0, "runtime <= 2 min");
}

void criterion3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const SteadyProblem problem(CellRow(20), preset("M3"), Param::t);
  const Branch b = trivial_branch(problem, 15.0, 30.0);
  const auto hopf = first_event(b, EventKind::Hopf);
  o.require(hopf.has_value() && std::abs(hopf->lambda - 22.7384) <= 0.2, "Hopf at T = 22.7384 +- 0.2");
  if (hopf) o.detail << "Hopf at T = " << hopf->lambda;

  const CellRow row(20);
  const ParameterSet prm = preset("M3").with(Param::t, 23.5);
  const Trajectory traj = simulate(perturbed_trivial(row, prm), row, prm, 600.0, kDefaultTimeStep, 10);
  const OrbitSummary orbit = analyze_orbit(traj, 6, 0.5);
  o.require(orbit.converged, "orbit converged");
  o.detail << ", period " << orbit.period;

  // Envelope: the hottest cell alternates between the middle and the ends.
  std::string pattern;
  for (std::size_t k = traj.size() / 2; k < traj.size(); ++k) {
    Eigen::Index cell = 0;
    traj.states[k].a().maxCoeff(&cell);
    const int i = static_cast<int>(cell) + 1;
    const char c = (i >= 9 && i <= 12) ? 'M' : (i <= 2 || i >= 19) ? 'B' : 0;
    if (c != 0 && (pattern.empty() || pattern.back() != c)) pattern += c;
  }
  const auto switches = pattern.empty() ? 0 : pattern.size() - 1;
  o.detail << ", mid/boundary peak alternations " << switches;
  o.require(switches >= 4, "envelope alternates mid-domain and boundary peaks");

  // Phase loop: successive returns to the section coincide.
  double range = orbit.a_max.maxCoeff() - orbit.a_min.minCoeff();
  double gap = std::numeric_limits<double>::infinity();
  if (orbit.poincare_points.size() >= 2) {
    gap = 0.0;
    for (std::size_t k = 1; k < orbit.poincare_points.size(); ++k) {
      gap = std::max(gap, (orbit.poincare_points[k].a - orbit.poincare_points[k - 1].a).lpNorm<Eigen::Infinity>());
    }
  }
  o.detail << ", loop closure " << 100.0 * gap / range << " %";
  o.require(gap <= 0.01 * range, "phase loop closed within 1%");
  const double secs = seconds_since(t0);
  o.detail << ", " << secs << " s";
  o.require(secs <= 180.0, "runtime <= 3 min");
}

void criterion4(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 100;
  const SteadyProblem problem(CellRow(n), preset("M1"), Param::t);
  const Branch trivial = trivial_branch(problem, 0.1, 6.0);
  const auto bp = first_event(trivial, EventKind::BranchPoint);
  o.require(bp.has_value() && std::abs(bp->lambda - 0.8504) <= 0.01, "trivial BP at T = 0.8504 +- 0.01");
  if (!bp) return;
  o.detail << "BP at T = " << bp->lambda;

  const Branch switched = continue_branch(problem, switch_branch(problem, *bp, config()).front(), 0.1, 6.0, config());
  bool eight = false;
  for (const auto& pt : switched.points) eight = eight || (pt.stability.stable() && count_peaks(pt.u.tail(n)) == 8);
  o.require(eight, "switched branch holds a stable 8-peak pattern");
  o.detail << ", switched branch stable 8-peak: " << (eight ? "yes" : "no");

  const ParameterSet at = preset("M1").with(Param::t, 3.5);
  const DynamicState seed = tile_pattern(settled_pattern(), 5, at);
  const Trajectory relaxed = simulate(seed, CellRow(n), at, 200.0, kDefaultTimeStep, 1000);
  const SolutionPoint start = make_point(problem, to_steady(relaxed.states.back()), 3.5, nullptr, config());
  const Branch tiled = continue_branch(problem, start, 0.1, 6.0, config());
  int nine = 0;
  double to_trivial = std::numeric_limits<double>::infinity();
  for (const auto& pt : tiled.points) {
    if (pt.stability.stable() && count_peaks(pt.u.tail(n)) == 9) ++nine;
    to_trivial = std::min(to_trivial,
                          (pt.u - trivial_solution(CellRow(n), problem.params_at(pt.lambda))).lpNorm<Eigen::Infinity>());
  }
  double to_switched = std::numeric_limits<double>::infinity();
  for (const auto& u : crossings(problem, switched, 3.5)) {
    to_switched = std::min(to_switched, (u - start.u).lpNorm<Eigen::Infinity>());
  }
  o.detail << ", tiled branch " << tiled.points.size() << " points with " << nine << " stable 9-peak states";
  o.require(nine > 0, "tiled branch holds stable 9-peak patterns");
  o.require(to_trivial > 1e-3 && to_switched > 1e-3, "tiled branch disconnected from trivial and switched branches");
  const double secs = seconds_since(t0);
  o.detail << ", " << secs << " s";
  o.require(secs <= 600.0, "runtime <= 10 min");
}

void criterion5(Outcome& o) {
  const CellRow row(20);
  const ParameterSet base = preset("M1").with(Param::t, 1.5);
  const SteadyProblem problem(row, base, Param::omega);
  const Branch trivial = continue_branch(problem, trivial_point(problem, 0.5, config()), 0.0, 1.0, config());
  // First loss of stability with increasing omega.
  std::optional<double> loss;
  for (const auto& e : trivial.events) {
    if (e.unresolved || e.kind == EventKind::LimitPoint || e.after_index + 1 >= trivial.points.size()) continue;
    const bool changes = trivial.points[e.after_index].stability.stable() !=
                         trivial.points[e.after_index + 1].stability.stable();
    if (changes && (!loss || e.lambda < *loss)) loss = e.lambda;
  }
  o.require(loss.has_value() && std::abs(*loss - 0.2371) <= 0.01, "trivial branch loses stability at 0.2371 +- 0.01");
  if (loss) o.detail << "loss of stability at omega = " << *loss;

  const Trajectory traj = simulate(perturbed_trivial(row, base), row, base, 200.0, kDefaultTimeStep, 1000);
  const SolutionPoint start = make_point(problem, to_steady(traj.states.back()), 1.0, nullptr, config());
  const Branch pattern = continue_in_omega(row, base, start, config());
  const auto lp = nearest_event(pattern, EventKind::LimitPoint, 0.1424);
  o.require(lp.has_value() && std::abs(lp->lambda - 0.1424) <= 0.01, "pattern turning point at 0.1424 +- 0.01");
  if (lp) o.detail << ", pattern turning point at omega = " << lp->lambda;
}

void criterion6(Outcome& o) {
  std::vector<double> bps;
  for (double tau : {0.5, 1.0, 1.5, 2.0}) {
    const SteadyProblem problem(CellRow(20), preset("M1").with(Param::tau, tau), Param::t);
    const auto bp = first_event(trivial_branch(problem, 0.1, 6.0), EventKind::BranchPoint);
    o.require(bp.has_value(), "BP found for every tau");
    if (!bp) return;
    bps.push_back(bp->lambda);
  }
  o.detail << "first BPs";
  for (double v : bps) o.detail << " " << v;
  o.require(bps[0] < bps[1] && bps[1] < bps[2] && bps[2] < bps[3], "strictly increasing in tau");
}

void criterion7(Outcome& o) {
  M1Fixture& f = m1();
  o.require(f.switched.has_value(), "switched branch exists");
  if (!f.switched) return;
  const Eigen::VectorXd ref = f.problem.solve(settled_pattern(), 3.5, config().numerics).u;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& u : crossings(f.problem, *f.switched, 3.5)) best = std::min(best, (u - ref).lpNorm<Eigen::Infinity>());
  o.detail << "distance to switched branch " << best;
  o.require(best <= 1e-6, "distance <= 1e-6");
}

void criterion8(Outcome& o) {
  const GridSpec rho{Param::rho_iaa, 0.01, 3.0, 60};
  const GridSpec t{Param::t, 0.1, 20.0, 60};
  const ParameterSet m2p = preset("M2");

  const StabilityGrid flat = stability_map(rho, t, m2p.with(Param::omega, 0.0), 20, {}, 4);
  o.require(flat.stable_count() == static_cast<int>(flat.cells.size()), "omega = 0 grid entirely stable");
  o.detail << "omega=0 stable " << flat.stable_count() << "/" << flat.cells.size();

  const StabilityGrid tau2 = stability_map(rho, t, m2p, 20, {}, 4);
  const StabilityGrid tau1 = stability_map(rho, t, m2p.with(Param::tau, 1.0), 20, {}, 4);
  bool subset = true;
  for (std::size_t k = 0; k < tau1.cells.size(); ++k) {
    if (tau1.cells[k] == CellState::Stable && tau2.cells[k] != CellState::Stable) subset = false;
  }
  o.detail << ", stable nodes tau=1 " << tau1.stable_count() << " tau=2 " << tau2.stable_count();
  o.require(subset && tau1.stable_count() < tau2.stable_count(), "tau=1 region strict subset of tau=2 region");

  const BoundaryTypeCurve curve = boundary_type_map(tau2, {}, 4);
  const BoundarySample* smallest = nullptr;
  const BoundarySample* largest = nullptr;
  for (const auto& s : curve.samples) {
    if (s.unresolved) continue;
    if (!smallest || s.x < smallest->x) smallest = &s;
    if (!largest || s.x > largest->x) largest = &s;
  }
  o.require(smallest && smallest->kind == EventKind::Hopf, "small-rho boundary is Hopf");
  o.require(largest && largest->kind == EventKind::BranchPoint, "large-rho boundary is BranchPoint");

  // Boundary crossings on the rho = 1.5 and 0.75 lines against criteria 1 and 2.
  const GridSpec lines{Param::rho_iaa, 0.75, 1.5, 2};
  const BoundaryTypeCurve cross = boundary_type_map(lines, t, m2p, 20, {}, 2);
  const double cell = (t.hi - t.lo) / (t.count - 1);
  auto lowest = [&](double x) -> const BoundarySample* {
    const BoundarySample* best = nullptr;
    for (const auto& s : cross.samples) {
      if (s.x == x && (!best || s.y < best->y)) best = &s;
    }
    return best;
  };
  const BoundarySample* at15 = lowest(1.5);
  const BoundarySample* at075 = lowest(0.75);
  o.require(at15 && at15->kind == EventKind::BranchPoint && std::abs(at15->y - 0.8983) <= cell,
            "rho=1.5 boundary is the criterion-1 BP");
  o.require(at075 && at075->kind == EventKind::Hopf && std::abs(at075->y - 3.3113) <= cell,
            "rho=0.75 boundary is the criterion-2 Hopf");
  if (at15) o.detail << ", rho=1.5 boundary " << event_name(at15->kind) << "@" << at15->y;
  if (at075) o.detail << ", rho=0.75 boundary " << event_name(at075->kind) << "@" << at075->y;
}

void criterion9(Outcome& o) {
  const CellRow row(20);
  const NumericsConfig num;

  double trivial_res = 0.0;
  for (const char* name : {"M1", "M2", "M3"}) {
    for (double omega : {0.0, 0.3, 1.0}) {
      for (double tau : {0.5, 1.0, 2.0, 3.0}) {
        const ParameterSet prm = preset(name).with(Param::omega, omega).with(Param::tau, tau);
        trivial_res = std::max(trivial_res, steady_residual(trivial_solution(row, prm), row, prm).lpNorm<Eigen::Infinity>());
      }
    }
  }
  o.detail << "trivial residual " << trivial_res;
  o.require(trivial_res <= 1e-10, "trivial residual <= 1e-10");

  // RK4 order from a step-halving sequence against a fine reference.
  const ParameterSet m2p = preset("M2");
  const DynamicState x0 = perturbed_trivial(row, m2p);
  auto run = [&](double dt) {
    DynamicState x = x0;
    const int steps = static_cast<int>(std::lround(1.0 / dt));
    for (int k = 0; k < steps; ++k) x = rk4_step(x, dt, row, m2p);
    return x.packed();
  };
  const Eigen::VectorXd ref = run(1.0 / 2560);
  std::vector<double> logs_dt, logs_err;
  for (double dt : {0.04, 0.02, 0.01, 0.005}) {
    logs_dt.push_back(std::log(dt));
    logs_err.push_back(std::log((run(dt) - ref).lpNorm<Eigen::Infinity>()));
  }
  const double mx = (logs_dt[0] + logs_dt[1] + logs_dt[2] + logs_dt[3]) / 4;
  const double my = (logs_err[0] + logs_err[1] + logs_err[2] + logs_err[3]) / 4;
  double sxy = 0, sxx = 0;
  for (int k = 0; k < 4; ++k) {
    sxy += (logs_dt[k] - mx) * (logs_err[k] - my);
    sxx += (logs_dt[k] - mx) * (logs_dt[k] - mx);
  }
  const double order = sxy / sxx;
  o.detail << ", RK4 order " << order;
  o.require(order >= 3.9, "RK4 fitted order >= 3.9");

  // Decay/diffusion rows with transport switched off.
  const ParameterSet passive = m2p.with(Param::t, 0.0);
  Eigen::VectorXd x = x0.packed();
  const int n = row.n;
  for (int i = 0; i < n; ++i) x(n + 2 + i) += 0.1 * std::cos(i);
  const Eigen::MatrixXd fd = fd_jacobian([&](const Eigen::VectorXd& v) { return dynamic_rhs<double>(v, passive); }, x, num);
  Eigen::MatrixXd exact = Eigen::MatrixXd::Zero(2 * n + 2, 2 * n + 2);
  for (int k = 0; k <= n + 1; ++k) {
    const int ai = n + 2 + std::clamp(k, 1, n) - 1;
    const double p = x(k);
    exact(k, k) = -(passive.rho_pin0 + passive.rho_pin * x(ai)) * passive.kappa_pin / std::pow(1 + passive.kappa_pin * p, 2) -
                  passive.mu_pin;
    exact(k, ai) = passive.rho_pin / (1 + passive.kappa_pin * p);
  }
  for (int i = 0; i < n; ++i) {
    const int r = n + 2 + i;
    const double a = x(r);
    exact(r, r) = -passive.rho_iaa * passive.kappa_iaa / std::pow(1 + passive.kappa_iaa * a, 2) - passive.mu_iaa;
    if (i > 0) exact(r, r - 1) = passive.d, exact(r, r) -= passive.d;
    if (i < n - 1) exact(r, r + 1) = passive.d, exact(r, r) -= passive.d;
  }
  const double jac_err = (fd - exact).lpNorm<Eigen::Infinity>();
  o.detail << ", FD Jacobian error " << jac_err;
  o.require(jac_err <= 1e-6, "FD vs analytic Jacobian <= 1e-6");

  const DynamicState s = perturbed_trivial(row, preset("M1"));
  const double refl = (dynamic_rhs(reflect(s), row, preset("M1")).packed() -
                       reflect(dynamic_rhs(s, row, preset("M1"))).packed())
                          .lpNorm<Eigen::Infinity>();
  o.detail << ", reflection error " << refl;
  o.require(refl <= 1e-12, "reflection equivariance <= 1e-12");

  const double res = std::max(max_residual(m1().problem, m1().trivial), max_residual(m2().problem, m2().trivial));
  double res_switched = 0.0;
  if (m1().switched) res_switched = max_residual(m1().problem, *m1().switched);
  o.detail << ", max branch residual " << std::max(res, res_switched);
  o.require(std::max(res, res_switched) <= 1e-10, "continuation points ||F|| <= 1e-10");

  bool paired = true;
  for (const auto& pt : m2().trivial.points) {
    const Eigen::VectorXcd& ev = pt.spectrum.values;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i).imag() == 0.0) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (Eigen::Index j = 0; j < ev.size(); ++j) nearest = std::min(nearest, std::abs(ev(j) - std::conj(ev(i))));
      if (nearest > 1e-10 * std::max(1.0, std::abs(ev(i)))) paired = false;
    }
  }
  o.require(paired, "complex eigenvalues come in conjugate pairs");

  const GridSpec gx{Param::rho_iaa, 0.01, 3.0, 24};
  const GridSpec gy{Param::t, 0.1, 20.0, 24};
  const StabilityGrid serial = stability_map(gx, gy, m2p, 20, num, 1);
  const StabilityGrid parallel = stability_map(gx, gy, m2p, 20, num, 4);
  const bool same = serial.cells == parallel.cells && serial.unstable_counts == parallel.unstable_counts;
  o.require(same, "parallel atlas equals serial");
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {1, {"M1 trivial-branch branch point", criterion1}},
      {2, {"M2 Hopf, branch point and stability-gaining Hopf", criterion2}},
      {3, {"M3 Hopf and periodic orbit", criterion3}},
      {4, {"n = 100 branches and peak patterns", criterion4}},
      {5, {"omega continuation", criterion5}},
      {6, {"tau monotonicity of the first branch point", criterion6}},
      {7, {"simulation lies on the switched branch", criterion7}},
      {8, {"stability atlas", criterion8}},
      {9, {"property suite", criterion9}},
  };
  std::vector<int> selected;
  for (int k = 1; k < argc; ++k) selected.push_back(std::stoi(argv[k]));
  if (selected.empty()) {
    for (const auto& [id, entry] : criteria) selected.push_back(id);
  }

  std::cout << std::setprecision(6);
  int failures = 0;
  for (int id : selected) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    Outcome o;
    try {
      it->second.second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << it->second.first << "): " << o.detail.str()
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
