#include "auxin/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace auxin {

void ContinuationConfig::validate() const {
  numerics.validate();
  if (!(ds_min > 0.0) || !(ds0 >= ds_min) || !(ds_max >= ds0) || !(grow_factor >= 1.0)) {
    throw std::invalid_argument("invalid continuation step-size settings");
  }
  if (max_points < 1 || max_bisections < 1 || corrector_max_iter < 1) {
    throw std::invalid_argument("continuation iteration limits must be >= 1");
  }
  if (!(switch_delta > 0.0) || !(switch_delta_max >= switch_delta)) {
    throw std::invalid_argument("invalid branch-switch perturbation settings");
  }
}

std::string_view event_name(EventKind kind) {
  switch (kind) {
    case EventKind::BranchPoint: return "BP";
    case EventKind::LimitPoint: return "LP";
    case EventKind::Hopf: return "H";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SteadyProblem

SteadyProblem::SteadyProblem(CellRow row, ParameterSet base, Param active)
    : row_(row), base_(base), active_(active) {
  row_.validate();
}

Eigen::VectorXd SteadyProblem::residual(const Eigen::VectorXd& u, double lambda) const {
  return steady_residual<double>(u, params_at(lambda));
}

Eigen::VectorXd SteadyProblem::residual(const Eigen::VectorXd& x) const {
  const int m = size();
  return steady_residual<double>(x.head(m), params_at(x(m)));
}

Eigen::MatrixXd SteadyProblem::jacobian(const Eigen::VectorXd& u, double lambda, const NumericsConfig& cfg) const {
  const ParameterSet prm = params_at(lambda);
  return fd_jacobian([&prm](const Eigen::VectorXd& v) { return steady_residual<double>(v, prm); }, u, cfg);
}

Eigen::MatrixXd SteadyProblem::augmented_jacobian(const Eigen::VectorXd& u, double lambda,
                                                  const NumericsConfig& cfg) const {
  Eigen::VectorXd x(size() + 1);
  x << u, lambda;
  return fd_jacobian([this](const Eigen::VectorXd& v) { return residual(v); }, x, cfg);
}

Eigen::MatrixXd SteadyProblem::stability_jacobian(const Eigen::VectorXd& u, double lambda,
                                                  const NumericsConfig& cfg) const {
  const ParameterSet prm = params_at(lambda);
  const DynamicState lifted = lift_to_dynamic(u, prm);
  return fd_jacobian([&prm](const Eigen::VectorXd& v) { return dynamic_rhs<double>(v, prm); },
                     lifted.packed(), cfg);
}

Spectrum SteadyProblem::spectrum(const Eigen::VectorXd& u, double lambda, const NumericsConfig& cfg) const {
  return eigenvalues(stability_jacobian(u, lambda, cfg));
}

NewtonResult SteadyProblem::solve(const Eigen::VectorXd& u0, double lambda, const NumericsConfig& cfg) const {
  const ParameterSet prm = params_at(lambda);
  return newton_solve([&prm](const Eigen::VectorXd& v) { return steady_residual<double>(v, prm); }, u0, cfg);
}

Eigen::VectorXd SolutionPoint::stacked() const {
  Eigen::VectorXd x(u.size() + 1);
  x << u, lambda;
  return x;
}

// ---------------------------------------------------------------------------
// Points and tangents

namespace {

void align(Eigen::VectorXd& z, const Eigen::VectorXd* previous) {
  double orient = 0.0;
  if (previous != nullptr) {
    orient = z.dot(*previous);
  } else {
    orient = z(z.size() - 1);
    if (std::abs(orient) < 1e-12) orient = z.sum();
  }
  if (orient < 0.0) z = -z;
}

void fill_stability(const SteadyProblem& problem, SolutionPoint& pt, const ContinuationConfig& cfg) {
  pt.spectrum = problem.spectrum(pt.u, pt.lambda, cfg.numerics);
  pt.stability = classify_stability(pt.spectrum, cfg.numerics);
  pt.test.determinant_sign = determinant_sign(pt.spectrum);
  pt.test.unstable_count = pt.stability.unstable_count;
  pt.test.dlambda_ds = pt.tangent.size() > 0 ? pt.tangent(pt.tangent.size() - 1) : 0.0;
}

// Newton on {F(y) = 0, normal . (y - anchor) = 0}.
Eigen::VectorXd correct_on_hyperplane(const SteadyProblem& problem, const Eigen::VectorXd& guess,
                                      const Eigen::VectorXd& normal, const Eigen::VectorXd& anchor,
                                      int max_iter, const NumericsConfig& cfg) {
  const int m = problem.size();
  auto bordered = [&](const Eigen::VectorXd& y) {
    Eigen::VectorXd g(m + 1);
    g.head(m) = problem.residual(y);
    g(m) = normal.dot(y - anchor);
    return g;
  };
  NumericsConfig local = cfg;
  local.newton_max_iter = max_iter;
  try {
    return newton_solve(bordered, guess, local).u;
  } catch (const NumericsError& e) {
    throw StepRejected(std::string("corrector failed: ") + e.what());
  } catch (const ModelError& e) {
    throw StepRejected(std::string("corrector left the model domain: ") + e.what());
  }
}

}  // namespace

Eigen::VectorXd tangent(const SteadyProblem& problem, const Eigen::VectorXd& u, double lambda,
                        const Eigen::VectorXd* previous, const ContinuationConfig& cfg) {
  const Eigen::MatrixXd aug = problem.augmented_jacobian(u, lambda, cfg.numerics);
  const int m = problem.size();
  if (previous != nullptr) {
    Eigen::MatrixXd bordered(m + 1, m + 1);
    bordered.topRows(m) = aug;
    bordered.row(m) = previous->transpose();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
    rhs(m) = 1.0;
    try {
      Eigen::VectorXd z = solve_checked(bordered, rhs);
      z.normalize();
      align(z, previous);
      return z;
    } catch (const SingularJacobian&) {
      // fall through to the SVD route
    }
  }
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(aug, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) < cfg.numerics.rank_tol * sv(0)) {
    throw AmbiguousTangent("augmented Jacobian has a two-dimensional null space at lambda = " +
                           std::to_string(lambda) + "; refine by bisection");
  }
  Eigen::VectorXd z = svd.matrixV().col(m);
  align(z, previous);
  return z;
}

SolutionPoint make_point(const SteadyProblem& problem, const Eigen::VectorXd& u0, double lambda,
                         const Eigen::VectorXd* previous_tangent, const ContinuationConfig& cfg) {
  SolutionPoint pt;
  const NewtonResult sol = problem.solve(u0, lambda, cfg.numerics);
  pt.u = sol.u;
  pt.lambda = lambda;
  pt.residual_norm = sol.residual_norm;
  pt.tangent = tangent(problem, pt.u, lambda, previous_tangent, cfg);
  fill_stability(problem, pt, cfg);
  return pt;
}

SolutionPoint trivial_point(const SteadyProblem& problem, double lambda, const ContinuationConfig& cfg) {
  return make_point(problem, trivial_solution(problem.row(), problem.params_at(lambda)), lambda, nullptr, cfg);
}

SolutionPoint arclength_step(const SteadyProblem& problem, const SolutionPoint& point, double ds,
                             const ContinuationConfig& cfg) {
  if (ds == 0.0) throw std::invalid_argument("arclength step must be non-zero");
  const int m = problem.size();
  const Eigen::VectorXd x0 = point.stacked();
  const Eigen::VectorXd predicted = x0 + ds * point.tangent;
  const Eigen::VectorXd y =
      correct_on_hyperplane(problem, predicted, point.tangent, predicted, cfg.corrector_max_iter, cfg.numerics);
  if ((y - predicted).norm() > std::abs(ds)) throw StepRejected("corrector moved further than the step");

  SolutionPoint next;
  next.u = y.head(m);
  next.lambda = y(m);
  next.residual_norm = problem.residual(next.u, next.lambda).lpNorm<Eigen::Infinity>();
  try {
    next.tangent = tangent(problem, next.u, next.lambda, &point.tangent, cfg);
  } catch (const AmbiguousTangent& e) {
    throw StepRejected(e.what());
  }
  if (next.tangent.dot(point.tangent) < cfg.min_tangent_cosine && std::abs(ds) > cfg.ds_min) {
    throw StepRejected("tangent turned too sharply");
  }
  fill_stability(problem, next, cfg);
  return next;
}

// ---------------------------------------------------------------------------
// Branch marching

namespace {

int unstable_complex(const SolutionPoint& p, double tol) {
  int count = 0;
  for (Eigen::Index i = 0; i < p.spectrum.size(); ++i) {
    if (p.spectrum[i].real() > tol && p.spectrum[i].imag() != 0.0) ++count;
  }
  return count;
}

// At most one real eigenvalue or one conjugate pair changed sides.
bool simple_crossing(const SolutionPoint& a, const SolutionPoint& b, double tol) {
  const bool flip = a.test.determinant_sign != b.test.determinant_sign;
  const int change = std::abs(a.test.unstable_count - b.test.unstable_count);
  if (flip) return change == 1;
  if (change == 2) return std::abs(unstable_complex(a, tol) - unstable_complex(b, tol)) == 2;
  return change == 0;
}

}  // namespace

Branch continue_branch(const SteadyProblem& problem, const SolutionPoint& start, double lambda_lo,
                       double lambda_hi, const ContinuationConfig& cfg) {
  cfg.validate();
  if (!(lambda_lo < lambda_hi)) throw std::invalid_argument("continuation window must have lo < hi");
  Branch branch;
  branch.row = problem.row();
  branch.base = problem.base();
  branch.param = problem.active();
  branch.lambda_lo = lambda_lo;
  branch.lambda_hi = lambda_hi;

  const Eigen::VectorXd x_start = start.stacked();
  std::vector<SolutionPoint> sides[2];
  for (int side = 0; side < 2; ++side) {
    const double sign = side == 0 ? 1.0 : -1.0;
    auto& pts = sides[side];
    const SolutionPoint* current = &start;
    double ds = sign * cfg.ds0;
    int streak = 0;
    std::string why = "max points reached";
    while (static_cast<int>(pts.size()) < cfg.max_points) {
      if (current->lambda < lambda_lo || current->lambda > lambda_hi) {
        why = "left window at lambda = " + std::to_string(current->lambda);
        break;
      }
      SolutionPoint next;
      try {
        next = arclength_step(problem, *current, ds, cfg);
        if (!simple_crossing(*current, next, cfg.numerics.eig_zero_tol) && std::abs(ds) * 0.5 >= cfg.event_ds_min) {
          throw StepRejected("step crosses more than one eigenvalue");
        }
      } catch (const StepRejected& e) {
        ds *= 0.5;
        streak = 0;
        if (std::abs(ds) < cfg.ds_min) {
          why = "step failure at lambda = " + std::to_string(current->lambda) + ": " + e.what();
          break;
        }
        continue;
      }
      if (next.lambda < lambda_lo || next.lambda > lambda_hi) {
        // Land the last point on the window edge.
        const double edge = next.lambda < lambda_lo ? lambda_lo : lambda_hi;
        const double f = (edge - current->lambda) / (next.lambda - current->lambda);
        try {
          next = make_point(problem, current->u + f * (next.u - current->u), edge, &current->tangent, cfg);
        } catch (const std::exception&) {
        }
      }
      pts.push_back(std::move(next));
      current = &pts.back();
      if (current->lambda <= lambda_lo || current->lambda >= lambda_hi) {
        why = "reached window edge at lambda = " + std::to_string(current->lambda);
        break;
      }
      if (++streak >= cfg.grow_after) {
        ds = sign * std::min(std::abs(ds) * cfg.grow_factor, cfg.ds_max);
        streak = 0;
      }
      if (pts.size() > 10 && (current->stacked() - x_start).norm() < 0.5 * std::abs(ds)) {
        why = "branch closed on itself";
        break;
      }
    }
    branch.terminations.push_back((side == 0 ? "forward: " : "backward: ") + why);
  }

  branch.points.reserve(sides[0].size() + sides[1].size() + 1);
  for (auto it = sides[1].rbegin(); it != sides[1].rend(); ++it) branch.points.push_back(std::move(*it));
  branch.points.push_back(start);
  for (auto& p : sides[0]) branch.points.push_back(std::move(p));

  branch.events = detect_bifurcations(problem, branch, cfg);
  return branch;
}

// ---------------------------------------------------------------------------
// Event location

namespace {

struct CrossingState {
  int determinant_sign;
  int unstable_count;
  bool operator==(const CrossingState&) const = default;
};

CrossingState state_of(const SolutionPoint& p) {
  return {p.test.determinant_sign, p.test.unstable_count};
}

// Solution halfway between two nearby points on one branch: chord
// midpoint as predictor, corrected on the hyperplane normal to the chord.
SolutionPoint midpoint(const SteadyProblem& problem, const SolutionPoint& a, const SolutionPoint& b,
                       const ContinuationConfig& cfg) {
  const int m = problem.size();
  const Eigen::VectorXd xa = a.stacked();
  const Eigen::VectorXd xb = b.stacked();
  const Eigen::VectorXd chord = (xb - xa).normalized();
  const Eigen::VectorXd predicted = 0.5 * (xa + xb);
  const Eigen::VectorXd y =
      correct_on_hyperplane(problem, predicted, chord, predicted, cfg.numerics.newton_max_iter, cfg.numerics);
  if ((y - predicted).norm() > 0.5 * (xb - xa).norm()) throw StepRejected("midpoint left the segment");
  SolutionPoint pt;
  pt.u = y.head(m);
  pt.lambda = y(m);
  pt.residual_norm = problem.residual(pt.u, pt.lambda).lpNorm<Eigen::Infinity>();
  pt.tangent = a.tangent;
  fill_stability(problem, pt, cfg);
  return pt;
}

class EventLocator {
 public:
  EventLocator(const SteadyProblem& problem, const ContinuationConfig& cfg) : problem_(problem), cfg_(cfg) {}

  void locate(const SolutionPoint& left, const SolutionPoint& right, std::size_t index, int depth,
              std::vector<BifurcationEvent>& out) const {
    const CrossingState sl = state_of(left);
    const CrossingState sr = state_of(right);
    if (sl == sr) return;
    const bool flip = sl.determinant_sign != sr.determinant_sign;
    const int change = std::abs(sr.unstable_count - sl.unstable_count);
    if ((flip && change == 1) || (!flip && change == 2)) {
      bisect(left, right, index, depth, flip, out);
      return;
    }
    split(left, right, index, depth, out);
  }

 private:
  static double distance(const SolutionPoint& a, const SolutionPoint& b) {
    return (b.stacked() - a.stacked()).norm();
  }

  void with_tangent(SolutionPoint& p, const Eigen::VectorXd& reference) const {
    try {
      p.tangent = tangent(problem_, p.u, p.lambda, &reference, cfg_);
    } catch (const std::exception&) {
      p.tangent = reference;
    }
    p.test.dlambda_ds = p.tangent(p.tangent.size() - 1);
  }

  void split(const SolutionPoint& left, const SolutionPoint& right, std::size_t index, int depth,
             std::vector<BifurcationEvent>& out) const {
    if (depth >= cfg_.max_subdivisions) {
      out.push_back(unresolved(left, right, index, "several crossings inside one step; reduce ds"));
      return;
    }
    SolutionPoint mid;
    try {
      mid = midpoint(problem_, left, right, cfg_);
      with_tangent(mid, left.tangent);
    } catch (const std::exception& e) {
      out.push_back(unresolved(left, right, index, std::string("subdivision failed: ") + e.what()));
      return;
    }
    locate(left, mid, index, depth + 1, out);
    locate(mid, right, index, depth + 1, out);
  }

  BifurcationEvent unresolved(const SolutionPoint& left, const SolutionPoint& right, std::size_t index,
                              std::string note) const {
    BifurcationEvent ev;
    const bool flip = left.test.determinant_sign != right.test.determinant_sign;
    ev.kind = flip ? EventKind::BranchPoint : EventKind::Hopf;
    ev.unresolved = true;
    ev.u = 0.5 * (left.u + right.u);
    ev.lambda = 0.5 * (left.lambda + right.lambda);
    ev.tangent = left.tangent;
    ev.bracket_width = std::abs(right.lambda - left.lambda);
    ev.after_index = index;
    ev.note = std::move(note);
    return ev;
  }

  void bisect(const SolutionPoint& left, const SolutionPoint& right, std::size_t index, int depth, bool real,
              std::vector<BifurcationEvent>& out) const {
    const CrossingState sl = state_of(left);
    const CrossingState sr = state_of(right);
    SolutionPoint p_lo = left;
    SolutionPoint p_hi = right;
    for (int it = 0; it < cfg_.max_bisections; ++it) {
      if (distance(p_lo, p_hi) <= cfg_.bisection_arclength_tol &&
          std::abs(p_hi.lambda - p_lo.lambda) <= cfg_.bisection_lambda_tol) {
        break;
      }
      SolutionPoint p_mid;
      try {
        p_mid = midpoint(problem_, p_lo, p_hi, cfg_);
      } catch (const StepRejected&) {
        break;  // keep the bracket obtained so far
      }
      const CrossingState sm = state_of(p_mid);
      if (sm == sl) {
        p_lo = std::move(p_mid);
      } else if (sm == sr) {
        p_hi = std::move(p_mid);
      } else {
        // Inside a tiny bracket a mixed state is eigenvalue noise at zero.
        if (distance(p_lo, p_hi) <= 1e3 * cfg_.bisection_arclength_tol) break;
        // The bracket hides more than one crossing.
        if (depth + 1 > cfg_.max_subdivisions) {
          out.push_back(unresolved(left, right, index, "mixed crossing states inside one step"));
          return;
        }
        with_tangent(p_mid, left.tangent);
        with_tangent(p_lo, left.tangent);
        with_tangent(p_hi, left.tangent);
        locate(p_lo, p_mid, index, depth + 1, out);
        locate(p_mid, p_hi, index, depth + 1, out);
        return;
      }
    }

    const SolutionPoint& at = p_lo;
    BifurcationEvent ev;
    ev.after_index = index;
    ev.u = at.u;
    ev.lambda = at.lambda;
    ev.residual_norm = at.residual_norm;
    ev.tangent = left.tangent;
    ev.bracket_width = std::abs(p_hi.lambda - p_lo.lambda);
    const double width = distance(p_lo, p_hi);
    ev.dlambda_ds = width != 0.0 ? (p_hi.lambda - p_lo.lambda) / width : 0.0;

    if (real) {
      classify_real(ev, at);
    } else {
      ev.kind = EventKind::Hopf;
      // Crossing pair: complex eigenvalue with the smallest |Re|.
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < at.spectrum.size(); ++i) {
        const auto& mu = at.spectrum[i];
        if (std::abs(mu.imag()) > cfg_.numerics.eig_zero_tol && std::abs(mu.real()) < best) {
          best = std::abs(mu.real());
          ev.beta = std::abs(mu.imag());
        }
      }
      if (!ev.beta) {
        ev.unresolved = true;
        ev.note = "no complex pair near the imaginary axis";
      }
    }
    out.push_back(std::move(ev));
  }

  void classify_real(BifurcationEvent& ev, const SolutionPoint& at) const {
    const Eigen::MatrixXd aug = problem_.augmented_jacobian(at.u, at.lambda, cfg_.numerics);
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(aug, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index cols = aug.cols();
    ev.augmented_deficiency = static_cast<int>((sv.array() < cfg_.numerics.rank_tol * sv(0)).count());
    ev.null_directions = svd.matrixV().rightCols(2);
    // A fold keeps [J_U | J_lambda] at full rank while the branch turns.
    double slope = ev.dlambda_ds;
    try {
      const Eigen::VectorXd t = tangent(problem_, at.u, at.lambda, &ev.tangent, cfg_);
      slope = t(cols - 1);
    } catch (const std::exception&) {
    }
    if (ev.augmented_deficiency >= 1) {
      ev.kind = EventKind::BranchPoint;
    } else if (std::abs(slope) <= cfg_.fold_tol || std::abs(ev.dlambda_ds) <= cfg_.fold_tol) {
      ev.kind = EventKind::LimitPoint;
      ev.dlambda_ds = std::min(std::abs(slope), std::abs(ev.dlambda_ds));
      ev.null_directions = svd.matrixV().rightCols(1);
    } else {
      ev.kind = EventKind::BranchPoint;
      ev.unresolved = true;
      ev.note = "real crossing with full augmented rank and nonzero dlambda/ds";
    }
  }

  const SteadyProblem& problem_;
  const ContinuationConfig& cfg_;
};

}  // namespace

std::vector<BifurcationEvent> detect_bifurcations(const SteadyProblem& problem, const Branch& branch,
                                                  const ContinuationConfig& cfg) {
  if (branch.points.size() < 2) return {};
  const EventLocator locator(problem, cfg);
  std::vector<BifurcationEvent> events;
  for (std::size_t k = 0; k + 1 < branch.points.size(); ++k) {
    locator.locate(branch.points[k], branch.points[k + 1], k, 0, events);
  }
  return events;
}

// ---------------------------------------------------------------------------
// Branch switching

std::vector<SolutionPoint> switch_branch(const SteadyProblem& problem, const BifurcationEvent& event,
                                         const ContinuationConfig& cfg) {
  if (event.kind != EventKind::BranchPoint) throw std::invalid_argument("branch switching needs a branch point");
  const int m = problem.size();
  Eigen::VectorXd x_bp(m + 1);
  x_bp << event.u, event.lambda;
  const Eigen::VectorXd t = event.tangent.normalized();

  const Eigen::MatrixXd aug = problem.augmented_jacobian(event.u, event.lambda, cfg.numerics);
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(aug, Eigen::ComputeFullV);
  const Eigen::MatrixXd basis = svd.matrixV().rightCols(2);
  // Direction inside the two-dimensional null space orthogonal to t.
  const Eigen::Vector2d c = basis.transpose() * t;
  Eigen::VectorXd phi = basis * Eigen::Vector2d(-c(1), c(0));
  phi -= phi.dot(t) * t;
  if (phi.norm() < 1e-8) throw SwitchFailed("no second null direction at the branch point");
  phi.normalize();

  std::vector<SolutionPoint> starters;
  std::string diagnostics;
  for (const double sign : {1.0, -1.0}) {
    double delta = cfg.switch_delta;
    for (int attempt = 0; attempt < cfg.switch_max_attempts && delta <= cfg.switch_delta_max * (1 + 1e-12);
         ++attempt, delta *= 2.0) {
      const Eigen::VectorXd dir = sign * phi;
      const Eigen::VectorXd guess = x_bp + delta * dir;
      Eigen::VectorXd y;
      try {
        y = correct_on_hyperplane(problem, guess, dir, guess, cfg.numerics.newton_max_iter, cfg.numerics);
      } catch (const StepRejected& e) {
        diagnostics += "delta " + std::to_string(delta) + ": " + e.what() + "; ";
        continue;
      }
      // Same arclength on the original branch; the starter must stay clear of it.
      const double along = t.dot(y - x_bp);
      bool fell_back = false;
      try {
        const Eigen::VectorXd ahead = x_bp + along * t;
        const Eigen::VectorXd original =
            correct_on_hyperplane(problem, ahead, t, ahead, cfg.numerics.newton_max_iter, cfg.numerics);
        fell_back = (y - original).norm() < 0.5 * delta;
      } catch (const StepRejected&) {
      }
      if (fell_back) {
        diagnostics += "delta " + std::to_string(delta) + ": fell back onto the original branch; ";
        continue;
      }
      SolutionPoint pt;
      pt.u = y.head(m);
      pt.lambda = y(m);
      pt.residual_norm = problem.residual(pt.u, pt.lambda).lpNorm<Eigen::Infinity>();
      try {
        pt.tangent = tangent(problem, pt.u, pt.lambda, &dir, cfg);
      } catch (const AmbiguousTangent& e) {
        diagnostics += e.what();
        continue;
      }
      fill_stability(problem, pt, cfg);
      starters.push_back(std::move(pt));
      break;
    }
  }
  if (starters.empty()) throw SwitchFailed("branch switching failed: " + diagnostics);
  return starters;
}

Branch continue_in_omega(const CellRow& row, const ParameterSet& base, const SolutionPoint& start,
                         const ContinuationConfig& cfg) {
  const SteadyProblem problem(row, base, Param::omega);
  return continue_branch(problem, start, 0.0, 1.0, cfg);
}

}  // namespace auxin
