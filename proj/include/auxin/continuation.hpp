#pragma once

#include "auxin/model.hpp"
#include "auxin/numerics.hpp"

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace auxin {

struct ContinuationConfig {
  NumericsConfig numerics;
  double ds0 = 0.01;
  double ds_min = 1e-6;
  double ds_max = 0.1;
  double grow_factor = 1.3;
  int grow_after = 4;               // consecutive accepted steps before growing ds
  int corrector_max_iter = 12;
  double min_tangent_cosine = 0.9;  // sharper turns reject the step
  int max_points = 4000;            // per direction
  double bisection_lambda_tol = 1e-6;
  double bisection_arclength_tol = 1e-9;
  int max_bisections = 40;
  int max_subdivisions = 6;         // for intervals hiding several crossings
  double event_ds_min = 1e-4;       // steps crossing more than one eigenvalue shrink down to this
  double fold_tol = 1e-6;           // |dlambda/ds| below which a real crossing is a fold
  double switch_delta = 1e-2;
  double switch_delta_max = 1e-1;
  int switch_max_attempts = 8;      // attempts per sign before giving up

  void validate() const;
};

struct StepRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Augmented Jacobian has a two-dimensional null space: refine by bisection.
struct AmbiguousTangent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SwitchFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Steady problem F(u, lambda) = 0 with one active parameter.
///
/// The steady unknowns are the 2n eliminated-ghost vector; stability is
/// judged on the Jacobian of the full time-dependent system (ghost PIN
/// included) at the lifted state, so the spectrum matches the dynamics.
class SteadyProblem {
 public:
  SteadyProblem(CellRow row, ParameterSet base, Param active);

  const CellRow& row() const { return row_; }
  const ParameterSet& base() const { return base_; }
  Param active() const { return active_; }
  int size() const { return row_.steady_size(); }

  ParameterSet params_at(double lambda) const { return base_.with(active_, lambda); }

  Eigen::VectorXd residual(const Eigen::VectorXd& u, double lambda) const;
  // F as a map of the stacked (u, lambda) vector.
  Eigen::VectorXd residual(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& u, double lambda, const NumericsConfig& cfg) const;
  // [J_U | J_lambda], 2n x (2n+1).
  Eigen::MatrixXd augmented_jacobian(const Eigen::VectorXd& u, double lambda, const NumericsConfig& cfg) const;
  // Jacobian of the time-dependent right-hand side at the lifted state.
  Eigen::MatrixXd stability_jacobian(const Eigen::VectorXd& u, double lambda, const NumericsConfig& cfg) const;
  Spectrum spectrum(const Eigen::VectorXd& u, double lambda, const NumericsConfig& cfg) const;

  NewtonResult solve(const Eigen::VectorXd& u0, double lambda, const NumericsConfig& cfg) const;

 private:
  CellRow row_;
  ParameterSet base_;
  Param active_;
};

struct TestValues {
  int determinant_sign = 1;
  int unstable_count = 0;
  double dlambda_ds = 0.0;
};

/// A converged point on a branch, with its tangent in R^{2n+1}.
struct SolutionPoint {
  Eigen::VectorXd u;
  double lambda = 0.0;
  Eigen::VectorXd tangent;
  Spectrum spectrum;
  StabilityTag stability;
  TestValues test;
  double residual_norm = 0.0;

  Eigen::VectorXd stacked() const;
  double a_at(int cell) const { return u(u.size() / 2 + cell - 1); }
};

enum class EventKind { BranchPoint, LimitPoint, Hopf };

std::string_view event_name(EventKind kind);

struct BifurcationEvent {
  EventKind kind = EventKind::BranchPoint;
  bool unresolved = false;
  Eigen::VectorXd u;
  double lambda = 0.0;
  std::optional<double> beta;  // Hopf: imaginary part of the crossing pair
  Eigen::VectorXd tangent;     // incoming branch direction
  Eigen::MatrixXd null_directions;
  int augmented_deficiency = 0;
  double dlambda_ds = 0.0;
  double bracket_width = 0.0;  // lambda width of the final bracket
  double residual_norm = 0.0;
  std::size_t after_index = 0; // event lies between points[after_index] and the next
  std::string note;
};

struct Branch {
  CellRow row;
  ParameterSet base;
  Param param = Param::t;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  std::vector<SolutionPoint> points;
  std::vector<BifurcationEvent> events;
  // Why each direction stopped (window, max points, step failure).
  std::vector<std::string> terminations;
};

/// Unit null vector of [J_U | J_lambda], sign-aligned with `previous`
/// (or with +lambda when absent). Throws AmbiguousTangent at a branch point.
Eigen::VectorXd tangent(const SteadyProblem& problem, const Eigen::VectorXd& u, double lambda,
                        const Eigen::VectorXd* previous, const ContinuationConfig& cfg);

// Newton-corrects (u, lambda) at fixed lambda and fills tangent and stability.
SolutionPoint make_point(const SteadyProblem& problem, const Eigen::VectorXd& u0, double lambda,
                         const Eigen::VectorXd* previous_tangent, const ContinuationConfig& cfg);

/// One pseudo-arclength predictor-corrector step of length ds.
/// Throws StepRejected when the corrector fails.
SolutionPoint arclength_step(const SteadyProblem& problem, const SolutionPoint& point, double ds,
                             const ContinuationConfig& cfg);

/// Marches both ways from `start` until the window [lo, hi] is left or
/// max_points is reached, then locates bifurcations.
Branch continue_branch(const SteadyProblem& problem, const SolutionPoint& start, double lambda_lo,
                       double lambda_hi, const ContinuationConfig& cfg);

std::vector<BifurcationEvent> detect_bifurcations(const SteadyProblem& problem, const Branch& branch,
                                                  const ContinuationConfig& cfg);

/// Starter points on the branch crossing at a refined branch point, one per
/// direction of the second null vector that corrects off the original branch.
std::vector<SolutionPoint> switch_branch(const SteadyProblem& problem, const BifurcationEvent& event,
                                         const ContinuationConfig& cfg);

// Continuation in omega over [0, 1] from a steady state at omega = start.lambda.
Branch continue_in_omega(const CellRow& row, const ParameterSet& base, const SolutionPoint& start,
                         const ContinuationConfig& cfg);

// Trivial-branch starting point at lambda.
SolutionPoint trivial_point(const SteadyProblem& problem, double lambda, const ContinuationConfig& cfg);

}  // namespace auxin
