#pragma once

#include "auxin/model.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace auxin {

struct Trajectory {
  std::vector<double> times;
  std::vector<DynamicState> states;
  int sample_stride = 1;

  std::size_t size() const { return times.size(); }
};

// Non-finite or out-of-domain derivative, or |state| > 1e6. Carries the samples taken so far.
struct BlowUpError : std::runtime_error {
  BlowUpError(double time, Trajectory partial);
  double time;
  Trajectory partial;
};

inline constexpr double kBlowUpBound = 1e6;
inline constexpr double kDefaultTimeStep = 0.01;

/// Classical four-stage Runge-Kutta step for any vector field f(x).
template <typename Vector, typename Rhs>
Vector rk4_step(const Vector& x, double dt, Rhs&& f) {
  const Vector k1 = f(x);
  const Vector k2 = f(Vector(x + (0.5 * dt) * k1));
  const Vector k3 = f(Vector(x + (0.5 * dt) * k2));
  const Vector k4 = f(Vector(x + dt * k3));
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Throws BlowUpError (empty partial trajectory) on a non-finite result.
DynamicState rk4_step(const DynamicState& state, double dt, const CellRow& row, const ParameterSet& prm,
                      double time = 0.0);

/// Trivial steady state with amplitude*sin(frequency*(i+2)*pi/(n+4)) added
/// to every interior a_i. With n = 20 the denominator is the familiar 24.
DynamicState perturbed_trivial(const CellRow& row, const ParameterSet& prm, double amplitude = 0.2,
                               int frequency = 5);

/// Fixed-step RK4 from t = 0 to t_end, recording every `sample_stride`-th
/// step (the initial and final states are always recorded).
Trajectory simulate(const DynamicState& state0, const CellRow& row, const ParameterSet& prm, double t_end,
                    double dt = kDefaultTimeStep, int sample_stride = 1);

struct PoincarePoint {
  double time = 0.0;
  // Interior IAA interpolated onto the section.
  Eigen::VectorXd a;
};

struct OrbitSummary {
  bool converged = false;
  double period = 0.0;
  double period_spread = 0.0;  // standard deviation of the crossing gaps
  double section_level = 0.0;
  int probe_cell = 6;
  Eigen::VectorXd a_min;
  Eigen::VectorXd a_max;
  std::vector<PoincarePoint> poincare_points;
  std::string diagnostics;
};

/// Period and envelope of a (putatively) periodic trajectory.
///
/// The first `transient_fraction` of the samples is discarded; the section
/// is {a_probe = post-transient mean, increasing}. probe_cell is 1-based.
OrbitSummary analyze_orbit(const Trajectory& traj, int probe_cell, double transient_fraction = 0.5);

struct PhaseSample {
  double t;
  double a;
  double dadt;
};

// (a_probe, da_probe/dt) along the trajectory, derivative from dynamic_rhs.
std::vector<PhaseSample> phase_plane(const Trajectory& traj, int probe_cell, const CellRow& row,
                                     const ParameterSet& prm);

/// Peaks of an IAA profile: local maxima above the profile mean. A run of
/// equal values (relative 1e-9) counts once; end cells compare with their
/// single neighbour.
int count_peaks(const Eigen::VectorXd& a);

/// Repeats an n-cell steady pattern `copies` times. Ghost PIN from steady_pin().
DynamicState tile_pattern(const Eigen::VectorXd& pattern, int copies, const ParameterSet& prm);

}  // namespace auxin
