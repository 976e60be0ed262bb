#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace auxin {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight sum vanished (only reachable with omega = 0 and zero neighbour IAA).
struct DegenerateDenominator : ModelError {
  using ModelError::ModelError;
};

// Closed form or power evaluated outside its domain.
struct DomainError : ModelError {
  using ModelError::ModelError;
};

struct InvalidParameters : ModelError {
  using ModelError::ModelError;
};

enum class Param {
  b,
  kappa_pin,
  kappa_t,
  kappa_iaa,
  rho_pin0,
  rho_pin,
  mu_pin,
  mu_iaa,
  rho_iaa,
  d,
  t,
  omega,
  tau
};

inline constexpr std::array<Param, 13> kAllParams = {
    Param::b,      Param::kappa_pin, Param::kappa_t, Param::kappa_iaa, Param::rho_pin0,
    Param::rho_pin, Param::mu_pin,   Param::mu_iaa,  Param::rho_iaa,   Param::d,
    Param::t,      Param::omega,     Param::tau};

std::string_view param_name(Param p);
// Throws InvalidParameters listing the accepted names.
Param param_from_name(std::string_view name);

/// Model constants plus the transport-family blend (omega) and exponent (tau).
///
/// Rates are per second, everything else is dimensionless. The default
/// values are the M2 column with omega = 1, tau = 2.
struct ParameterSet {
  double b = 3.0;
  double kappa_pin = 1.0;
  double kappa_t = 1.0;
  double kappa_iaa = 1.0;
  double rho_pin0 = 0.0;
  double rho_pin = 1.0;
  double mu_pin = 0.1;
  double mu_iaa = 0.1;
  double rho_iaa = 0.75;
  double d = 1.0;
  double t = 3.5;
  double omega = 1.0;
  double tau = 2.0;

  double& operator[](Param p);
  double operator[](Param p) const;

  ParameterSet with(Param p, double value) const {
    ParameterSet copy = *this;
    copy[p] = value;
    return copy;
  }

  // All constants finite and >= 0, omega in [0,1], tau > 0.
  void validate() const;

  bool operator==(const ParameterSet&) const = default;
};

// M1, M2 or M3. Unknown names throw InvalidParameters.
ParameterSet preset(std::string_view name);

/// One-dimensional file of n interior cells with unit walls.
///
/// Interior cells are 1..n, ghost cells -1, 0 (left) and n+1, n+2 (right).
struct CellRow {
  int n = 20;
  double wall_length = 1.0;

  CellRow() = default;
  explicit CellRow(int cells) : n(cells) { validate(); }

  void validate() const {
    if (n < 2) throw InvalidParameters("cell row needs at least 2 interior cells");
    if (wall_length != 1.0) throw InvalidParameters("only unit wall length is supported");
  }

  // Unknowns of the steady problem (p_1..p_n, a_1..a_n).
  int steady_size() const { return 2 * n; }
  // Variables of the time-dependent problem (p_0..p_{n+1}, a_1..a_n).
  int dynamic_size() const { return 2 * n + 2; }
};

/// Time-dependent state: PIN1 on cells 0..n+1 (the two tracked ghosts
/// included) followed by IAA on the interior cells 1..n.
class DynamicState {
 public:
  DynamicState() = default;
  explicit DynamicState(int n) : n_(n), x_(Eigen::VectorXd::Zero(2 * n + 2)) {}
  DynamicState(int n, Eigen::VectorXd packed);

  int cells() const { return n_; }

  // p(k) holds p_k for k = 0..n+1.
  auto p() { return x_.head(n_ + 2); }
  auto p() const { return x_.head(n_ + 2); }
  // a(i-1) holds a_i for i = 1..n.
  auto a() { return x_.tail(n_); }
  auto a() const { return x_.tail(n_); }

  Eigen::VectorXd& packed() { return x_; }
  const Eigen::VectorXd& packed() const { return x_; }

 private:
  int n_ = 0;
  Eigen::VectorXd x_;
};

// ---------------------------------------------------------------------------
// Scalar kernels

template <typename Scalar>
Scalar allocation_weight(const Scalar& a_j, const ParameterSet& prm) {
  using std::pow;
  if (prm.omega == 1.0) return pow(Scalar(prm.b), a_j);
  if (prm.omega == 0.0) return a_j;
  return prm.omega * pow(Scalar(prm.b), a_j) + (1.0 - prm.omega) * a_j;
}

// a^tau; integer exponents take the exact path, fractional exponents of a
// negative concentration are undefined and throw.
template <typename Scalar>
Scalar transport_power(const Scalar& a, double tau) {
  using std::pow;
  if (tau == 2.0) return a * a;
  if (tau == 1.0) return a;
  if (tau == std::round(tau)) return pow(a, tau);
  if (a < Scalar(0)) {
    throw DomainError("fractional transport exponent of a negative concentration");
  }
  return pow(a, tau);
}

/// PIN1-mediated flux from cell i into neighbour j.
///
/// `weight_sum` is the sum of allocation weights over the neighbours of i.
template <typename Scalar>
Scalar active_transport(const Scalar& p_i, const Scalar& a_i, const Scalar& a_j,
                        const Scalar& weight_sum, const ParameterSet& prm) {
  if (!(weight_sum > Scalar(0))) {
    throw DegenerateDenominator("active transport weight sum is not positive");
  }
  const Scalar a_j_tau = transport_power(a_j, prm.tau);
  return prm.t * p_i * allocation_weight(a_j, prm) / weight_sum * transport_power(a_i, prm.tau) /
         (1.0 + prm.kappa_t * a_j_tau);
}

// Steady PIN1 level of a cell whose IAA is a: the positive root of
// kappa_pin*mu_pin*p^2 + mu_pin*p - (rho_pin0 + rho_pin*a) = 0, written
// without cancellation.
template <typename Scalar>
Scalar steady_pin(const Scalar& a, const ParameterSet& prm) {
  using std::sqrt;
  const Scalar production = (prm.rho_pin0 + prm.rho_pin * a) / prm.mu_pin;
  return 2.0 * production / (1.0 + sqrt(1.0 + 4.0 * prm.kappa_pin * production));
}

template <typename Scalar>
Scalar pin_rate(const Scalar& p, const Scalar& a, const ParameterSet& prm) {
  return (prm.rho_pin0 + prm.rho_pin * a) / (1.0 + prm.kappa_pin * p) - prm.mu_pin * p;
}

namespace detail {

// IAA rate of change for every interior cell. `pin_at(k)` yields p_k for
// k = 0..n+1; `a` holds a_1..a_n. Ghost IAA is mirrored.
template <typename Scalar, typename PinAt>
void iaa_rates(const Eigen::Ref<const VectorX<Scalar>>& a, PinAt&& pin_at, const ParameterSet& prm,
               Eigen::Ref<VectorX<Scalar>> out) {
  const int n = static_cast<int>(a.size());
  // Extended arrays indexed by k + 1 for k = -1..n+2.
  VectorX<Scalar> ext(n + 4), weight(n + 4), power(n + 4);
  ext(0) = a(0);
  ext(1) = a(0);
  ext.segment(2, n) = a;
  ext(n + 2) = a(n - 1);
  ext(n + 3) = a(n - 1);
  for (int k = 0; k < n + 4; ++k) {
    weight(k) = allocation_weight(ext(k), prm);
    power(k) = transport_power(ext(k), prm.tau);
  }
  // Weight sum over the neighbours of cell k, k = 0..n+1.
  auto weight_sum = [&](int k) {
    const Scalar s = weight(k) + weight(k + 2);
    if (!(s > Scalar(0))) throw DegenerateDenominator("active transport weight sum is not positive");
    return s;
  };
  // Flux i -> j for |i - j| = 1, i in 0..n+1.
  auto flux = [&](int i, int j, const Scalar& sum_i) {
    return prm.t * pin_at(i) * weight(j + 1) / sum_i * power(i + 1) /
           (1.0 + prm.kappa_t * power(j + 1));
  };

  Scalar sum_prev = weight_sum(0);
  Scalar sum_here = weight_sum(1);
  for (int i = 1; i <= n; ++i) {
    const Scalar sum_next = weight_sum(i + 1);
    const Scalar ai = ext(i + 1);
    const Scalar left = ext(i);
    const Scalar right = ext(i + 2);
    Scalar rate = prm.rho_iaa / (1.0 + prm.kappa_iaa * ai) - prm.mu_iaa * ai -
                  prm.d * (ai - left) - prm.d * (ai - right);
    rate += flux(i - 1, i, sum_prev) - flux(i, i - 1, sum_here);
    rate += flux(i + 1, i, sum_next) - flux(i, i + 1, sum_here);
    out(i - 1) = rate;
    sum_prev = sum_here;
    sum_here = sum_next;
  }
}

}  // namespace detail

/// Time derivative of the full state; PIN rates cover the two ghosts.
template <typename Scalar>
VectorX<Scalar> dynamic_rhs(const Eigen::Ref<const VectorX<Scalar>>& state, const ParameterSet& prm) {
  const int n = static_cast<int>(state.size() - 2) / 2;
  const auto p = state.head(n + 2);
  const auto a = state.tail(n);
  VectorX<Scalar> out(state.size());
  for (int k = 0; k <= n + 1; ++k) {
    const Scalar& a_k = a(std::clamp(k, 1, n) - 1);
    out(k) = pin_rate(p(k), a_k, prm);
  }
  detail::iaa_rates<Scalar>(a, [&](int k) -> Scalar { return p(k); }, prm, out.tail(n));
  return out;
}

/// Steady residual F(u) for u = (p_1..p_n, a_1..a_n).
///
/// The ghost PIN values are eliminated through steady_pin() of the
/// mirrored neighbour IAA, so the system has exactly 2n unknowns.
template <typename Scalar>
VectorX<Scalar> steady_residual(const Eigen::Ref<const VectorX<Scalar>>& u, const ParameterSet& prm) {
  const int n = static_cast<int>(u.size()) / 2;
  const auto p = u.head(n);
  const auto a = u.tail(n);
  VectorX<Scalar> out(u.size());
  for (int i = 0; i < n; ++i) out(i) = pin_rate(p(i), a(i), prm);
  const Scalar ghost_left = steady_pin(a(0), prm);
  const Scalar ghost_right = steady_pin(a(n - 1), prm);
  detail::iaa_rates<Scalar>(
      a,
      [&](int k) -> Scalar {
        if (k == 0) return ghost_left;
        if (k == n + 1) return ghost_right;
        return p(k - 1);
      },
      prm, out.tail(n));
  return out;
}

// ---------------------------------------------------------------------------
// Double-precision entry points

DynamicState dynamic_rhs(const DynamicState& state, const CellRow& row, const ParameterSet& prm);
Eigen::VectorXd steady_residual(const Eigen::VectorXd& u, const CellRow& row, const ParameterSet& prm);

// Homogeneous steady state, independent of D, T, omega and tau.
// Throws DomainError for non-positive decay or saturation constants.
Eigen::VectorXd trivial_solution(const CellRow& row, const ParameterSet& prm);

// Dynamic state of a steady vector: ghost p from steady_pin().
DynamicState lift_to_dynamic(const Eigen::VectorXd& u, const ParameterSet& prm);
// Drops the ghost PIN values.
Eigen::VectorXd to_steady(const DynamicState& state);

// Cell i <-> n+1-i.
Eigen::VectorXd reflect_steady(const Eigen::VectorXd& u);
DynamicState reflect(const DynamicState& state);

}  // namespace auxin
