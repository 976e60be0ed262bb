#include "auxin/model.hpp"

#include <cmath>

namespace auxin {

namespace {

constexpr std::array<std::string_view, 13> kNames = {
    "b",      "kappa_pin", "kappa_t", "kappa_iaa", "rho_pin0", "rho_pin", "mu_pin",
    "mu_iaa", "rho_iaa",   "d",       "t",         "omega",    "tau"};

}  // namespace

std::string_view param_name(Param p) { return kNames[static_cast<std::size_t>(p)]; }

Param param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllParams[i];
  }
  std::string valid;
  for (auto n : kNames) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw InvalidParameters("unknown parameter '" + std::string(name) + "' (valid: " + valid + ")");
}

double& ParameterSet::operator[](Param p) {
  switch (p) {
    case Param::b: return b;
    case Param::kappa_pin: return kappa_pin;
    case Param::kappa_t: return kappa_t;
    case Param::kappa_iaa: return kappa_iaa;
    case Param::rho_pin0: return rho_pin0;
    case Param::rho_pin: return rho_pin;
    case Param::mu_pin: return mu_pin;
    case Param::mu_iaa: return mu_iaa;
    case Param::rho_iaa: return rho_iaa;
    case Param::d: return d;
    case Param::t: return t;
    case Param::omega: return omega;
    case Param::tau: return tau;
  }
  throw InvalidParameters("invalid parameter id");
}

double ParameterSet::operator[](Param p) const { return const_cast<ParameterSet&>(*this)[p]; }

void ParameterSet::validate() const {
  for (Param p : kAllParams) {
    const double v = (*this)[p];
    if (!std::isfinite(v)) {
      throw InvalidParameters("parameter " + std::string(param_name(p)) + " is not finite");
    }
    if (v < 0.0) {
      throw InvalidParameters("parameter " + std::string(param_name(p)) + " is negative");
    }
  }
  if (omega > 1.0) throw InvalidParameters("omega must lie in [0, 1]");
  if (tau <= 0.0) throw InvalidParameters("tau must be positive");
}

ParameterSet preset(std::string_view name) {
  ParameterSet prm;  // M2
  if (name == "M1") {
    prm.rho_iaa = 1.5;
  } else if (name == "M2") {
    prm.rho_iaa = 0.75;
  } else if (name == "M3") {
    prm.rho_iaa = 0.5;
  } else {
    throw InvalidParameters("unknown preset '" + std::string(name) + "' (valid: M1, M2, M3)");
  }
  return prm;
}

DynamicState::DynamicState(int n, Eigen::VectorXd packed) : n_(n), x_(std::move(packed)) {
  if (x_.size() != 2 * n + 2) throw ModelError("dynamic state must have 2n+2 entries");
}

DynamicState dynamic_rhs(const DynamicState& state, const CellRow& row, const ParameterSet& prm) {
  if (state.cells() != row.n) throw ModelError("state and cell row disagree on n");
  return DynamicState(row.n, dynamic_rhs<double>(state.packed(), prm));
}

Eigen::VectorXd steady_residual(const Eigen::VectorXd& u, const CellRow& row, const ParameterSet& prm) {
  if (u.size() != row.steady_size()) throw ModelError("steady vector must have 2n entries");
  return steady_residual<double>(u, prm);
}

Eigen::VectorXd trivial_solution(const CellRow& row, const ParameterSet& prm) {
  if (!(prm.mu_pin > 0.0) || !(prm.mu_iaa > 0.0)) {
    throw DomainError("trivial solution needs positive decay constants");
  }
  if (!(prm.kappa_pin > 0.0) || !(prm.kappa_iaa > 0.0)) {
    throw DomainError("trivial solution needs positive saturation constants");
  }
  const double k = prm.kappa_iaa;
  const double a_star = (-1.0 + std::sqrt(1.0 + 4.0 * k * prm.rho_iaa / prm.mu_iaa)) / (2.0 * k);
  const double kp = prm.kappa_pin;
  const double p_star =
      (-1.0 + std::sqrt(1.0 + 4.0 * kp * (prm.rho_pin0 + prm.rho_pin * a_star) / prm.mu_pin)) /
      (2.0 * kp);
  Eigen::VectorXd u(row.steady_size());
  u.head(row.n).setConstant(p_star);
  u.tail(row.n).setConstant(a_star);
  return u;
}

DynamicState lift_to_dynamic(const Eigen::VectorXd& u, const ParameterSet& prm) {
  const int n = static_cast<int>(u.size()) / 2;
  DynamicState s(n);
  s.p()(0) = steady_pin(u(n), prm);
  s.p().segment(1, n) = u.head(n);
  s.p()(n + 1) = steady_pin(u(2 * n - 1), prm);
  s.a() = u.tail(n);
  return s;
}

Eigen::VectorXd to_steady(const DynamicState& state) {
  const int n = state.cells();
  Eigen::VectorXd u(2 * n);
  u.head(n) = state.p().segment(1, n);
  u.tail(n) = state.a();
  return u;
}

Eigen::VectorXd reflect_steady(const Eigen::VectorXd& u) {
  const auto n = u.size() / 2;
  Eigen::VectorXd r(u.size());
  r.head(n) = u.head(n).reverse();
  r.tail(n) = u.tail(n).reverse();
  return r;
}

DynamicState reflect(const DynamicState& state) {
  DynamicState r(state.cells());
  r.p() = state.p().reverse();
  r.a() = state.a().reverse();
  return r;
}

}  // namespace auxin
