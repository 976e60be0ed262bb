#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

namespace auxin {

struct NumericsConfig {
  double fd_epsilon = 1e-7;
  double newton_tol = 1e-10;
  int newton_max_iter = 50;
  double eig_zero_tol = 1e-8;
  double rank_tol = 1e-8;

  void validate() const;
};

struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResidualEvaluationError : NumericsError {
  ResidualEvaluationError(int column, const std::string& what)
      : NumericsError("residual evaluation failed at column " + std::to_string(column) + ": " + what),
        column(column) {}
  int column;
};

struct NonConvergence : NumericsError {
  using NumericsError::NumericsError;
};

// Linear solve met a pivot below 1e-12 * ||J||_inf.
struct SingularJacobian : NumericsError {
  using NumericsError::NumericsError;
};

/// Eigenvalues sorted by descending real part, ties by descending imaginary part.
struct Spectrum {
  Eigen::VectorXcd values;

  Eigen::Index size() const { return values.size(); }
  const std::complex<double>& operator[](Eigen::Index i) const { return values(i); }
  std::complex<double> leading() const { return values(0); }
};

enum class Stability { Stable, Unstable };

struct StabilityTag {
  Stability kind = Stability::Stable;
  int unstable_count = 0;
  // Rightmost unstable eigenvalue belongs to a conjugate pair.
  bool leading_pair_complex = false;

  bool stable() const { return kind == Stability::Stable; }
  bool operator==(const StabilityTag&) const = default;
};

/// Central-difference Jacobian, column j = (F(u + eps e_j) - F(u - eps e_j)) / (2 eps).
template <typename Residual>
Eigen::MatrixXd fd_jacobian(Residual&& residual, const Eigen::VectorXd& u, const NumericsConfig& cfg) {
  const double eps = cfg.fd_epsilon;
  Eigen::VectorXd shifted = u;
  Eigen::MatrixXd jac;
  for (Eigen::Index j = 0; j < u.size(); ++j) {
    Eigen::VectorXd plus, minus;
    try {
      shifted(j) = u(j) + eps;
      plus = residual(shifted);
      shifted(j) = u(j) - eps;
      minus = residual(shifted);
    } catch (const std::exception& e) {
      throw ResidualEvaluationError(static_cast<int>(j), e.what());
    }
    shifted(j) = u(j);
    if (!plus.allFinite() || !minus.allFinite()) {
      throw ResidualEvaluationError(static_cast<int>(j), "non-finite residual");
    }
    if (j == 0) jac.resize(plus.size(), u.size());
    jac.col(j) = (plus - minus) / (2.0 * eps);
  }
  return jac;
}

// Dense LU with partial pivoting; throws SingularJacobian on a tiny pivot.
Eigen::VectorXd solve_checked(const Eigen::MatrixXd& jac, const Eigen::VectorXd& rhs);

struct NewtonResult {
  Eigen::VectorXd u;
  int iterations = 0;
  double residual_norm = 0.0;
  // Infinity norm of every Newton update, in order.
  std::vector<double> step_norms;
};

/// Newton iteration with a finite-difference Jacobian, stopping once
/// ||F(u)||_inf <= newton_tol.
template <typename Residual>
NewtonResult newton_solve(Residual&& residual, const Eigen::VectorXd& u0, const NumericsConfig& cfg) {
  NewtonResult out;
  out.u = u0;
  for (int it = 0;; ++it) {
    Eigen::VectorXd f = residual(out.u);
    out.residual_norm = f.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(out.residual_norm)) {
      throw NonConvergence("Newton residual is not finite after " + std::to_string(it) + " iterations");
    }
    if (out.residual_norm <= cfg.newton_tol) return out;
    if (it == cfg.newton_max_iter) {
      throw NonConvergence("Newton did not converge in " + std::to_string(it) +
                           " iterations (residual " + std::to_string(out.residual_norm) + ")");
    }
    const Eigen::VectorXd step = solve_checked(fd_jacobian(residual, out.u, cfg), -f);
    out.u += step;
    out.step_norms.push_back(step.lpNorm<Eigen::Infinity>());
    out.iterations = it + 1;
  }
}

// Full spectrum of a real square matrix via real Schur reduction.
Spectrum eigenvalues(const Eigen::MatrixXd& matrix);

StabilityTag classify_stability(const Spectrum& spectrum, const NumericsConfig& cfg);

// Sign of the determinant: the product of the signs of the real eigenvalues.
int determinant_sign(const Spectrum& spectrum);

// Number of singular values below rank_tol * largest.
int rank_deficiency(const Eigen::MatrixXd& matrix, const NumericsConfig& cfg);

nlohmann::json matrix_to_json(const Eigen::MatrixXd& matrix);
nlohmann::json spectrum_to_json(const Spectrum& spectrum);

}  // namespace auxin
