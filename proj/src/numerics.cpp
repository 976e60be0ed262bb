#include "auxin/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace auxin {

void NumericsConfig::validate() const {
  if (!(fd_epsilon > 0.0) || !(newton_tol > 0.0) || !(eig_zero_tol > 0.0) || !(rank_tol > 0.0)) {
    throw std::invalid_argument("numerics tolerances must be positive");
  }
  if (newton_max_iter < 1) throw std::invalid_argument("newton_max_iter must be >= 1");
}

Eigen::VectorXd solve_checked(const Eigen::MatrixXd& jac, const Eigen::VectorXd& rhs) {
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
  const double scale = jac.cwiseAbs().rowwise().sum().maxCoeff();
  const double smallest_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(smallest_pivot >= 1e-12 * scale)) {
    throw SingularJacobian("pivot " + std::to_string(smallest_pivot) + " below 1e-12 * ||J||_inf");
  }
  return lu.solve(rhs);
}

Spectrum eigenvalues(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols()) throw NumericsError("eigenvalues need a square matrix");
  if (!matrix.allFinite()) throw NumericsError("eigenvalues of a non-finite matrix");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(matrix, /* computeEigenvectors = */ false);
  if (solver.info() != Eigen::Success) throw NumericsError("QR iteration did not converge");
  std::vector<std::complex<double>> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(values.begin(), values.end(), [](const auto& x, const auto& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  Spectrum s;
  s.values = Eigen::Map<Eigen::VectorXcd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return s;
}

StabilityTag classify_stability(const Spectrum& spectrum, const NumericsConfig& cfg) {
  StabilityTag tag;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i].real() > cfg.eig_zero_tol) ++tag.unstable_count;
  }
  if (tag.unstable_count > 0) {
    tag.kind = Stability::Unstable;
    tag.leading_pair_complex = std::abs(spectrum[0].imag()) > cfg.eig_zero_tol;
  }
  return tag;
}

int determinant_sign(const Spectrum& spectrum) {
  int sign = 1;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    if (spectrum[i].imag() == 0.0 && spectrum[i].real() < 0.0) sign = -sign;
  }
  return sign;
}

int rank_deficiency(const Eigen::MatrixXd& matrix, const NumericsConfig& cfg) {
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = cfg.rank_tol * sv(0);
  return static_cast<int>((sv.array() < cutoff).count());
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& matrix) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) row.push_back(matrix(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json spectrum_to_json(const Spectrum& spectrum) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    out.push_back({spectrum[i].real(), spectrum[i].imag()});
  }
  return out;
}

}  // namespace auxin
