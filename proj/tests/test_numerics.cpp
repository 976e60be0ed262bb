#include "auxin/numerics.hpp"

#include <doctest.h>

#include <cmath>

using namespace auxin;

namespace {

Eigen::VectorXd trig_map(const Eigen::VectorXd& x) {
  Eigen::VectorXd f(3);
  f << std::sin(x(0)) * x(1), std::exp(x(1)) - x(2) * x(2), x(0) * x(1) * x(2);
  return f;
}

Eigen::MatrixXd trig_jacobian(const Eigen::VectorXd& x) {
  Eigen::MatrixXd j(3, 3);
  j << std::cos(x(0)) * x(1), std::sin(x(0)), 0,
       0, std::exp(x(1)), -2 * x(2),
       x(1) * x(2), x(0) * x(2), x(0) * x(1);
  return j;
}

}  // namespace

TEST_CASE("finite-difference Jacobian matches the analytic one") {
  const Eigen::Vector3d x(0.3, -0.7, 1.2);
  const Eigen::MatrixXd fd = fd_jacobian(trig_map, x, {});
  CHECK((fd - trig_jacobian(x)).lpNorm<Eigen::Infinity>() <= 1e-8);
}

TEST_CASE("non-finite residuals report the failing column") {
  auto bad = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd f = x;
    if (x(1) > 1.0) f(0) = NAN;
    return f;
  };
  const Eigen::Vector2d x(0.0, 1.0);
  try {
    fd_jacobian(bad, x, {});
    FAIL("expected ResidualEvaluationError");
  } catch (const ResidualEvaluationError& e) {
    CHECK(e.column == 1);
  }
}

TEST_CASE("Newton converges quadratically") {
  auto f = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(2);
    r << x(0) * x(0) + x(1) * x(1) - 4.0, x(0) - x(1);
    return r;
  };
  const NewtonResult r = newton_solve(f, Eigen::Vector2d(1.0, 0.5), {});
  CHECK(r.u(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.u(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.residual_norm <= 1e-10);
  REQUIRE(r.step_norms.size() >= 4);
  // e_{k+1} ~ C e_k^2: the last ratio of logs approaches 2.
  const auto& s = r.step_norms;
  const std::size_t k = s.size() - 2;
  CHECK(std::log(s[k]) / std::log(s[k - 1]) > 1.8);
}

TEST_CASE("Newton reports non-convergence") {
  auto f = [](const Eigen::VectorXd& x) { return Eigen::VectorXd::Constant(1, x(0) * x(0) + 1.0); };
  NumericsConfig cfg;
  cfg.newton_max_iter = 10;
  CHECK_THROWS_AS(newton_solve(f, Eigen::VectorXd::Constant(1, 0.5), cfg), NumericsError);
}

TEST_CASE("singular systems are refused") {
  Eigen::Matrix2d a;
  a << 1, 2, 2, 4;
  CHECK_THROWS_AS(solve_checked(a, Eigen::Vector2d(1, 1)), SingularJacobian);
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  CHECK(solve_checked(id, Eigen::Vector2d(3, 4)) == Eigen::VectorXd(Eigen::Vector2d(3, 4)));
}

TEST_CASE("spectrum is sorted and conjugate-paired") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(5, 5);
  a(0, 0) = -1.0;
  a.block(1, 1, 2, 2) << 0.5, 2.0, -2.0, 0.5;
  a(3, 3) = 3.0;
  a(4, 4) = -4.0;
  const Spectrum s = eigenvalues(a);
  for (Eigen::Index i = 0; i + 1 < s.size(); ++i) CHECK(s[i].real() >= s[i + 1].real());
  CHECK(s[0].real() == doctest::Approx(3.0));
  CHECK(s[1] == std::conj(s[2]));
  CHECK(std::abs(s[1].imag()) == doctest::Approx(2.0));

  const StabilityTag tag = classify_stability(s, {});
  CHECK_FALSE(tag.stable());
  CHECK(tag.unstable_count == 3);
  CHECK_FALSE(tag.leading_pair_complex);
  CHECK(determinant_sign(s) == (a.determinant() > 0 ? 1 : -1));
}

TEST_CASE("spectrum is invariant under similarity") {
  Eigen::MatrixXd a(4, 4);
  a << -1, 2, 0, 0.5, -3, -1, 1, 0, 0.2, 0, -2, 1, 0, 0.3, -1, -0.5;
  Eigen::MatrixXd t(4, 4);
  t << 2, 1, 0, 0, 0, 1, 1, 0, 1, 0, 3, 1, 0, 0, 1, 1;
  const Spectrum s1 = eigenvalues(a);
  const Spectrum s2 = eigenvalues(t * a * t.inverse());
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(s1[i] - s2[i]) <= 1e-10);
  CHECK(determinant_sign(s1) == (a.determinant() > 0 ? 1 : -1));
}

TEST_CASE("eigenvalues near zero count as stable") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
  a(0, 0) = 1e-10;
  a(1, 1) = -1.0;
  const StabilityTag tag = classify_stability(eigenvalues(a), {});
  CHECK(tag.stable());
  CHECK(tag.unstable_count == 0);
}

TEST_CASE("rank deficiency from singular values") {
  Eigen::MatrixXd a(3, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1;
  CHECK(rank_deficiency(a, {}) == 1);
  CHECK(rank_deficiency(Eigen::MatrixXd::Identity(3, 3), {}) == 0);
}

TEST_CASE("matrices and spectra serialize to JSON") {
  Eigen::Matrix2d a;
  a << 0, 1, -1, 0;
  const auto m = matrix_to_json(a);
  CHECK(m.size() == 2);
  CHECK(m[1][0] == -1.0);
  const auto s = spectrum_to_json(eigenvalues(a));
  CHECK(s.size() == 2);
}
