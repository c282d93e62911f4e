#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stieltjes/numkernel.hpp"
#include "stieltjes/orthopoly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace stieltjes;
using numkernel::ClosedCurve;
using numkernel::SymTridiag;

TEST_CASE("tridiag: 1x1") {
  SymTridiag t;
  t.diag.resize(1);
  t.diag << 5.0;
  t.offdiag.resize(0);
  const auto ev = numkernel::tridiag_eigenvalues(t);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0] == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("tridiag: 2x2 with zero diagonal") {
  SymTridiag t;
  t.diag = Eigen::VectorXd::Zero(2);
  t.offdiag.resize(1);
  t.offdiag << std::sqrt(0.5);
  const auto ev = numkernel::tridiag_eigenvalues(t);
  // characteristic polynomial lambda^2 - 1/2
  CHECK(ev[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("tridiag: Hermite n=3 Jacobi matrix vs bisection oracle") {
  SymTridiag t;
  t.diag = Eigen::VectorXd::Zero(3);
  t.offdiag.resize(2);
  t.offdiag << std::sqrt(0.5), 1.0;
  const auto ev = numkernel::tridiag_eigenvalues(t);

  const auto fam = orthopoly::PolynomialFamily::hermite();
  const auto roots = oracles::bisection_roots(fam, 3, -4.0, 4.0);
  REQUIRE(roots.size() == 3);
  for (int k = 0; k < 3; ++k)
    CHECK(ev[k] == doctest::Approx(roots[k]).epsilon(1e-12));
}

TEST_CASE("tridiag: rejects non-finite input and bad shapes") {
  SymTridiag t;
  t.diag.resize(2);
  t.diag << 0.0, std::numeric_limits<double>::quiet_NaN();
  t.offdiag.resize(1);
  t.offdiag << 1.0;
  CHECK_THROWS_AS(numkernel::tridiag_eigenvalues(t), std::invalid_argument);
  t.diag << 0.0, 0.0;
  t.offdiag.resize(2);
  t.offdiag << 1.0, 1.0;
  CHECK_THROWS_AS(numkernel::tridiag_eigenvalues(t), std::invalid_argument);
}

TEST_CASE("tridiag: residual of each eigenvalue") {
  // random symmetric tridiagonal, check det(T - lambda I) small via
  // the Sturm recurrence scale
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const int n = 25;
  SymTridiag t;
  t.diag.resize(n);
  t.offdiag.resize(n - 1);
  for (int i = 0; i < n; ++i) t.diag[i] = u(rng);
  for (int i = 0; i < n - 1; ++i) t.offdiag[i] = u(rng);
  const auto ev = numkernel::tridiag_eigenvalues(t);
  const double scale =
      t.diag.cwiseAbs().maxCoeff() + t.offdiag.cwiseAbs().maxCoeff();
  Eigen::MatrixXd dense = t.diag.asDiagonal();
  for (int i = 0; i < n - 1; ++i)
    dense(i, i + 1) = dense(i + 1, i) = t.offdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  for (int k = 0; k < n; ++k)
    CHECK(std::abs(ev[k] - es.eigenvalues()[k]) <= 1e-13 * scale);
}

TEST_CASE("newton: linear system in one step") {
  auto res = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd{(Eigen::VectorXd(1) << x[0] - 3.0).finished()};
  };
  auto jac = [](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(1, 1);
  };
  const auto r = numkernel::newton_solve(res, jac, Eigen::VectorXd::Zero(1));
  CHECK(r.x[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r.iterations == 1);
}

TEST_CASE("newton: sqrt(2) from x0=1") {
  auto res = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd{(Eigen::VectorXd(1) << x[0] * x[0] - 2.0).finished()};
  };
  auto jac = [](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd{(Eigen::MatrixXd(1, 1) << 2.0 * x[0]).finished()};
  };
  const auto r = numkernel::newton_solve(res, jac, Eigen::VectorXd::Ones(1));
  CHECK(std::abs(r.x[0] - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("newton: Hermite n=2 equilibrium system") {
  // gradient of the two-charge log-gas in the harmonic field
  auto res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(2);
    g[0] = -1.0 / (x[0] - x[1]) + x[0];
    g[1] = -1.0 / (x[1] - x[0]) + x[1];
    return g;
  };
  auto jac = [](const Eigen::VectorXd& x) {
    const double inv2 = 1.0 / ((x[0] - x[1]) * (x[0] - x[1]));
    Eigen::MatrixXd h(2, 2);
    h << inv2 + 1.0, -inv2, -inv2, inv2 + 1.0;
    return h;
  };
  Eigen::VectorXd x0(2);
  x0 << -1.0, 1.0;
  numkernel::NewtonOptions opts;
  opts.ordering_guard = true;
  const auto r = numkernel::newton_solve(res, jac, x0, opts);
  const double a = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(r.x[0] + a) <= 1e-12);
  CHECK(std::abs(r.x[1] - a) <= 1e-12);
}

TEST_CASE("newton: supplied Jacobians agree with finite differences") {
  // the Newton systems constructed in this test binary
  auto res = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(2);
    g[0] = -1.0 / (x[0] - x[1]) + x[0];
    g[1] = -1.0 / (x[1] - x[0]) + x[1];
    return g;
  };
  auto jac = [](const Eigen::VectorXd& x) {
    const double inv2 = 1.0 / ((x[0] - x[1]) * (x[0] - x[1]));
    Eigen::MatrixXd h(2, 2);
    h << inv2 + 1.0, -inv2, -inv2, inv2 + 1.0;
    return h;
  };
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd x(2);
    x << u(rng), u(rng);
    if (std::abs(x[0] - x[1]) < 0.2) continue;
    std::sort(x.begin(), x.end());
    const auto fd = oracles::fd_jacobian(res, x);
    const auto an = jac(x);
    CHECK((fd - an).cwiseAbs().maxCoeff() <=
          1e-6 * std::max(1.0, an.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("newton: non-convergence carries the best iterate") {
  // atan(x) = 2 has no solution; the iteration can never converge
  auto res = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd{(Eigen::VectorXd(1) << std::atan(x[0]) - 2.0).finished()};
  };
  auto jac = [](const Eigen::VectorXd& x) {
    return Eigen::MatrixXd{
        (Eigen::MatrixXd(1, 1) << 1.0 / (1.0 + x[0] * x[0])).finished()};
  };
  numkernel::NewtonOptions opts;
  opts.max_iter = 5;
  bool threw = false;
  try {
    numkernel::newton_solve(res, jac, Eigen::VectorXd::Zero(1), opts);
  } catch (const numkernel::NewtonFailure& f) {
    threw = true;
    CHECK(f.best.size() == 1);
    CHECK(!f.residual_history.empty());
  }
  CHECK(threw);
}

TEST_CASE("jacobi eigenvalues: diagonal and 2x2 by hand") {
  Eigen::MatrixXd d = Eigen::Vector2d(2.0, 5.0).asDiagonal();
  CHECK(numkernel::symmetric_min_eigenvalue(d) == doctest::Approx(2.0));
  Eigen::MatrixXd m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  CHECK(numkernel::symmetric_min_eigenvalue(m) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("jacobi eigenvalues: rejects asymmetric input") {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(numkernel::symmetric_min_eigenvalue(m), std::invalid_argument);
}

TEST_CASE("jacobi eigenvalues: random symmetric vs tridiag route") {
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  const int n = 12;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  const double lam = numkernel::symmetric_min_eigenvalue(sym);
  // independent check through Eigen's solver
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  CHECK(lam == doctest::Approx(es.eigenvalues().minCoeff()).epsilon(1e-10));
}

TEST_CASE("contour: 1/z around the unit circle") {
  ClosedCurve c{0.0, 1.0, 1.0, 256};
  const auto v = numkernel::contour_integral(
      [](std::complex<double> z) { return 1.0 / z; }, c);
  CHECK(std::abs(v - std::complex<double>(0.0, 2.0 * std::numbers::pi)) <= 1e-10);
}

TEST_CASE("contour: entire integrand vanishes") {
  ClosedCurve c{0.7, 2.0, 1.0, 128};
  const auto v = numkernel::contour_integral(
      [](std::complex<double> z) { return z * z; }, c);
  CHECK(std::abs(v) <= 1e-10);
}

TEST_CASE("contour: rational integrand equals 2 pi i times enclosed residues") {
  // f(z) = 3/(z-1) + 2/(z+2) - 5/(z-10); the curve encloses 1 and -2 only
  ClosedCurve c{0.0, 4.0, 2.0, 512};
  const auto v = numkernel::contour_integral(
      [](std::complex<double> z) {
        return 3.0 / (z - 1.0) + 2.0 / (z + 2.0) - 5.0 / (z - 10.0);
      },
      c);
  const std::complex<double> expect(0.0, 2.0 * std::numbers::pi * 5.0);
  CHECK(std::abs(v - expect) <= 1e-9);
}

TEST_CASE("contour: rejects poles on the curve") {
  ClosedCurve c{0.0, 1.0, 1.0, 64};
  CHECK_THROWS(numkernel::contour_integral(
      [](std::complex<double> z) { return 1.0 / (z - 1.0); }, c));
}
