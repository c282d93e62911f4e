#include "stieltjes/orthopoly.hpp"

#include "stieltjes/numkernel.hpp"

#include <cmath>

namespace stieltjes::orthopoly {

PolynomialFamily PolynomialFamily::hermite() {
  return {FamilyKind::Hermite, 0.0, 0.0, 0.0};
}

PolynomialFamily PolynomialFamily::laguerre(double m) {
  if (!(m > -1.0))
    throw std::invalid_argument("PolynomialFamily: Laguerre requires m > -1");
  return {FamilyKind::Laguerre, m, 0.0, 0.0};
}

PolynomialFamily PolynomialFamily::jacobi(double p, double q) {
  if (!(p > 0.0 && q > 0.0))
    throw std::invalid_argument("PolynomialFamily: Jacobi requires p, q > 0");
  return {FamilyKind::Jacobi, 0.0, p, q};
}

RecurrencePair recurrence_coefficients(const PolynomialFamily& fam, int k) {
  if (k < 0) throw std::invalid_argument("recurrence_coefficients: k >= 0");
  switch (fam.kind) {
    case FamilyKind::Hermite:
      // weight e^{-x^2}
      return {0.0, k == 0 ? 0.0 : 0.5 * k};
    case FamilyKind::Laguerre: {
      const double m = fam.laguerre_m;
      return {2.0 * k + m + 1.0, k == 0 ? 0.0 : k * (k + m)};
    }
    case FamilyKind::Jacobi: {
      const double a = fam.alpha(), b = fam.beta();
      const double s = a + b;
      // k = 0 needs the cancelled form of a_k: the generic denominator
      // s (s + 2) vanishes when alpha + beta = 0.
      const double ak = k == 0 ? (b - a) / (s + 2.0)
                               : (b * b - a * a) /
                                     ((2.0 * k + s) * (2.0 * k + s + 2.0));
      double bk;
      if (k == 0) {
        bk = 0.0;
      } else if (k == 1) {
        // (1 + s) cancels against the generic numerator factor (k + s).
        bk = 4.0 * (1.0 + a) * (1.0 + b) /
             ((2.0 + s) * (2.0 + s) * (3.0 + s));
      } else {
        const double w = 2.0 * k + s;
        bk = 4.0 * k * (k + a) * (k + b) * (k + s) /
             (w * w * (w + 1.0) * (w - 1.0));
      }
      return {ak, bk};
    }
  }
  throw std::logic_error("recurrence_coefficients: unknown family");
}

Eval<double> evaluate(const PolynomialFamily& fam, int n, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("evaluate: x must be finite");
  return evaluate_monic<double>(fam, n, x);
}

ZeroSet zeros(const PolynomialFamily& fam, int n) {
  if (n < 1) throw std::invalid_argument("zeros: n must be >= 1");
  numkernel::SymTridiag jm;
  jm.diag.resize(n);
  jm.offdiag.resize(n - 1);
  for (int k = 0; k < n; ++k) {
    const auto [a, b] = recurrence_coefficients(fam, k);
    jm.diag[k] = a;
    if (k >= 1) jm.offdiag[k - 1] = std::sqrt(b);
  }
  Eigen::VectorXd x = numkernel::tridiag_eigenvalues(jm);
  // One Newton polish per zero; the Jacobi-matrix eigenvalues are already
  // accurate so a single step lands on the fixed point.
  for (int k = 0; k < n; ++k) {
    const auto e = evaluate(fam, n, x[k]);
    if (e.d1 != 0.0) x[k] -= e.value / e.d1;
  }
  std::sort(x.begin(), x.end());
  return {n, std::move(x), fam};
}

double ode_residual(const PolynomialFamily& fam, int n, double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("ode_residual: x must be finite");
  const auto e = evaluate(fam, n, x);
  switch (fam.kind) {
    case FamilyKind::Hermite:
      return std::abs(e.d2 - 2.0 * x * e.d1 + 2.0 * n * e.value);
    case FamilyKind::Laguerre:
      return std::abs(x * e.d2 + (fam.laguerre_m + 1.0 - x) * e.d1 +
                      n * e.value);
    case FamilyKind::Jacobi: {
      const double a = fam.alpha(), b = fam.beta();
      return std::abs((1.0 - x * x) * e.d2 +
                      (b - a - (a + b + 2.0) * x) * e.d1 +
                      n * (n + a + b + 1.0) * e.value);
    }
  }
  throw std::logic_error("ode_residual: unknown family");
}

}  // namespace stieltjes::orthopoly
