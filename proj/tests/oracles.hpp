// Independent oracles used by the test suites. Everything here is kept
// deliberately separate from the library's own computation paths:
// bisection instead of eigenvalues, moments instead of closed-form
// recurrence coefficients, finite differences instead of analytic
// derivatives.
#ifndef STIELTJES_TESTS_ORACLES_HPP
#define STIELTJES_TESTS_ORACLES_HPP

#include "stieltjes/orthopoly.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

using stieltjes::orthopoly::FamilyKind;
using stieltjes::orthopoly::PolynomialFamily;

// Monic polynomial value by the raw three-term recurrence, no derivatives.
inline double poly_value(const PolynomialFamily& fam, int n, double x) {
  double pm1 = 0.0, p0 = 1.0;
  for (int k = 0; k < n; ++k) {
    const auto [a, b] = stieltjes::orthopoly::recurrence_coefficients(fam, k);
    const double p1 = (x - a) * p0 - b * pm1;
    pm1 = p0;
    p0 = p1;
  }
  return p0;
}

// All n real roots by sign-change bisection on a bracketing grid.
inline std::vector<double> bisection_roots(const PolynomialFamily& fam, int n,
                                           double lo, double hi,
                                           int grid = 20000) {
  std::vector<double> roots;
  double prev_x = lo, prev_v = poly_value(fam, n, lo);
  for (int i = 1; i <= grid; ++i) {
    const double x = lo + (hi - lo) * i / grid;
    const double v = poly_value(fam, n, x);
    if (prev_v == 0.0) roots.push_back(prev_x);
    if (prev_v * v < 0.0) {
      double a = prev_x, b = x;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        if (poly_value(fam, n, a) * poly_value(fam, n, m) <= 0.0)
          b = m;
        else
          a = m;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_v = v;
  }
  return roots;
}

// Central finite differences of a scalar function of a vector.
inline Eigen::VectorXd fd_gradient(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h = 1e-6) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

inline Eigen::MatrixXd fd_jacobian(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h = 1e-6) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd j(f0.size(), x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    j.col(i) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return j;
}

inline Eigen::MatrixXd fd_hessian(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h = 1e-4) {
  const Eigen::Index n = x.size();
  Eigen::MatrixXd hess(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
      xpp[i] += h; xpp[j] += h;
      xpm[i] += h; xpm[j] -= h;
      xmp[i] -= h; xmp[j] += h;
      xmm[i] -= h; xmm[j] -= h;
      hess(i, j) = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4.0 * h * h);
    }
  }
  return hess;
}

// Weight-function moments mu_k = integral x^k w(x) dx (up to a common
// constant factor, which cancels in the recurrence coefficients).
inline std::vector<double> weight_moments(const PolynomialFamily& fam,
                                          int count) {
  std::vector<double> mu(count);
  switch (fam.kind) {
    case FamilyKind::Hermite:
      // mu_0 = sqrt(pi), mu_k = (k-1)/2 mu_{k-2}, odd moments vanish.
      mu[0] = std::sqrt(std::acos(-1.0));
      if (count > 1) mu[1] = 0.0;
      for (int k = 2; k < count; ++k) mu[k] = 0.5 * (k - 1) * mu[k - 2];
      break;
    case FamilyKind::Laguerre:
      // mu_k / mu_0 = (m+1)(m+2)...(m+k)
      mu[0] = 1.0;
      for (int k = 1; k < count; ++k)
        mu[k] = (fam.laguerre_m + k) * mu[k - 1];
      break;
    case FamilyKind::Jacobi: {
      // x = 2t - 1 turns the moment into a sum of Beta integrals.
      const double a = fam.alpha(), b = fam.beta();
      auto logbeta = [](double p, double q) {
        return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
      };
      for (int k = 0; k < count; ++k) {
        double sum = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
          const double term =
              binom * std::pow(2.0, j) * ((k - j) % 2 ? -1.0 : 1.0) *
              std::exp(logbeta(b + 1.0 + j, a + 1.0));
          sum += term;
          binom = binom * (k - j) / (j + 1.0);
        }
        mu[k] = sum;  // common factor 2^{a+b+1} dropped
      }
      break;
    }
  }
  return mu;
}

// Monic recurrence coefficients by raw Gram-Schmidt on the moment
// functional: a_k = <x p_k, p_k>/<p_k, p_k>, b_k = <p_k, p_k>/<p_{k-1}, p_{k-1}>.
// Numerically fragile beyond small k, which is all the oracle needs.
inline std::pair<double, double> moment_recurrence(const PolynomialFamily& fam,
                                                   int k) {
  const int count = 2 * (k + 2) + 2;
  const auto mu = weight_moments(fam, count);
  auto inner = [&](const std::vector<double>& u, const std::vector<double>& v,
                   int shift) {
    double s = 0.0;
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        s += u[i] * v[j] * mu[i + j + shift];
    return s;
  };
  std::vector<std::vector<double>> p = {{1.0}};
  double a = 0.0, b = 0.0;
  for (int i = 0; i <= k; ++i) {
    const auto& pi = p.back();
    const double norm2 = inner(pi, pi, 0);
    a = inner(pi, pi, 1) / norm2;
    if (i == 0) {
      b = 0.0;
    } else {
      const auto& pim1 = p[p.size() - 2];
      b = norm2 / inner(pim1, pim1, 0);
    }
    if (i == k) break;
    // p_{i+1} = (x - a) p_i - b p_{i-1}
    std::vector<double> next(pi.size() + 1, 0.0);
    for (size_t c = 0; c < pi.size(); ++c) {
      next[c + 1] += pi[c];
      next[c] -= a * pi[c];
    }
    if (i >= 1) {
      const auto& pim1 = p[p.size() - 2];
      for (size_t c = 0; c < pim1.size(); ++c) next[c] -= b * pim1[c];
    }
    p.push_back(std::move(next));
  }
  return {a, b};
}

}  // namespace oracles

#endif
