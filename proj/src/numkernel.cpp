#include "stieltjes/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace stieltjes::numkernel {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

}  // namespace

Eigen::VectorXd tridiag_eigenvalues(const SymTridiag& t) {
  const Eigen::Index n = t.diag.size();
  if (n < 1) throw std::invalid_argument("tridiag_eigenvalues: empty matrix");
  if (t.offdiag.size() != n - 1)
    throw std::invalid_argument(
        "tridiag_eigenvalues: offdiag length must be diag length - 1");
  if (!t.diag.allFinite() || !t.offdiag.allFinite())
    throw std::invalid_argument("tridiag_eigenvalues: non-finite input");

  Eigen::VectorXd d = t.diag;
  Eigen::VectorXd e(n);
  if (n > 1) e.head(n - 1) = t.offdiag;
  e[n - 1] = 0.0;

  // Implicit-shift QL, eigenvalues only (EISPACK tql1 lineage).
  for (Eigen::Index l = 0; l < n; ++l) {
    int iter = 0;
    Eigen::Index m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
          break;
      }
      if (m != l) {
        if (++iter == 50)
          throw std::runtime_error(
              "tridiag_eigenvalues: QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        Eigen::Index i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::sort(d.begin(), d.end());
  return d;
}

NewtonResult newton_solve(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& jacobian,
    const Eigen::VectorXd& x0, const NewtonOptions& opts) {
  if (opts.max_iter < 1)
    throw std::invalid_argument("newton_solve: max_iter must be >= 1");
  if (!(opts.residual_tol > 0.0))
    throw std::invalid_argument("newton_solve: residual_tol must be > 0");
  if (!(opts.step_damping > 0.0 && opts.step_damping <= 1.0))
    throw std::invalid_argument("newton_solve: step_damping must be in (0,1]");

  const Eigen::Index n = x0.size();

  auto admissible = [&](const Eigen::VectorXd& x, double min_gap) {
    if (!x.allFinite()) return false;
    if (!opts.ordering_guard) return true;
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      if (!(x[i + 1] - x[i] >= opts.ordering_margin * min_gap)) return false;
    if (opts.lower && !(x.minCoeff() > *opts.lower)) return false;
    if (opts.upper && !(x.maxCoeff() < *opts.upper)) return false;
    return true;
  };

  Eigen::VectorXd x = x0;
  std::vector<double> history;
  Eigen::VectorXd best = x;
  double best_norm = std::numeric_limits<double>::infinity();

  for (int it = 0; it < opts.max_iter; ++it) {
    const Eigen::VectorXd r = residual(x);
    const double rnorm = r.norm();
    history.push_back(rnorm);
    if (rnorm < best_norm) {
      best_norm = rnorm;
      best = x;
    }
    if (rnorm <= opts.residual_tol) return {x, it, rnorm, std::move(history)};

    const Eigen::MatrixXd j = jacobian(x);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(j);
    const Eigen::VectorXd dx = lu.solve(-r);
    if (!dx.allFinite() || (j * dx + r).norm() > 1e-6 * (rnorm + 1.0))
      throw NewtonFailure("newton_solve: singular Jacobian", x, rnorm,
                          std::move(history));

    double min_gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i + 1 < n; ++i)
      min_gap = std::min(min_gap, x[i + 1] - x[i]);

    double scale = opts.step_damping;
    Eigen::VectorXd xn = x + scale * dx;
    while (!admissible(xn, min_gap) && scale > 1e-12) {
      scale *= 0.5;
      xn = x + scale * dx;
    }
    if (!admissible(xn, min_gap))
      throw NewtonFailure("newton_solve: step search failed to find an admissible step",
                          best, best_norm, std::move(history));
    x = xn;
    if (opts.on_iterate) opts.on_iterate(x);
  }

  const double final_norm = residual(x).norm();
  history.push_back(final_norm);
  if (final_norm <= opts.residual_tol) {
    return {x, opts.max_iter, final_norm, std::move(history)};
  }
  if (final_norm < best_norm) {
    best_norm = final_norm;
    best = x;
  }
  throw NewtonFailure("newton_solve: no convergence in " +
                          std::to_string(opts.max_iter) + " iterations",
                      best, best_norm, std::move(history));
}

double symmetric_min_eigenvalue(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n < 1)
    throw std::invalid_argument("symmetric_min_eigenvalue: matrix must be square");
  const double scale = m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument("symmetric_min_eigenvalue: matrix is not symmetric");

  Eigen::MatrixXd a = 0.5 * (m + m.transpose());

  // Cyclic Jacobi sweeps until the off-diagonal norm is negligible.
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-14 * std::max(scale, 1.0)) break;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(
            1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0)), theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  return a.diagonal().minCoeff();
}

std::complex<double> contour_integral(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const ClosedCurve& c) {
  if (c.points < 64 || c.points % 2 != 0)
    throw std::invalid_argument("contour_integral: points must be even and >= 64");
  if (!(c.semi_axis_real > 0.0 && c.semi_axis_imag > 0.0))
    throw std::invalid_argument("contour_integral: semi-axes must be positive");

  const int n = c.points;
  const double dt = 2.0 * std::numbers::pi / n;
  std::complex<double> sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = j * dt;
    const std::complex<double> z(c.center + c.semi_axis_real * std::cos(t),
                                 c.semi_axis_imag * std::sin(t));
    const std::complex<double> dz(-c.semi_axis_real * std::sin(t),
                                  c.semi_axis_imag * std::cos(t));
    const std::complex<double> fv = f(z);
    if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
      throw std::runtime_error(
          "contour_integral: non-finite sample at parameter t=" +
          std::to_string(t));
    sum += fv * dz;
  }
  return sum * dt;
}

}  // namespace stieltjes::numkernel
