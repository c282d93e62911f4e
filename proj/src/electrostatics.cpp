#include "stieltjes/electrostatics.hpp"

#include "stieltjes/numkernel.hpp"

#include <cmath>
#include <numbers>

namespace stieltjes::electro {

using orthopoly::FamilyKind;
using orthopoly::PolynomialFamily;

double FieldSpec::value(double x) const {
  double f = c0 + c1 * x;
  for (const auto& p : poles) f += p.strength / (x - p.location);
  return f;
}

double FieldSpec::derivative(double x) const {
  double f = c1;
  for (const auto& p : poles) {
    const double d = x - p.location;
    f -= p.strength / (d * d);
  }
  return f;
}

double FieldSpec::potential(double x) const {
  double u = c0 * x + 0.5 * c1 * x * x;
  for (const auto& p : poles) u += p.strength * std::log(std::abs(x - p.location));
  return u;
}

std::complex<double> FieldSpec::value(std::complex<double> z) const {
  std::complex<double> f = c0 + c1 * z;
  for (const auto& p : poles) f += p.strength / (z - p.location);
  return f;
}

FieldSpec field_for_family(const PolynomialFamily& fam) {
  FieldSpec f;
  switch (fam.kind) {
    case FamilyKind::Hermite:
      f.c1 = 1.0;
      break;
    case FamilyKind::Laguerre:
      f.c0 = 0.5;
      f.poles.push_back({0.0, -(fam.laguerre_m + 1.0) / 2.0});
      break;
    case FamilyKind::Jacobi:
      f.poles.push_back({1.0, -fam.jacobi_p});
      f.poles.push_back({-1.0, -fam.jacobi_q});
      break;
  }
  return f;
}

namespace {

void check_admissible(const ChargeConfiguration& cfg, const FieldSpec& field) {
  const auto& x = cfg.positions;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] < x[i + 1]))
      throw SingularConfigError("configuration positions must be strictly increasing");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] > cfg.lower && x[i] < cfg.upper))
      throw SingularConfigError("charge outside the open interval");
    for (const auto& p : field.poles)
      if (x[i] == p.location)
        throw SingularConfigError("charge coincides with a field pole");
  }
}

}  // namespace

double energy(const ChargeConfiguration& cfg, const FieldSpec& field) {
  check_admissible(cfg, field);
  const auto& x = cfg.positions;
  double e = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
      e -= std::log(std::abs(x[i] - x[j]));
    e += field.potential(x[i]);
  }
  return e;
}

Eigen::VectorXd gradient(const ChargeConfiguration& cfg, const FieldSpec& field) {
  check_admissible(cfg, field);
  const auto& x = cfg.positions;
  const Eigen::Index n = x.size();
  Eigen::VectorXd g(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < n; ++j)
      if (j != k) s += 1.0 / (x[k] - x[j]);
    g[k] = -s + field.value(x[k]);
  }
  return g;
}

Eigen::MatrixXd hessian(const ChargeConfiguration& cfg, const FieldSpec& field) {
  check_admissible(cfg, field);
  const auto& x = cfg.positions;
  const Eigen::Index n = x.size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double diag = field.derivative(x[k]);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == k) continue;
      const double d = x[k] - x[j];
      const double inv2 = 1.0 / (d * d);
      h(k, j) = -inv2;
      diag += inv2;
    }
    h(k, k) = diag;
  }
  return h;
}

Eigen::VectorXd default_initializer(const PolynomialFamily& fam, int n) {
  Eigen::VectorXd x(n);
  switch (fam.kind) {
    case FamilyKind::Hermite: {
      const double scale = std::sqrt(2.0 * n + 1.0);
      for (int k = 0; k < n; ++k)
        x[k] = -scale *
               std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
      break;
    }
    case FamilyKind::Laguerre: {
      const double m = fam.laguerre_m;
      for (int k = 1; k <= n; ++k)
        x[k - 1] = 0.5 * k * (4.0 * n + 2.0 * m) / (n + 1.0);
      break;
    }
    case FamilyKind::Jacobi:
      for (int k = 0; k < n; ++k)
        x[k] = -std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
      break;
  }
  return x;
}

namespace {

Eigen::VectorXd initializer_for_field(int n, const FieldSpec& field,
                                      double lower, double upper) {
  const bool lo_fin = std::isfinite(lower), hi_fin = std::isfinite(upper);
  if (lo_fin && hi_fin) {
    Eigen::VectorXd x(n);
    const double c = 0.5 * (lower + upper), h = 0.5 * (upper - lower);
    for (int k = 0; k < n; ++k)
      x[k] = c - h * std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
    return x;
  }
  if (lo_fin && !hi_fin) {
    // Laguerre-type half line; recover m from the boundary pole strength.
    double m = 0.0;
    for (const auto& p : field.poles)
      if (p.location == lower) m = -2.0 * p.strength - 1.0;
    Eigen::VectorXd x(n);
    for (int k = 1; k <= n; ++k)
      x[k - 1] = lower + 0.5 * k * (4.0 * n + 2.0 * m) / (n + 1.0);
    return x;
  }
  return default_initializer(PolynomialFamily::hermite(), n);
}

}  // namespace

EquilibriumResult solve_equilibrium(int n, const FieldSpec& field,
                                    double lower, double upper,
                                    std::optional<ChargeConfiguration> init) {
  if (n < 1) throw std::invalid_argument("solve_equilibrium: n must be >= 1");

  Eigen::VectorXd x0 =
      init ? init->positions : initializer_for_field(n, field, lower, upper);

  numkernel::NewtonOptions opts;
  opts.max_iter = 100;
  opts.residual_tol = 1e-12 * n;
  opts.ordering_guard = true;
  if (std::isfinite(lower)) opts.lower = lower;
  if (std::isfinite(upper)) opts.upper = upper;

  EquilibriumResult res;
  res.config.lower = lower;
  res.config.upper = upper;

  opts.on_iterate = [&](const Eigen::VectorXd& x) {
    ChargeConfiguration c{x, lower, upper};
    res.energy_history.push_back(energy(c, field));
  };
  res.energy_history.push_back(energy({x0, lower, upper}, field));

  auto residual = [&](const Eigen::VectorXd& x) {
    return gradient({x, lower, upper}, field);
  };
  auto jac = [&](const Eigen::VectorXd& x) {
    return hessian({x, lower, upper}, field);
  };

  try {
    auto nr = numkernel::newton_solve(residual, jac, x0, opts);
    res.config.positions = nr.x;
    res.iterations = nr.iterations;
    res.residual_norm = nr.residual_norm;
    // One extra full step past the stopping tolerance. Quadratic convergence
    // drives the residual to rounding level, which keeps the positions within
    // ~1e-10 of the true equilibrium even for ill-conditioned Hessians.
    const Eigen::VectorXd polished =
        nr.x - jac(nr.x).partialPivLu().solve(residual(nr.x));
    bool ordered = true;
    for (Eigen::Index i = 0; i + 1 < polished.size(); ++i)
      ordered = ordered && polished[i] < polished[i + 1];
    if (ordered && (!std::isfinite(lower) || polished.minCoeff() > lower) &&
        (!std::isfinite(upper) || polished.maxCoeff() < upper)) {
      const double rn = residual(polished).norm();
      if (rn <= res.residual_norm) {
        res.config.positions = polished;
        res.residual_norm = rn;
        ++res.iterations;
      }
    }
    res.converged = true;
  } catch (const numkernel::NewtonFailure& f) {
    res.config.positions = f.best;
    res.iterations = static_cast<int>(f.residual_history.size());
    res.residual_norm = f.best_residual_norm;
    res.converged = false;
  }

  res.min_hessian_eigenvalue =
      numkernel::symmetric_min_eigenvalue(hessian(res.config, field));
  res.stable = res.min_hessian_eigenvalue > 0.0;
  return res;
}

EquilibriumResult solve_for_family(const PolynomialFamily& fam, int n) {
  ChargeConfiguration init{default_initializer(fam, n), fam.lower(), fam.upper()};
  return solve_equilibrium(n, field_for_family(fam), fam.lower(), fam.upper(),
                           std::move(init));
}

std::pair<bool, double> certify_stability(const EquilibriumResult& res) {
  const auto n = res.config.positions.size();
  if (!(res.residual_norm <= 1e-8 * static_cast<double>(n)))
    throw std::invalid_argument(
        "certify_stability: point is not stationary (residual too large)");
  return {res.stable, res.min_hessian_eigenvalue};
}

}  // namespace stieltjes::electro
