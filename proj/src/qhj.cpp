#include "stieltjes/qhj.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace stieltjes::qhj {

using orthopoly::PolynomialFamily;

double QuantumModel::potential(double x) const {
  if (kind == ModelKind::HarmonicOscillator) return 0.5 * x * x;
  const double l = angular_l;
  return -1.0 / x + l * (l + 1.0) / (2.0 * x * x);
}

double QuantumModel::node_scale(int n) const {
  if (kind == ModelKind::HarmonicOscillator) return 1.0;
  return 0.5 * (n + angular_l + 1.0);  // r = x / (2 kappa_n)
}

QuantumModel build_model(ModelKind kind, int l) {
  QuantumModel m;
  m.kind = kind;
  if (kind == ModelKind::HarmonicOscillator) {
    // Ansatz iQ = -c x. The x^2 part of the termination bracket
    // 2E - 2V + (iQ)^2 + (iQ)' is c^2 - 1; constancy forces c = +-1 and
    // only c = +1 gives a normalizable psi ~ e^{-x^2/2}.
    const double c = 1.0;
    m.family = PolynomialFamily::hermite();
    m.fitted.c1 = c;
    return m;
  }
  if (l < 0)
    throw std::invalid_argument("build_model: CoulombRadial requires l >= 0");
  m.angular_l = l;
  // Ansatz iQ = t/r - kappa. The r^-2 part of the bracket must cancel the
  // centrifugal term: t^2 - t - l(l+1) = 0, roots t = l+1 and t = -l.
  // The normalizable branch (psi ~ r^{l+1} at the origin) is the larger root.
  const double disc = std::sqrt(1.0 + 4.0 * l * (l + 1.0));
  const double t = 0.5 * (1.0 + disc);
  m.family = PolynomialFamily::laguerre(2.0 * t - 1.0);  // m = 2l + 1
  m.fitted.c0 = 0.5;
  m.fitted.poles.push_back({0.0, -t});
  return m;
}

SpectrumResult spectrum(const QuantumModel& model, int n) {
  if (n < 0) throw std::invalid_argument("spectrum: n must be >= 0");
  SpectrumResult s;
  s.n = n;
  if (model.kind == ModelKind::HarmonicOscillator) {
    s.energy = n + 0.5;
    s.termination_rule = "constant bracket 2E - 1 = 2n";
  } else {
    const double d = n + model.angular_l + 1.0;
    s.energy = -0.5 / (d * d);
    s.termination_rule =
        "r^{n+1} coefficient: 2E + kappa^2 = 0; "
        "r^n coefficient: kappa (n + l + 1) = 1";
  }
  return s;
}

orthopoly::ZeroSet wavefunction_nodes(const QuantumModel& model, int n) {
  if (n < 0) throw std::invalid_argument("wavefunction_nodes: n must be >= 0");
  if (n == 0) return {0, Eigen::VectorXd(), model.family};
  auto z = orthopoly::zeros(model.family, n);
  z.positions *= model.node_scale(n);
  return z;
}

std::complex<double> qmf_eval(const QuantumModel& model, int n,
                              std::complex<double> z) {
  const double s = model.node_scale(n);
  const std::complex<double> w = z / s;
  for (const auto& p : model.fitted.poles)
    if (w == std::complex<double>(p.location))
      throw std::runtime_error("qmf_eval: evaluation at a fixed pole");
  const auto f = orthopoly::evaluate_monic<std::complex<double>>(
      model.family, n, w);
  if (f.value == std::complex<double>(0.0))
    throw std::runtime_error("qmf_eval: evaluation at a moving pole (node)");
  const std::complex<double> i(0.0, 1.0);
  return -i / s * (f.d1 / f.value - model.fitted.value(w));
}

namespace {

double min_pole_distance(const QuantumModel& model, int n,
                         const orthopoly::ZeroSet& nodes,
                         std::complex<double> z) {
  double dmin = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < nodes.positions.size(); ++k)
    dmin = std::min(dmin, std::abs(z - std::complex<double>(nodes.positions[k])));
  const double s = model.node_scale(n);
  for (const auto& p : model.fitted.poles)
    dmin = std::min(dmin, std::abs(z - std::complex<double>(s * p.location)));
  return dmin;
}

}  // namespace

double riccati_residual(const QuantumModel& model, int n, double x) {
  if (min_pole_distance(model, n, wavefunction_nodes(model, n), x) < 1e-3)
    throw std::invalid_argument("riccati_residual: x too close to a pole of p");
  const double e = spectrum(model, n).energy;
  const double h = 1e-6;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> p = qmf_eval(model, n, x);
  const std::complex<double> dp =
      (qmf_eval(model, n, x + h) - qmf_eval(model, n, x - h)) / (2.0 * h);
  const double defect = std::abs(p * p - i * dp - 2.0 * (e - model.potential(x)));
  // Relative to the local term scale, so the check is meaningful both where
  // the identity balances O(1) quantities and near poles where each term
  // grows without bound.
  const double scale = std::max(
      {1.0, std::norm(p), std::abs(dp), 2.0 * std::abs(e - model.potential(x))});
  return defect / scale;
}

numkernel::ClosedCurve default_curve(const QuantumModel& model, int n) {
  numkernel::ClosedCurve c;
  const bool has_fixed_pole = !model.fitted.poles.empty();
  if (n == 0) {
    if (model.kind == ModelKind::HarmonicOscillator) {
      c = {0.0, 1.0, 0.5, 512};
    } else {
      const double l = model.angular_l;
      const double center = (l + 1.0) * (l + 1.0);
      c = {center, 0.5 * center, 0.25 * center, 512};
    }
    return c;
  }
  const auto nodes = wavefunction_nodes(model, n);
  const double lo = nodes.positions.minCoeff();
  const double hi = nodes.positions.maxCoeff();
  c.center = 0.5 * (lo + hi);
  if (has_fixed_pole) {
    // Keep the curve strictly to the right of the pole at the origin while
    // still enclosing the smallest node. The near-curve singularities slow
    // the trapezoid rule down, so use a denser sampling.
    c.semi_axis_real = c.center - 0.5 * lo;
    c.points = 4096;
  } else {
    c.semi_axis_real = std::max(1.5 * 0.5 * (hi - lo), 1.0);
    c.points = 512;
  }
  c.semi_axis_imag = 0.5 * c.semi_axis_real;
  return c;
}

double quantize_contour(const QuantumModel& model, int n,
                        std::optional<numkernel::ClosedCurve> curve) {
  const numkernel::ClosedCurve c = curve ? *curve : default_curve(model, n);

  const auto nodes = wavefunction_nodes(model, n);
  for (Eigen::Index k = 0; k < nodes.positions.size(); ++k) {
    const double u = (nodes.positions[k] - c.center) / c.semi_axis_real;
    if (!(u * u < 1.0))
      throw std::invalid_argument("quantize_contour: curve does not enclose all nodes");
  }
  const double s = model.node_scale(n);
  for (const auto& p : model.fitted.poles) {
    const double u = (s * p.location - c.center) / c.semi_axis_real;
    if (!(u * u > 1.0))
      throw std::invalid_argument("quantize_contour: curve encloses a fixed pole of Q");
  }
  // Curve samples must stay clear of every pole of p.
  for (int j = 0; j < c.points; ++j) {
    const double t = 2.0 * std::numbers::pi * j / c.points;
    const std::complex<double> z(c.center + c.semi_axis_real * std::cos(t),
                                 c.semi_axis_imag * std::sin(t));
    if (min_pole_distance(model, n, nodes, z) < 1e-3)
      throw std::invalid_argument("quantize_contour: curve passes within 1e-3 of a pole");
  }

  const auto integral = numkernel::contour_integral(
      [&](std::complex<double> z) { return qmf_eval(model, n, z); }, c);
  const auto j = integral / (2.0 * std::numbers::pi);
  if (std::abs(j.imag()) > 1e-9)
    throw std::runtime_error("quantize_contour: integral has a non-real part");
  return j.real();
}

double termination_bracket_spread(const QuantumModel& model, int n) {
  const double e = spectrum(model, n).energy;
  const double s = model.node_scale(n);
  // bracket(r) = 2E - 2V + (iQ)^2 + (iQ)', with iQ(r) = -(1/s) F(r/s);
  // multiplied by the ODE's leading symbol (1 or r) it must be constant.
  auto bracket = [&](double r) {
    const double g = -model.fitted.value(r / s) / s;
    const double gp = -model.fitted.derivative(r / s) / (s * s);
    double b = 2.0 * e - 2.0 * model.potential(r) + g * g + gp;
    if (model.kind == ModelKind::CoulombRadial) b *= r;
    return b;
  };
  const double lo = model.kind == ModelKind::HarmonicOscillator ? -3.0 : 0.5;
  const double hi = model.kind == ModelKind::HarmonicOscillator
                        ? 3.0
                        : 4.0 * s * (n + 1.0);
  double bmin = std::numeric_limits<double>::infinity();
  double bmax = -bmin;
  double scale = 0.0;
  const int samples = 21;
  for (int k = 0; k < samples; ++k) {
    const double r = lo + (hi - lo) * k / (samples - 1.0);
    const double b = bracket(r);
    bmin = std::min(bmin, b);
    bmax = std::max(bmax, b);
    scale = std::max(scale, std::abs(b));
  }
  return (bmax - bmin) / std::max(scale, 1.0);
}

}  // namespace stieltjes::qhj
