#include "stieltjes/crossval.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace stieltjes::crossval {

using orthopoly::FamilyKind;
using orthopoly::PolynomialFamily;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string family_subject(const PolynomialFamily& fam) {
  switch (fam.kind) {
    case FamilyKind::Hermite:
      return "hermite";
    case FamilyKind::Laguerre:
      return "laguerre(m=" + format_double(fam.laguerre_m) + ")";
    case FamilyKind::Jacobi:
      return "jacobi(p=" + format_double(fam.jacobi_p) +
             ",q=" + format_double(fam.jacobi_q) + ")";
  }
  return "?";
}

double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> to_vec(const Eigen::VectorXd& v) {
  return {v.begin(), v.end()};
}

}  // namespace

CrossReport verify_family(const PolynomialFamily& fam, int n, double tol) {
  if (n < 1) throw std::invalid_argument("verify_family: n must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("verify_family: tol must be > 0");

  CrossReport r;
  r.subject = family_subject(fam);
  r.n = n;
  r.route_zeros = to_vec(orthopoly::zeros(fam, n).positions);

  const auto eq = electro::solve_for_family(fam, n);
  r.route_equilibrium = to_vec(eq.config.positions);
  r.converged = eq.converged;
  r.stable = eq.stable;
  r.min_hessian_eigenvalue = eq.min_hessian_eigenvalue;
  r.dev_zeros_equilibrium = max_deviation(r.route_zeros, r.route_equilibrium);
  r.pass = r.converged && r.stable && r.dev_zeros_equilibrium <= tol;
  return r;
}

CrossReport verify_model(qhj::ModelKind kind, int l, int n,
                         const TolerancePolicy& tol) {
  if (n < 0) throw std::invalid_argument("verify_model: n must be >= 0");
  const auto model = qhj::build_model(kind, l);

  CrossReport r;
  r.subject = kind == qhj::ModelKind::HarmonicOscillator
                  ? "oscillator"
                  : "coulomb(l=" + std::to_string(l) + ")";
  r.n = n;

  if (n >= 1) {
    r.route_zeros = to_vec(orthopoly::zeros(model.family, n).positions);
    const auto eq = electro::solve_for_family(model.family, n);
    r.route_equilibrium = to_vec(eq.config.positions);
    r.converged = eq.converged;
    r.stable = eq.stable;
    r.min_hessian_eigenvalue = eq.min_hessian_eigenvalue;
    // Nodes back in the polynomial variable for an exact comparison.
    Eigen::VectorXd nodes =
        qhj::wavefunction_nodes(model, n).positions / model.node_scale(n);
    r.route_nodes = to_vec(nodes);
    r.dev_zeros_equilibrium = max_deviation(r.route_zeros, r.route_equilibrium);
    r.dev_equilibrium_nodes = max_deviation(r.route_equilibrium, r.route_nodes);
    r.dev_zeros_nodes = max_deviation(r.route_zeros, r.route_nodes);
  } else {
    r.converged = true;
    r.stable = true;
  }

  // Riccati sweep on a 21-point grid nudged off the poles of p.
  const auto nodes_phys = qhj::wavefunction_nodes(model, n);
  const double s = model.node_scale(n);
  double lo, hi;
  if (kind == qhj::ModelKind::HarmonicOscillator) {
    hi = n >= 1 ? nodes_phys.positions.maxCoeff() + 1.0 : 3.0;
    lo = -hi;
  } else {
    lo = 0.25 * s;
    hi = n >= 1 ? 1.3 * nodes_phys.positions.maxCoeff() : 4.0 * s;
  }
  r.max_riccati_residual = 0.0;
  for (int k = 0; k < 21; ++k) {
    double x = lo + (hi - lo) * k / 20.0;
    auto too_close = [&](double v) {
      for (Eigen::Index j = 0; j < nodes_phys.positions.size(); ++j)
        if (std::abs(v - nodes_phys.positions[j]) < 0.1) return true;
      for (const auto& p : model.fitted.poles)
        if (std::abs(v - s * p.location) < 0.1) return true;
      return false;
    };
    while (too_close(x)) x += 3e-3;
    r.max_riccati_residual =
        std::max(r.max_riccati_residual, qhj::riccati_residual(model, n, x));
  }

  r.has_quantization = true;
  r.quantization_j = qhj::quantize_contour(model, n);

  r.pass = r.converged && r.stable &&
           r.dev_zeros_equilibrium <= tol.positions &&
           r.dev_equilibrium_nodes <= tol.positions &&
           r.dev_zeros_nodes <= tol.positions &&
           r.max_riccati_residual <= tol.riccati &&
           std::abs(r.quantization_j - n) <= tol.quantization;
  return r;
}

std::string to_json(const CrossReport& r) {
  nlohmann::ordered_json j;
  j["subject"] = r.subject;
  j["n"] = r.n;
  j["route_zeros"] = r.route_zeros;
  j["route_equilibrium"] = r.route_equilibrium;
  j["route_nodes"] = r.route_nodes;
  j["dev_zeros_equilibrium"] = r.dev_zeros_equilibrium;
  j["dev_equilibrium_nodes"] = r.dev_equilibrium_nodes;
  j["dev_zeros_nodes"] = r.dev_zeros_nodes;
  j["stable"] = r.stable;
  j["min_hessian_eigenvalue"] = r.min_hessian_eigenvalue;
  j["has_quantization"] = r.has_quantization;
  j["quantization_j"] = r.quantization_j;
  j["max_riccati_residual"] = r.max_riccati_residual;
  j["converged"] = r.converged;
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

CrossReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CrossReport r;
  r.subject = j.at("subject").get<std::string>();
  r.n = j.at("n").get<int>();
  r.route_zeros = j.at("route_zeros").get<std::vector<double>>();
  r.route_equilibrium = j.at("route_equilibrium").get<std::vector<double>>();
  r.route_nodes = j.at("route_nodes").get<std::vector<double>>();
  r.dev_zeros_equilibrium = j.at("dev_zeros_equilibrium").get<double>();
  r.dev_equilibrium_nodes = j.at("dev_equilibrium_nodes").get<double>();
  r.dev_zeros_nodes = j.at("dev_zeros_nodes").get<double>();
  r.stable = j.at("stable").get<bool>();
  r.min_hessian_eigenvalue = j.at("min_hessian_eigenvalue").get<double>();
  r.has_quantization = j.at("has_quantization").get<bool>();
  r.quantization_j = j.at("quantization_j").get<double>();
  r.max_riccati_residual = j.at("max_riccati_residual").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string csv_header() {
  return "subject,n,dev_zeros_eq,dev_eq_nodes,dev_zeros_nodes,min_hess_eig,"
         "max_riccati,J,stable,pass";
}

std::string to_csv_row(const CrossReport& r) {
  std::ostringstream os;
  os << r.subject << ',' << r.n << ',' << format_double(r.dev_zeros_equilibrium)
     << ',' << format_double(r.dev_equilibrium_nodes) << ','
     << format_double(r.dev_zeros_nodes) << ','
     << format_double(r.min_hessian_eigenvalue) << ','
     << format_double(r.max_riccati_residual) << ','
     << (r.has_quantization ? format_double(r.quantization_j) : std::string())
     << ',' << (r.stable ? "true" : "false") << ','
     << (r.pass ? "true" : "false");
  return os.str();
}

}  // namespace stieltjes::crossval
