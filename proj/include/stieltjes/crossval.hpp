#ifndef STIELTJES_CROSSVAL_HPP
#define STIELTJES_CROSSVAL_HPP

#include "stieltjes/qhj.hpp"

#include <string>
#include <vector>

namespace stieltjes::crossval {

struct TolerancePolicy {
  double positions = 1e-9;
  double riccati = 1e-7;
  double quantization = 1e-8;
};

/// Agreement report for one subject: the three computational routes and
/// their pairwise deviations. Families have two routes (zeros and
/// equilibrium); models add the wavefunction nodes, a Riccati sweep and
/// the quantization integral. All positions are in the polynomial
/// variable.
struct CrossReport {
  std::string subject;
  int n = 0;
  std::vector<double> route_zeros;
  std::vector<double> route_equilibrium;
  std::vector<double> route_nodes;  // empty for bare families
  double dev_zeros_equilibrium = 0.0;
  double dev_equilibrium_nodes = 0.0;
  double dev_zeros_nodes = 0.0;
  bool stable = false;
  double min_hessian_eigenvalue = 0.0;
  bool has_quantization = false;
  double quantization_j = 0.0;
  double max_riccati_residual = 0.0;
  bool converged = false;
  bool pass = false;

  bool operator==(const CrossReport&) const = default;
};

CrossReport verify_family(const orthopoly::PolynomialFamily& fam, int n,
                          double tol);

CrossReport verify_model(qhj::ModelKind kind, int l, int n,
                         const TolerancePolicy& tol = {});

/// Deterministic serialization: fixed key order, 17 significant digits.
std::string to_json(const CrossReport& report);
CrossReport report_from_json(const std::string& text);

std::string csv_header();
std::string to_csv_row(const CrossReport& report);

/// Shortest-round-trip-style fixed formatting used by every sink.
std::string format_double(double v);

}  // namespace stieltjes::crossval

#endif
