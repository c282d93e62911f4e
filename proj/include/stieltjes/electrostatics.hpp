#ifndef STIELTJES_ELECTROSTATICS_HPP
#define STIELTJES_ELECTROSTATICS_HPP

#include "stieltjes/orthopoly.hpp"

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stieltjes::electro {

/// Rational external field F(x) = c0 + c1 x + sum_j r_j / (x - s_j).
/// Its potential U (with U' = F) confines the movable charges.
struct FieldSpec {
  struct Pole {
    double location = 0.0;
    double strength = 0.0;
  };
  double c0 = 0.0;
  double c1 = 0.0;
  std::vector<Pole> poles;

  double value(double x) const;
  double derivative(double x) const;
  double potential(double x) const;  // c0 x + c1 x^2/2 + sum r_j log|x - s_j|
  std::complex<double> value(std::complex<double> z) const;
};

/// Ordered positions of n movable unit charges, confined to an open
/// interval (either end may be infinite).
struct ChargeConfiguration {
  Eigen::VectorXd positions;  // strictly increasing
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
};

struct EquilibriumResult {
  ChargeConfiguration config;
  double residual_norm = 0.0;
  int iterations = 0;
  double min_hessian_eigenvalue = 0.0;
  bool stable = false;
  bool converged = false;
  std::vector<double> energy_history;  // energy at each accepted iterate
};

class SingularConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The unique real field whose equilibrium condition
///   sum_{j != k} 1/(x_k - x_j) = F(x_k)
/// is the zero relation of the family's ODE.
FieldSpec field_for_family(const orthopoly::PolynomialFamily& fam);

/// E = -sum_{i<j} log|x_i - x_j| + sum_i U(x_i)
double energy(const ChargeConfiguration& cfg, const FieldSpec& field);

/// Component k: -sum_{j != k} 1/(x_k - x_j) + F(x_k).
Eigen::VectorXd gradient(const ChargeConfiguration& cfg, const FieldSpec& field);

/// H_kk = sum_{j != k} 1/(x_k - x_j)^2 + F'(x_k), H_kj = -1/(x_k - x_j)^2.
Eigen::MatrixXd hessian(const ChargeConfiguration& cfg, const FieldSpec& field);

/// Ordered starting positions inside the family interval (Chebyshev-based).
Eigen::VectorXd default_initializer(const orthopoly::PolynomialFamily& fam, int n);

/// Damped-Newton solve of the equilibrium system, with a Hessian
/// stability certificate at the converged point.
EquilibriumResult solve_equilibrium(
    int n, const FieldSpec& field, double lower, double upper,
    std::optional<ChargeConfiguration> init = std::nullopt);

/// Convenience: field, interval and initializer taken from the family.
EquilibriumResult solve_for_family(const orthopoly::PolynomialFamily& fam, int n);

/// (stable, smallest Hessian eigenvalue) of a converged equilibrium.
/// Requires residual_norm <= 1e-8 * n.
std::pair<bool, double> certify_stability(const EquilibriumResult& res);

}  // namespace stieltjes::electro

#endif
