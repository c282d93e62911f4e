#ifndef STIELTJES_ORTHOPOLY_HPP
#define STIELTJES_ORTHOPOLY_HPP

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>

namespace stieltjes::orthopoly {

enum class FamilyKind { Hermite, Laguerre, Jacobi };

/// One of the three classical families, with its parameters and interval.
/// Jacobi is parameterized by the fixed-charge pair (p, q); the usual
/// weight exponents are alpha = 2p - 1 and beta = 2q - 1.
struct PolynomialFamily {
  FamilyKind kind = FamilyKind::Hermite;
  double laguerre_m = 0.0;
  double jacobi_p = 0.0;
  double jacobi_q = 0.0;

  static PolynomialFamily hermite();
  static PolynomialFamily laguerre(double m);  // weight x^m e^{-x}, m > -1
  static PolynomialFamily jacobi(double p, double q);  // p, q > 0

  double alpha() const { return 2.0 * jacobi_p - 1.0; }
  double beta() const { return 2.0 * jacobi_q - 1.0; }

  double lower() const {
    switch (kind) {
      case FamilyKind::Hermite: return -std::numeric_limits<double>::infinity();
      case FamilyKind::Laguerre: return 0.0;
      default: return -1.0;
    }
  }
  double upper() const {
    switch (kind) {
      case FamilyKind::Jacobi: return 1.0;
      default: return std::numeric_limits<double>::infinity();
    }
  }
};

/// Coefficients of the monic three-term recurrence
///   p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x),  p_{-1} = 0, p_0 = 1.
/// b_0 is unused by the recurrence and reported as 0.
struct RecurrencePair {
  double a = 0.0;
  double b = 0.0;
};

RecurrencePair recurrence_coefficients(const PolynomialFamily& fam, int k);

/// Monic polynomial value together with its first two derivatives,
/// computed by running the derivative recurrences alongside the main one.
template <class Scalar>
struct Eval {
  Scalar value{};
  Scalar d1{};
  Scalar d2{};
};

template <class Scalar>
Eval<Scalar> evaluate_monic(const PolynomialFamily& fam, int n, Scalar x) {
  if (n < 0) throw std::invalid_argument("evaluate: degree must be >= 0");
  Scalar pm1{}, p0{1.0}, dm1{}, d0{}, sm1{}, s0{};
  for (int k = 0; k < n; ++k) {
    const auto [a, b] = recurrence_coefficients(fam, k);
    const Scalar xm = x - a;
    const Scalar p1 = xm * p0 - b * pm1;
    const Scalar d1 = p0 + xm * d0 - b * dm1;
    const Scalar s1 = 2.0 * d0 + xm * s0 - b * sm1;
    pm1 = p0; p0 = p1;
    dm1 = d0; d0 = d1;
    sm1 = s0; s0 = s1;
  }
  return {p0, d0, s0};
}

Eval<double> evaluate(const PolynomialFamily& fam, int n, double x);

/// Strictly increasing zeros of the degree-n monic polynomial.
struct ZeroSet {
  int n = 0;
  Eigen::VectorXd positions;
  PolynomialFamily family;
};

/// Golub–Welsch: eigenvalues of the n-by-n Jacobi matrix, followed by one
/// Newton polish per zero against evaluate().
ZeroSet zeros(const PolynomialFamily& fam, int n);

/// Absolute value of the family's second-order ODE applied to the monic
/// degree-n polynomial at x; zero up to rounding by construction.
double ode_residual(const PolynomialFamily& fam, int n, double x);

}  // namespace stieltjes::orthopoly

#endif
