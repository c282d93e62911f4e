#ifndef STIELTJES_NUMKERNEL_HPP
#define STIELTJES_NUMKERNEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace stieltjes::numkernel {

/// Symmetric tridiagonal matrix stored as its two bands.
struct SymTridiag {
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;  // size diag.size() - 1
};

struct NewtonOptions {
  int max_iter = 100;
  double residual_tol = 1e-12;
  double step_damping = 1.0;  // in (0, 1]; starting scale for the step search
  bool ordering_guard = false;
  // Open interval the iterates must stay inside when ordering_guard is set.
  std::optional<double> lower;
  std::optional<double> upper;
  // Accepted steps must keep neighbour gaps above this fraction of the
  // smallest gap of the current iterate.
  double ordering_margin = 0.1;
  // Called with each accepted iterate (including the final one).
  std::function<void(const Eigen::VectorXd&)> on_iterate;
};

struct NewtonResult {
  Eigen::VectorXd x;
  int iterations = 0;
  double residual_norm = 0.0;
  std::vector<double> residual_history;
};

/// Thrown when the Newton iteration cannot make further progress; carries
/// the best iterate seen so that callers can report or restart.
class NewtonFailure : public std::runtime_error {
 public:
  NewtonFailure(const std::string& what, Eigen::VectorXd best_iterate,
                double best_residual, std::vector<double> history)
      : std::runtime_error(what),
        best(std::move(best_iterate)),
        best_residual_norm(best_residual),
        residual_history(std::move(history)) {}

  Eigen::VectorXd best;
  double best_residual_norm;
  std::vector<double> residual_history;
};

/// Positively oriented ellipse centred on the real axis.
struct ClosedCurve {
  double center = 0.0;
  double semi_axis_real = 1.0;
  double semi_axis_imag = 1.0;
  int points = 512;  // even, >= 64
};

/// All eigenvalues of a symmetric tridiagonal matrix, sorted ascending.
/// Implicit-shift QL with per-eigenvalue deflation.
Eigen::VectorXd tridiag_eigenvalues(const SymTridiag& t);

/// Damped Newton iteration on residual(x) = 0 with user-supplied Jacobian.
NewtonResult newton_solve(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual,
    const std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>& jacobian,
    const Eigen::VectorXd& x0, const NewtonOptions& opts = {});

/// Smallest eigenvalue of a dense symmetric matrix via cyclic Jacobi
/// rotations. Rejects matrices that are not symmetric to 1e-12 relative.
double symmetric_min_eigenvalue(const Eigen::MatrixXd& m);

/// Trapezoid-rule value of the closed contour integral of f along the
/// ellipse. Spectrally accurate for integrands analytic near the curve.
std::complex<double> contour_integral(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const ClosedCurve& c);

}  // namespace stieltjes::numkernel

#endif
