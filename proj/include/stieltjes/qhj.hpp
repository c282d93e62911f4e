#ifndef STIELTJES_QHJ_HPP
#define STIELTJES_QHJ_HPP

#include "stieltjes/electrostatics.hpp"
#include "stieltjes/numkernel.hpp"
#include "stieltjes/orthopoly.hpp"

#include <complex>
#include <optional>
#include <string>

namespace stieltjes::qhj {

enum class ModelKind { HarmonicOscillator, CoulombRadial };

/// An exactly solvable model with its fitted quantum-momentum-function
/// pole structure. Units: hbar = mass = 1.
///
/// The fitted field lives in the polynomial variable; the linear map
/// r = node_scale(n) * x carries it to the physical coordinate
/// (identity for the oscillator).
struct QuantumModel {
  ModelKind kind = ModelKind::HarmonicOscillator;
  int angular_l = 0;  // CoulombRadial only
  orthopoly::PolynomialFamily family;
  electro::FieldSpec fitted;

  // oscillator: x^2/2 on (-inf, inf); Coulomb: -1/r + l(l+1)/(2 r^2) on (0, inf)
  double potential(double x) const;
  double node_scale(int n) const;
};

QuantumModel build_model(ModelKind kind, int l = 0);

struct SpectrumResult {
  int n = 0;
  double energy = 0.0;
  std::string termination_rule;
};

/// E_n from degree-n polynomial termination of
///   f'' + 2iQ f' + (2E - 2V - Q^2 + iQ') f = 0.
SpectrumResult spectrum(const QuantumModel& model, int n);

/// QMF in the physical variable: p(z) = -i d/dz ln psi_n(z).
/// Simple pole of residue -i at every wavefunction node.
std::complex<double> qmf_eval(const QuantumModel& model, int n,
                              std::complex<double> z);

/// |p^2 - i p' - 2(E_n - V)| at real x, with p' by central differences
/// (step 1e-6). Requires x at least 1e-3 away from every pole of p.
double riccati_residual(const QuantumModel& model, int n, double x);

/// Ellipse enclosing the n nodes and excluding every fixed pole of Q.
numkernel::ClosedCurve default_curve(const QuantumModel& model, int n);

/// J = (1/2pi) contour integral of p; equals n for the exact curve.
double quantize_contour(const QuantumModel& model, int n,
                        std::optional<numkernel::ClosedCurve> curve = std::nullopt);

/// Wavefunction nodes in the physical variable (family zeros through the
/// model's variable map).
orthopoly::ZeroSet wavefunction_nodes(const QuantumModel& model, int n);

/// Spread of the termination bracket over a sample grid, normalized by
/// its mean magnitude; near zero exactly when the fitted residues make
/// the bracket constant (the quantization demand).
double termination_bracket_spread(const QuantumModel& model, int n);

}  // namespace stieltjes::qhj

#endif
