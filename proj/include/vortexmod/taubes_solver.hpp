#pragma once

// Abelian vortices on a flat torus through the scalar (Taubes) reduction. With
// u = log(|phi|^2 / tau) the vortex equations become
//
//   Laplacian(u) = e2 tau (e^u - 1) + 4 pi sum_i m_i delta_{z_i}.
//
// Integrating over the torus gives tau * int e^u = tau vol - 4 pi d / e2, and the flux
// (e2 / 4 pi) int (tau - |phi|^2) equals d. Deltas are replaced by periodic Gaussians,
// each rescaled so that its grid quadrature is exactly 4 pi m_i.

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

namespace vortexmod::taubes {

struct TorusSpec {
  double L1 = 1.0;
  double L2 = 1.0;
  int N1 = 32;
  int N2 = 32;

  /// L1, L2 > 0 and N1, N2 >= 32.
  static TorusSpec make(double L1, double L2, int N1, int N2);

  double vol() const { return L1 * L2; }
  double h1() const { return L1 / N1; }
  double h2() const { return L2 / N2; }
  long size() const { return static_cast<long>(N1) * N2; }
  /// Row-major flat index of grid point (i1, i2).
  long index(int i1, int i2) const { return static_cast<long>(i1) * N2 + i2; }
};

struct VortexZero {
  double x = 0.0;
  double y = 0.0;
  int multiplicity = 1;
};

struct VortexProblem {
  TorusSpec torus;
  std::vector<VortexZero> zeros;
  double e2 = 1.0;
  double tau = 1.0;
  std::optional<double> reg_width;  // default 3 * max grid spacing
  double tol = 1e-10;               // max-norm of the discrete residual
  int max_iter = 50;

  int degree() const;
  double width() const;
  double margin() const;  // tau e2 vol - 4 pi d
  double critical_tau() const;

  /// ParameterError for bad fields, StabilityError when margin <= 0.
  void validate() const;
};

/// Sign of the flux of a degree-d bundle: +1 means the total flux is +2 pi d.
inline constexpr int flux_orientation = +1;

struct TorusVortexState {
  TorusSpec torus;
  int degree = 0;
  double tau = 1.0;
  double reg_width = 0.0;
  Eigen::VectorXd u;  // row-major grid values
  double residual_norm = 0.0;
  int iterations = 0;
  double flux = 0.0;
  double higgs_l2 = 0.0;  // int |phi|^2
  double sup_phi2 = 0.0;
  double max_u = 0.0;

  double phi2(long k) const;
};

/// Damped Newton with diagonally preconditioned CG on the linearized steps.
/// Throws StabilityError before any work when the problem is unstable, and
/// ConvergenceError when the residual stays above tol after max_iter steps.
TorusVortexState solve(const VortexProblem& prob);

/// tau vol - 4 pi d / e2: the value of int |phi|^2 forced by the integrated equation.
double expected_higgs_l2(const VortexProblem& prob);

struct SweepRow {
  double vol = 0.0;
  double margin = 0.0;
  double sup_phi2 = 0.0;
  double higgs_l2 = 0.0;
  double expected_higgs_l2 = 0.0;
  int iterations = 0;
};

/// Re-solves the template with both periods (and zero positions) scaled to each volume.
std::vector<SweepRow> bradlow_sweep(const VortexProblem& tmpl, std::span<const double> vols);

}  // namespace vortexmod::taubes
