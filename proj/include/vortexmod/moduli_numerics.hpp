#pragma once

#include "vortexmod/rational.hpp"

namespace vortexmod {

/// (n, r, d, g, ell, delta): n copies of E of rank r and degree d on a genus-g curve,
/// twisted by the delta-th power of a line bundle of degree ell.
struct EmbeddingParams {
  int n = 1;
  int r = 1;
  int d = 0;
  int g = 0;
  int ell = 1;
  int delta = 1;

  /// Validates n >= r >= 1, d >= 0, g >= 0, ell >= 1, delta >= 1 and
  /// ell*delta >= d/r + g - 1. Throws ParameterError.
  static EmbeddingParams make(int n, int r, int d, int g, int ell, int delta);

  long elldelta() const { return static_cast<long>(ell) * delta; }
};

struct PhysicalParams {
  double e2 = 1.0;
  double tau = 1.0;
  double vol = 1.0;

  /// e2 > 0 and vol > 0, all finite.
  static PhysicalParams make(double e2, double tau, double vol);
};

/// dim H^0(E^* (x) L^delta) = r*ell*delta - d + r(1-g).
long rr_dim(const EmbeddingParams& p);

struct GrassmannParams {
  long total_dim = 0;     // n(ell*delta + 1 - g)
  long subspace_dim = 0;  // r(ell*delta - g + 1) - d
  long gr_dim = 0;        // subspace_dim * (total_dim - subspace_dim)
  BigInt plucker_ambient_dim = 0;  // C(total_dim, subspace_dim) - 1
};

/// Needs ell*delta > 2g - 2 and a nonnegative subspace dimension; throws ParameterError otherwise.
GrassmannParams grassmann_params(const EmbeddingParams& p);

/// n*d + r(r-n)(g-1). Only asserted for d > r(g-1) or n = r; throws DomainError elsewhere.
long moduli_dim(int n, int r, int d, int g);

/// r*d: length of Hom(E^*, Q) for a torsion quotient Q of length d (the n = r case).
long tangent_dim_local(int r, int d);

struct StabilityReport {
  bool stable = false;
  double margin = 0.0;        // tau*e2*vol - 4*pi*d
  double critical_tau = 0.0;  // 4*pi*d / (e2*vol)
};

/// stable iff tau*e2*vol > 4*pi*d, with values within 1e-12 (relative) of the
/// critical one counted as not stable. r does not enter the inequality.
StabilityReport stability_check(const PhysicalParams& phys, int d, int r = 1);

}  // namespace vortexmod
