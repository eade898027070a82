#include "vortexmod/moduli_numerics.hpp"

#include "vortexmod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vortexmod {

EmbeddingParams EmbeddingParams::make(int n, int r, int d, int g, int ell, int delta) {
  if (r < 1) throw ParameterError("rank r must be >= 1");
  if (n < r) throw ParameterError("need n >= r");
  if (d < 0) throw ParameterError("degree d must be >= 0");
  if (g < 0) throw ParameterError("genus g must be >= 0");
  if (ell < 1) throw ParameterError("ell must be >= 1");
  if (delta < 1) throw ParameterError("delta must be >= 1");
  EmbeddingParams p{n, r, d, g, ell, delta};
  // ell*delta >= d/r + g - 1, kept in integers
  if (static_cast<long>(r) * (p.elldelta() - g + 1) < d) {
    throw ParameterError("ell*delta = " + std::to_string(p.elldelta()) +
                         " violates ell*delta >= d/r + g - 1");
  }
  return p;
}

PhysicalParams PhysicalParams::make(double e2, double tau, double vol) {
  if (!std::isfinite(e2) || !std::isfinite(tau) || !std::isfinite(vol)) {
    throw ParameterError("physical parameters must be finite");
  }
  if (e2 <= 0) throw ParameterError("e2 must be positive");
  if (vol <= 0) throw ParameterError("vol must be positive");
  return PhysicalParams{e2, tau, vol};
}

long rr_dim(const EmbeddingParams& p) {
  return p.r * p.elldelta() - p.d + static_cast<long>(p.r) * (1 - p.g);
}

GrassmannParams grassmann_params(const EmbeddingParams& p) {
  if (p.elldelta() <= 2L * p.g - 2) {
    throw ParameterError("grassmann_params needs ell*delta > 2g - 2");
  }
  GrassmannParams out;
  out.total_dim = p.n * (p.elldelta() + 1 - p.g);
  out.subspace_dim = p.r * (p.elldelta() - p.g + 1) - p.d;
  if (out.subspace_dim < 0) {
    throw ParameterError("negative subspace dimension: delta below the usable range");
  }
  out.gr_dim = out.subspace_dim * (out.total_dim - out.subspace_dim);
  out.plucker_ambient_dim =
      out.subspace_dim == 0 ? BigInt(0) : binomial(out.total_dim, out.subspace_dim) - 1;
  return out;
}

long moduli_dim(int n, int r, int d, int g) {
  if (r < 1 || n < r || d < 0 || g < 0) throw ParameterError("moduli_dim: need n >= r >= 1, d >= 0, g >= 0");
  if (!(n == r || d > static_cast<long>(r) * (g - 1))) {
    throw DomainError("moduli_dim: formula not asserted for d <= r(g-1) with n > r");
  }
  return static_cast<long>(n) * d + static_cast<long>(r) * (r - n) * (g - 1);
}

long tangent_dim_local(int r, int d) {
  if (r < 1 || d < 0) throw ParameterError("tangent_dim_local: need r >= 1, d >= 0");
  return static_cast<long>(r) * d;
}

StabilityReport stability_check(const PhysicalParams& phys, int d, int r) {
  if (d < 0) throw ParameterError("stability_check: d must be >= 0");
  if (r < 1) throw ParameterError("stability_check: r must be >= 1");
  const double four_pi_d = 4.0 * std::numbers::pi * d;
  StabilityReport out;
  out.margin = phys.tau * phys.e2 * phys.vol - four_pi_d;
  out.critical_tau = four_pi_d / (phys.e2 * phys.vol);
  const double scale = std::max(std::abs(phys.tau * phys.e2 * phys.vol), four_pi_d);
  out.stable = out.margin > 1e-12 * scale;
  return out;
}

}  // namespace vortexmod
