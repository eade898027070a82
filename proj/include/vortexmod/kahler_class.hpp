#pragma once

#include "vortexmod/moduli_numerics.hpp"
#include "vortexmod/rational.hpp"

#include <optional>
#include <type_traits>
#include <vector>

namespace vortexmod {

/// c_eta * eta + c_sigma * sigma in H^2(Sym^d). Scalar is Rational (exact) or double.
template <typename Scalar>
struct KahlerClass2 {
  Scalar c_eta{0};
  Scalar c_sigma{0};

  friend bool operator==(const KahlerClass2&, const KahlerClass2&) = default;
};

/// Class of the L^2 metric: (pi tau vol - 4 pi^2 d / e2) eta + (2 pi^2 / e2) sigma.
KahlerClass2<double> l2_class(const PhysicalParams& phys, int d);

/// Degrees of the images of {d x} (d0) and {p + (d-1) x} (d1) under the Plucker map.
struct CurveDegrees {
  long d0 = 0;
  long d1 = 0;
};

/// d_j = (d-j)(elldelta + (d-j-1)(g-1) - j). Needs d >= 2, elldelta >= 1; DomainError if
/// either degree comes out negative.
CurveDegrees curve_degrees(int d, int g, long elldelta);

/// Rows Sigma0, Sigma1; columns eta, sigma. Entries from symring pairings.
RMatrix pairing_matrix(int d, int g);

/// Solves <C_eta eta + C_sigma sigma, Sigma_j> = d_j exactly. Needs d >= 2, g >= 1.
KahlerClass2<Rational> fs_coefficients(int d, int g, const CurveDegrees& degrees);

struct Quantization {
  double q = 0.0;  // tau e2 vol / (4 pi)
  bool is_integer = false;
};

/// Integer test within 1e-9.
Quantization quantization(const PhysicalParams& phys);

struct Representability {
  double q = 0.0;
  std::optional<long> elldelta_theorem;     // q + g - 1, only for integral q
  double elldelta_ratio_value = 0.0;        // 2(q - d) + d + g - 1
  std::optional<Rational> elldelta_ratio;   // exact form when 2q is integral
  bool consistent = false;
};

/// Compares the two candidate values of ell*delta for the L^2 class. Needs d >= 2, g >= 1.
Representability representability(const PhysicalParams& phys, int d, int g);

/// integrate(eta^{d-k} sigma^k) for k = 0..d, evaluated in the ring.
std::vector<Rational> eta_sigma_integrals(int d, int g);

/// Integral of cls^d / d!, expanded binomially (eta and sigma are even, so they commute).
template <typename Scalar>
Scalar symplectic_volume(const KahlerClass2<Scalar>& cls, int d, int g) {
  const auto integrals = eta_sigma_integrals(d, g);
  Scalar total(0);
  for (int k = 0; k <= d; ++k) {
    const Rational& integral = integrals[static_cast<std::size_t>(k)];
    if (integral.is_zero()) continue;
    Scalar term(1);
    for (int i = 0; i < d - k; ++i) term *= cls.c_eta;
    for (int i = 0; i < k; ++i) term *= cls.c_sigma;
    const Rational weight = Rational(binomial(d, k)) * integral / Rational(factorial(d));
    if constexpr (std::is_same_v<Scalar, Rational>) {
      total += term * weight;
    } else {
      total += term * to_double(weight);
    }
  }
  return total;
}

}  // namespace vortexmod
