#include "vortexmod/kahler_class.hpp"

#include "vortexmod/errors.hpp"
#include "vortexmod/exact_linalg.hpp"
#include "vortexmod/symring.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vortexmod {

using std::numbers::pi;

KahlerClass2<double> l2_class(const PhysicalParams& phys, int d) {
  if (d < 0) throw ParameterError("l2_class: d must be >= 0");
  return {pi * phys.tau * phys.vol - 4.0 * pi * pi * d / phys.e2, 2.0 * pi * pi / phys.e2};
}

CurveDegrees curve_degrees(int d, int g, long elldelta) {
  if (d < 2) throw DomainError("curve_degrees needs d >= 2");
  if (g < 0) throw ParameterError("curve_degrees: g must be >= 0");
  if (elldelta < 1) throw ParameterError("curve_degrees: elldelta must be >= 1");
  auto degree = [&](long j) { return (d - j) * (elldelta + (d - j - 1) * (g - 1) - j); };
  CurveDegrees out{degree(0), degree(1)};
  if (out.d0 < 0 || out.d1 < 0) {
    throw DomainError("curve_degrees: negative degree, elldelta = " + std::to_string(elldelta) +
                      " too small for d = " + std::to_string(d) + ", g = " + std::to_string(g));
  }
  return out;
}

RMatrix pairing_matrix(int d, int g) {
  const auto p = symring::RingParams::make(d, g);
  const auto eta = symring::eta(p);
  const auto sigma = symring::sigma(p);
  RMatrix m(2, 2);
  m(0, 0) = symring::pairing(eta, symring::Curve::Sigma0);
  m(0, 1) = symring::pairing(sigma, symring::Curve::Sigma0);
  m(1, 0) = symring::pairing(eta, symring::Curve::Sigma1);
  m(1, 1) = symring::pairing(sigma, symring::Curve::Sigma1);
  return m;
}

KahlerClass2<Rational> fs_coefficients(int d, int g, const CurveDegrees& degrees) {
  if (d < 2) throw DomainError("fs_coefficients needs d >= 2");
  if (g < 1) throw DomainError("fs_coefficients needs g >= 1");
  RVector rhs(2);
  rhs(0) = Rational(degrees.d0);
  rhs(1) = Rational(degrees.d1);
  const RVector x = solve_exact(pairing_matrix(d, g), rhs);
  if (x.size() != 2) throw DomainError("fs_coefficients: singular pairing system");
  return {x(0), x(1)};
}

Quantization quantization(const PhysicalParams& phys) {
  Quantization out;
  out.q = phys.tau * phys.e2 * phys.vol / (4.0 * pi);
  out.is_integer = std::abs(out.q - std::round(out.q)) <= 1e-9;
  return out;
}

Representability representability(const PhysicalParams& phys, int d, int g) {
  if (d < 2) throw DomainError("representability needs d >= 2");
  if (g < 1) throw DomainError("representability needs g >= 1");
  const auto quant = quantization(phys);
  Representability out;
  out.q = quant.q;
  out.elldelta_ratio_value = 2.0 * (quant.q - d) + d + g - 1;
  std::optional<long> q_int;
  if (quant.is_integer) {
    q_int = std::lround(quant.q);
    out.elldelta_theorem = *q_int + g - 1;
  }
  const double two_q = 2.0 * quant.q;
  if (std::abs(two_q - std::round(two_q)) <= 1e-9) {
    out.elldelta_ratio = Rational(std::lround(two_q)) - Rational(d) + Rational(g - 1);
  }
  out.consistent = out.elldelta_theorem && out.elldelta_ratio &&
                   Rational(*out.elldelta_theorem) == *out.elldelta_ratio;
  return out;
}

std::vector<Rational> eta_sigma_integrals(int d, int g) {
  const auto p = symring::RingParams::make(d, g);
  const auto eta = symring::eta(p);
  const auto sigma = symring::sigma(p);
  std::vector<Rational> out;
  for (int k = 0; k <= d; ++k) {
    out.push_back(symring::integrate(symring::power(eta, d - k) * symring::power(sigma, k)));
  }
  return out;
}

}  // namespace vortexmod
