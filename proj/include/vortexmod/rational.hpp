#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>

namespace vortexmod {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMatrix = MatrixX<Rational>;
using RVector = VectorX<Rational>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline BigInt numer(const Rational& x) { return BigInt(boost::multiprecision::numerator(x)); }
inline BigInt denom(const Rational& x) { return BigInt(boost::multiprecision::denominator(x)); }

inline bool is_integer(const Rational& x) { return denom(x) == 1; }

/// Canonical text form: "p" when the denominator is one, otherwise "p/q" in lowest terms.
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const BigInt& x) { return x.str(); }

/// Parses "p", "-p", "p/q". Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

inline BigInt factorial(long n) {
  BigInt acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace vortexmod
