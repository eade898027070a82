#pragma once

#include "vortexmod/errors.hpp"
#include "vortexmod/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vortexmod {

/// Dense univariate polynomial, coefficients in ascending order, no trailing zeros.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }
  static Polynomial constant(const Scalar& a) { return Polynomial(std::vector<Scalar>{a}); }
  static Polynomial monomial(const Scalar& a, int power) {
    std::vector<Scalar> c(static_cast<std::size_t>(power) + 1, Scalar(0));
    c.back() = a;
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (vortexmod::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    return Polynomial::constant(s) * a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; exact division over a field.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ParameterError("polynomial division by zero");
    std::vector<Scalar> rem = num.c_;
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial{}, num};
    std::vector<Scalar> quot(static_cast<std::size_t>(num.degree() - dd + 1), Scalar(0));
    for (int k = num.degree(); k >= dd; --k) {
      const Scalar f = rem[static_cast<std::size_t>(k)] / den.leading();
      quot[static_cast<std::size_t>(k - dd)] = f;
      if (vortexmod::is_zero(f)) continue;
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(k - dd + j)] -= f * den.c_[static_cast<std::size_t>(j)];
      }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    std::vector<Scalar> c = c_;
    const Scalar lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial(std::move(c));
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && vortexmod::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Newton-form interpolation through (xs[i], ys[i]); xs must be pairwise distinct.
template <typename Scalar>
Polynomial<Scalar> interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  if (xs.size() != ys.size()) throw ParameterError("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<Scalar> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Scalar gap = xs[i] - xs[i - level];
      if (vortexmod::is_zero(gap)) throw ParameterError("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  Polynomial<Scalar> acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * Polynomial<Scalar>(std::vector<Scalar>{-xs[i], Scalar(1)}) +
          Polynomial<Scalar>::constant(dd[i]);
  }
  return acc;
}

}  // namespace vortexmod
