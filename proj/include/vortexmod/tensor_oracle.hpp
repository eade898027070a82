#pragma once

// Brute-force model of H*(Sigma^d): the d-fold graded tensor power of H*(Sigma), used as an
// independent check on symring. Each factor has basis
//
//   0 -> 1,   1..2g -> alpha_1..alpha_2g,   2g+1 -> beta
//
// with alpha_i alpha_{i+g} = beta = -alpha_{i+g} alpha_i and all other positive-degree
// products zero. Tensor classes are dense coefficient vectors over all d-tuples of basis
// indices; the first factor is the most significant digit.

#include "vortexmod/rational.hpp"
#include "vortexmod/symring.hpp"

#include <span>
#include <vector>

namespace vortexmod::oracle {

using symring::RingParams;

/// Element of H*(Sigma) in the basis {1, alpha_1..alpha_2g, beta}.
class FactorClass {
 public:
  explicit FactorClass(int g);
  static FactorClass basis(int g, int index);

  int genus() const { return g_; }
  const RVector& coefficients() const { return c_; }
  Rational& operator[](int i) { return c_(i); }
  const Rational& operator[](int i) const { return c_(i); }

  friend FactorClass operator+(const FactorClass& a, const FactorClass& b);
  friend FactorClass operator*(const FactorClass& a, const FactorClass& b);
  friend bool operator==(const FactorClass& a, const FactorClass& b);

 private:
  int g_;
  RVector c_;
};

int basis_size(int g);
int basis_degree(int g, int index);

/// Product of two basis elements of one factor: {sign, index}; sign 0 means the product vanishes.
struct BasisProduct {
  int sign;
  int index;
};
BasisProduct factor_product(int g, int a, int b);

class TensorClass {
 public:
  /// Throws DomainError when (2g+2)^d exceeds the dense size limit.
  explicit TensorClass(RingParams params);
  static constexpr long max_entries = 1L << 20;

  const RingParams& params() const { return params_; }
  const RVector& coefficients() const { return c_; }
  long size() const { return static_cast<long>(c_.size()); }

  std::vector<int> tuple(long flat) const;
  long flat(std::span<const int> tuple) const;
  Rational coefficient(std::span<const int> tuple) const { return c_(flat(tuple)); }
  void add(std::span<const int> tuple, const Rational& c) { c_(flat(tuple)) += c; }

  bool is_zero() const;

  friend TensorClass operator+(const TensorClass& a, const TensorClass& b);
  friend TensorClass operator-(const TensorClass& a, const TensorClass& b);
  friend TensorClass operator*(const Rational& s, const TensorClass& a);
  friend bool operator==(const TensorClass& a, const TensorClass& b);

 private:
  RingParams params_;
  RVector c_;
};

/// The unit 1 (x) ... (x) 1.
TensorClass tensor_one(RingParams p);
/// beta placed in factor k (0-based), units elsewhere.
TensorClass beta_in(RingParams p, int k);
/// alpha_j placed in factor k (0-based), units elsewhere.
TensorClass alpha_in(RingParams p, int j, int k);

/// Graded product with the Koszul sign (-1)^{sum over k > l of |a_k| |b_l|}.
TensorClass oracle_multiply(const TensorClass& a, const TensorClass& b);

/// Ring map eta -> sum_k beta_k, xi_j -> sum_k alpha_{j,k}.
TensorClass pullback(const symring::FreeClass& a);
TensorClass pullback(const symring::CohomologyClass& a);

/// Coefficient of beta (x) ... (x) beta divided by d!.
Rational oracle_integrate(const TensorClass& a);

/// Moves factor k to position perm[k], with the Koszul sign of the odd factors crossed.
TensorClass permute_factors(const TensorClass& a, std::span<const int> perm);

}  // namespace vortexmod::oracle
