#include "vortexmod/tensor_oracle.hpp"

#include "vortexmod/errors.hpp"
#include "vortexmod/exact_linalg.hpp"

#include <string>
#include <utility>

namespace vortexmod::oracle {

int basis_size(int g) { return 2 * g + 2; }

int basis_degree(int g, int index) {
  if (index == 0) return 0;
  return index == 2 * g + 1 ? 2 : 1;
}

BasisProduct factor_product(int g, int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  const int beta = 2 * g + 1;
  if (a == beta || b == beta) return {0, 0};
  if (b == a + g) return {1, beta};
  if (a == b + g) return {-1, beta};
  return {0, 0};
}

FactorClass::FactorClass(int g) : g_(g), c_(RVector::Zero(basis_size(g))) {}

FactorClass FactorClass::basis(int g, int index) {
  FactorClass out(g);
  out.c_(index) = 1;
  return out;
}

FactorClass operator+(const FactorClass& a, const FactorClass& b) {
  FactorClass out(a.g_);
  for (Eigen::Index i = 0; i < out.c_.size(); ++i) out.c_(i) = a.c_(i) + b.c_(i);
  return out;
}

FactorClass operator*(const FactorClass& a, const FactorClass& b) {
  if (a.g_ != b.g_) throw ParameterError("factor classes of different genus");
  FactorClass out(a.g_);
  const int n = basis_size(a.g_);
  for (int i = 0; i < n; ++i) {
    if (a.c_(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b.c_(j).is_zero()) continue;
      const auto [sign, k] = factor_product(a.g_, i, j);
      if (sign == 0) continue;
      out.c_(k) += sign > 0 ? a.c_(i) * b.c_(j) : -(a.c_(i) * b.c_(j));
    }
  }
  return out;
}

bool operator==(const FactorClass& a, const FactorClass& b) {
  return a.g_ == b.g_ && exact_equal(a.c_, b.c_);
}

namespace {

long checked_size(RingParams p) {
  long n = 1;
  for (int k = 0; k < p.d; ++k) {
    n *= basis_size(p.g);
    if (n > TensorClass::max_entries) {
      throw DomainError("tensor oracle: (2g+2)^d too large for d=" + std::to_string(p.d) +
                        ", g=" + std::to_string(p.g));
    }
  }
  return n;
}

std::vector<long> nonzeros(const RVector& v) {
  std::vector<long> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) out.push_back(static_cast<long>(i));
  }
  return out;
}

}  // namespace

TensorClass::TensorClass(RingParams params)
    : params_(params), c_(RVector::Zero(checked_size(params))) {}

std::vector<int> TensorClass::tuple(long flat) const {
  const int b = basis_size(params_.g);
  std::vector<int> out(static_cast<std::size_t>(params_.d));
  for (int k = params_.d - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(flat % b);
    flat /= b;
  }
  return out;
}

long TensorClass::flat(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != params_.d) throw ParameterError("tensor tuple has wrong length");
  const int b = basis_size(params_.g);
  long out = 0;
  for (int a : tuple) {
    if (a < 0 || a >= b) throw ParameterError("tensor tuple entry out of range");
    out = out * b + a;
  }
  return out;
}

bool TensorClass::is_zero() const {
  for (Eigen::Index i = 0; i < c_.size(); ++i) {
    if (!c_(i).is_zero()) return false;
  }
  return true;
}

TensorClass operator+(const TensorClass& a, const TensorClass& b) {
  if (!(a.params_ == b.params_)) throw ParameterError("tensor classes live in different rings");
  TensorClass out = a;
  for (Eigen::Index i = 0; i < out.c_.size(); ++i) {
    if (!b.c_(i).is_zero()) out.c_(i) += b.c_(i);
  }
  return out;
}

TensorClass operator*(const Rational& s, const TensorClass& a) {
  TensorClass out = a;
  for (Eigen::Index i = 0; i < out.c_.size(); ++i) {
    if (!out.c_(i).is_zero()) out.c_(i) *= s;
  }
  return out;
}

TensorClass operator-(const TensorClass& a, const TensorClass& b) { return a + Rational(-1) * b; }

bool operator==(const TensorClass& a, const TensorClass& b) {
  return a.params_ == b.params_ && exact_equal(a.c_, b.c_);
}

TensorClass tensor_one(RingParams p) {
  TensorClass out(p);
  out.add(std::vector<int>(static_cast<std::size_t>(p.d), 0), Rational(1));
  return out;
}

TensorClass beta_in(RingParams p, int k) {
  std::vector<int> t(static_cast<std::size_t>(p.d), 0);
  t.at(static_cast<std::size_t>(k)) = 2 * p.g + 1;
  TensorClass out(p);
  out.add(t, Rational(1));
  return out;
}

TensorClass alpha_in(RingParams p, int j, int k) {
  if (j < 1 || j > 2 * p.g) throw ParameterError("alpha index out of range");
  std::vector<int> t(static_cast<std::size_t>(p.d), 0);
  t.at(static_cast<std::size_t>(k)) = j;
  TensorClass out(p);
  out.add(t, Rational(1));
  return out;
}

TensorClass oracle_multiply(const TensorClass& a, const TensorClass& b) {
  if (!(a.params() == b.params())) throw ParameterError("tensor classes live in different rings");
  const RingParams p = a.params();
  TensorClass out(p);
  const auto na = nonzeros(a.coefficients());
  const auto nb = nonzeros(b.coefficients());
  std::vector<int> prod(static_cast<std::size_t>(p.d));
  for (long ia : na) {
    const auto ta = a.tuple(ia);
    for (long ib : nb) {
      const auto tb = b.tuple(ib);
      int sign = 1;
      // a_k moves past b_l for every l < k
      int odd_b_before = 0;
      for (int k = 0; k < p.d && sign != 0; ++k) {
        const auto sk = static_cast<std::size_t>(k);
        if (basis_degree(p.g, ta[sk]) % 2 == 1 && odd_b_before % 2 == 1) sign = -sign;
        const auto [s, idx] = factor_product(p.g, ta[sk], tb[sk]);
        sign *= s;
        prod[sk] = idx;
        if (basis_degree(p.g, tb[sk]) % 2 == 1) ++odd_b_before;
      }
      if (sign == 0) continue;
      const Rational c = a.coefficients()(ia) * b.coefficients()(ib);
      out.add(prod, sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

namespace {

TensorClass eta_image(RingParams p) {
  TensorClass out(p);
  for (int k = 0; k < p.d; ++k) out = out + beta_in(p, k);
  return out;
}

TensorClass xi_image(RingParams p, int j) {
  TensorClass out(p);
  for (int k = 0; k < p.d; ++k) out = out + alpha_in(p, j, k);
  return out;
}

}  // namespace

TensorClass pullback(const symring::FreeClass& a) {
  const RingParams p = a.params();
  TensorClass total(p);
  if (a.is_zero()) return total;
  const TensorClass eta = eta_image(p);
  std::vector<TensorClass> eta_powers{tensor_one(p)};
  std::vector<TensorClass> xis;
  for (int j = 1; j <= 2 * p.g; ++j) xis.push_back(xi_image(p, j));
  for (const auto& [m, c] : a.terms()) {
    while (static_cast<int>(eta_powers.size()) <= m.eta_power) {
      eta_powers.push_back(oracle_multiply(eta_powers.back(), eta));
    }
    TensorClass term = eta_powers[static_cast<std::size_t>(m.eta_power)];
    for (int j : m.xi) term = oracle_multiply(term, xis[static_cast<std::size_t>(j - 1)]);
    total = total + c * term;
  }
  return total;
}

TensorClass pullback(const symring::CohomologyClass& a) { return pullback(a.lift()); }

Rational oracle_integrate(const TensorClass& a) {
  const RingParams p = a.params();
  const std::vector<int> top(static_cast<std::size_t>(p.d), 2 * p.g + 1);
  return a.coefficient(top) / Rational(factorial(p.d));
}

TensorClass permute_factors(const TensorClass& a, std::span<const int> perm) {
  const RingParams p = a.params();
  if (static_cast<int>(perm.size()) != p.d) throw ParameterError("permutation has wrong length");
  std::vector<bool> hit(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= p.d || hit[static_cast<std::size_t>(v)]) throw ParameterError("not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  TensorClass out(p);
  std::vector<int> moved(perm.size());
  for (long i : nonzeros(a.coefficients())) {
    const auto t = a.tuple(i);
    int inversions = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      moved[static_cast<std::size_t>(perm[k])] = t[k];
      if (basis_degree(p.g, t[k]) % 2 == 0) continue;
      for (std::size_t l = k + 1; l < t.size(); ++l) {
        if (basis_degree(p.g, t[l]) % 2 == 1 && perm[l] < perm[k]) ++inversions;
      }
    }
    const Rational& c = a.coefficients()(i);
    out.add(moved, inversions % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

}  // namespace vortexmod::oracle
