#pragma once

// Genus-zero realization of the Grassmannian embedding. On P^1 with L = O(1), a section of
// O(k) is a binary form of degree k, and E = O(a_1) + ... + O(a_r) with sum a_j = d. The
// map f_s : O^n -> E is an r x n matrix whose row j holds forms of degree a_j, and the
// subspace attached to (E, s) is the image of
//
//   H^0(E^* (x) O(delta)) -> H^0(O(delta))^n,   (h_1..h_r) -> sum_j h_j * row_j.
//
// Vectors in H^0(O(delta))^n are laid out component by component, each component as the
// delta + 1 coefficients of x^delta, x^{delta-1} y, ..., y^delta.

#include "vortexmod/exact_linalg.hpp"
#include "vortexmod/polynomial.hpp"
#include "vortexmod/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace vortexmod::genus0 {

/// Homogeneous form sum_i c_i x^{k-i} y^i of degree k.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rational> coefficients);
  static BinaryForm zero(int degree);
  static BinaryForm monomial(int degree, int y_power, const Rational& c = Rational(1));
  /// (a x + b y)^k
  static BinaryForm linear_power(const Rational& a, const Rational& b, int k);
  /// Homogenizes p(y) (the form at x = 1) to the given degree.
  static BinaryForm homogenize(const Polynomial<Rational>& p, int degree);

  int degree() const { return degree_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  /// Largest m with x^m dividing the form; degree + 1 for the zero form.
  int x_multiplicity() const;
  /// The form at x = 1, as a polynomial in y.
  Polynomial<Rational> dehomogenize() const;
  Rational evaluate(const Rational& x, const Rational& y) const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& s, const BinaryForm& a);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

/// Monic (first nonzero coefficient 1) gcd of forms; zero forms are ignored.
BinaryForm gcd(std::span<const BinaryForm> forms);
/// Exact quotient; throws ParameterError if den does not divide num.
BinaryForm divide(const BinaryForm& num, const BinaryForm& den);
/// Scales so the first nonzero coefficient is 1.
BinaryForm normalized(const BinaryForm& f);
std::string to_string(const BinaryForm& f);

/// r x n matrix of forms realizing f_s; row j has degree a_j.
struct BinaryFormPair {
  int n = 1;
  int r = 1;
  int d = 0;
  std::vector<std::vector<BinaryForm>> rows;

  /// Validates shape, row degrees and generic rank r. Throws ParameterError.
  static BinaryFormPair make(std::vector<std::vector<BinaryForm>> rows);
  /// r = 1 shorthand: s = (s_1, ..., s_n), all of one degree.
  static BinaryFormPair line(std::vector<BinaryForm> s);

  std::vector<int> row_degrees() const;
};

/// Equal up to one overall nonzero scalar (r = 1) or row-wise scalars (r > 1).
bool same_up_to_scalar(const BinaryFormPair& a, const BinaryFormPair& b);

struct SubspaceBasis {
  int n = 1;
  int delta = 0;
  RMatrix basis;  // one basis vector per row, in reduced row echelon form

  long ambient_dim() const { return static_cast<long>(n) * (delta + 1); }
  long dim() const { return static_cast<long>(basis.rows()); }
};

/// Expected dimension r(delta + 1) - d.
long expected_dim(const BinaryFormPair& pair, int delta);

/// Throws ParameterError("delta too small for this pair") if the image dimension is not
/// r(delta + 1) - d.
SubspaceBasis embed_pair(const BinaryFormPair& pair, int delta);

/// All k x k minors of a k x N matrix, column subsets in lexicographic order.
template <typename Derived>
std::vector<typename Derived::Scalar> maximal_minors(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index k = m.rows();
  const Eigen::Index n = m.cols();
  std::vector<Scalar> out;
  if (k > n) return out;
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i;
  MatrixX<Scalar> sub(k, k);
  while (true) {
    for (Eigen::Index j = 0; j < k; ++j) sub.col(j) = m.col(cols[static_cast<std::size_t>(j)]);
    out.push_back(determinant(sub));
    Eigen::Index i = k - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < k; ++j) {
      cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

/// Plucker coordinates, scaled so the first nonzero one is 1.
std::vector<Rational> plucker(const SubspaceBasis& b);

/// Recovers the pair up to scalar. Implemented for r = 1 (any n): the common factor of all
/// components is the base locus of s, and dividing one basis vector by its cofactor returns s.
/// For r >= 2 throws DomainError; use check_subspace_dimension instead.
BinaryFormPair reconstruct(const SubspaceBasis& b);

/// r >= 2 consistency check: dim = r(delta + 1) - d for the claimed (r, d).
bool check_subspace_dimension(const SubspaceBasis& b, int r, int d);

/// Families of degree-d forms parametrized by t: D0 is (x - t y)^d, D1 is (x - p y)(x - t y)^{d-1}.
enum class Family { D0, D1 };

BinaryFormPair family_member(Family family, int d, const Rational& t, const Rational& p);

/// Degree of the curve t -> plucker(embed_pair(family(t), delta)): maximal t-degree of the
/// Plucker coordinates (from an unnormalized polynomial basis) after dividing out their gcd.
long curve_degree(Family family, int d, int delta, const Rational& p = Rational(2));

/// Smallest delta >= 0 with the expected dimension and delta >= every row degree (so that
/// E^* (x) O(delta) is globally generated). Throws ParameterError past max_delta.
int smallest_working_delta(const BinaryFormPair& pair, int max_delta = 64);

}  // namespace vortexmod::genus0
