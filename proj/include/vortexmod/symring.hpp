#pragma once

// Rational cohomology ring of the d-th symmetric product of a genus-g curve.
//
// Generators: eta (degree 2) and xi_1..xi_2g (degree 1, anticommuting). The ideal of
// relations is spanned, degree by degree, by the instances
//
//   eta^r * prod_{i in I1} xi_i * prod_{i in I2} xi_{i+g} * prod_{j in J} (eta - sigma_j)
//
// with I1, I2, J pairwise disjoint subsets of {1..g} and r >= d - |I1| - |I2| - 2|J| + 1,
// where sigma_j = xi_j xi_{j+g}. This set is closed under multiplication by the generators,
// so in each degree the ideal is the linear span of the instances of that degree. Normal
// forms are computed by exact reduction modulo that span; the eliminated (pivot) monomials
// are the ones with the fewest powers of eta, so the top degree is spanned by eta^d.

#include "vortexmod/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace vortexmod::symring {

struct RingParams {
  int d = 1;
  int g = 0;

  /// Validated constructor: d >= 1, 0 <= g <= max_genus.
  static RingParams make(int d, int g);
  static constexpr int max_genus = 8;

  int top_degree() const { return 2 * d; }
  friend bool operator==(const RingParams&, const RingParams&) = default;
};

struct Monomial {
  int eta_power = 0;
  std::vector<int> xi;  // strictly increasing, entries in 1..2g

  int degree() const { return 2 * eta_power + static_cast<int>(xi.size()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Ordered by (total degree, eta power, lexicographic xi indices).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

using Terms = std::map<Monomial, Rational>;

/// Element of Q[eta] (x) Lambda[xi_1..xi_2g] with everything above degree 2d discarded.
/// This is the unreduced side: products are graded-commutative but no relation is applied.
class FreeClass {
 public:
  explicit FreeClass(RingParams params) : params_(params) {}
  static FreeClass monomial(RingParams params, Monomial m, const Rational& coeff = Rational(1));

  const RingParams& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreeClass& add_term(const Monomial& m, const Rational& coeff);

  friend FreeClass operator+(const FreeClass& a, const FreeClass& b);
  friend FreeClass operator-(const FreeClass& a, const FreeClass& b);
  friend FreeClass operator-(const FreeClass& a);
  friend FreeClass operator*(const Rational& s, const FreeClass& a);
  friend FreeClass operator*(const FreeClass& a, const FreeClass& b);
  friend bool operator==(const FreeClass&, const FreeClass&) = default;

 private:
  RingParams params_;
  Terms terms_;
};

/// Element of H*(Sym^d(Sigma), Q), always stored in normal form.
class CohomologyClass {
 public:
  static CohomologyClass zero(RingParams params) { return CohomologyClass(params, {}); }
  static CohomologyClass one(RingParams params);

  const RingParams& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Common degree of all terms; empty for the zero class or an inhomogeneous class.
  std::optional<int> degree() const;

  FreeClass lift() const;

  friend CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
  friend CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
  friend CohomologyClass operator-(const CohomologyClass& a);
  friend CohomologyClass operator*(const Rational& s, const CohomologyClass& a);
  friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

 private:
  friend CohomologyClass normal_form(const FreeClass& a);
  CohomologyClass(RingParams params, Terms terms) : params_(params), terms_(std::move(terms)) {}

  RingParams params_;
  Terms terms_;
};

// Generators. Indices are 1-based: xi for 1 <= j <= 2g, sigma_j for 1 <= j <= g.
FreeClass free_eta(RingParams p);
FreeClass free_xi(RingParams p, int j);
FreeClass free_sigma_j(RingParams p, int j);
FreeClass free_sigma(RingParams p);

CohomologyClass eta(RingParams p);
CohomologyClass xi(RingParams p, int j);
CohomologyClass sigma_j(RingParams p, int j);
CohomologyClass sigma(RingParams p);

CohomologyClass normal_form(const FreeClass& a);
CohomologyClass normal_form(const CohomologyClass& a);

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass power(const CohomologyClass& a, int k);

/// Coefficient of the fundamental class eta^d in the normal form.
Rational integrate(const CohomologyClass& a);

/// Poincare dual of the curve {d x}: d(d+(g-1)(d-1)) eta^{d-1} - d(d-1) eta^{d-2} sigma. Needs d > 1.
CohomologyClass pd_sigma0(RingParams p);

/// Sigma0 = [{d x : x in Sigma}], Sigma1 = [{p + (d-1) x : x in Sigma}].
enum class Curve { Sigma0, Sigma1 };

/// Pairing of a degree-2 class (or zero) with a curve class. Sigma0 goes through the
/// Poincare dual when d > 1; Sigma1 goes through the pullback along x -> p + (d-1)x.
Rational pairing(const CohomologyClass& a, Curve curve);

/// Same pairing, always through the pullback along x -> j p + (d-j) x. Independent of the
/// ring relations; used to cross-check the Poincare-dual route.
Rational pairing_via_pullback(const CohomologyClass& a, Curve curve);

struct RelationInstance {
  int r = 0;
  std::vector<int> I1, I2, J;  // subsets of {1..g}
};

bool is_admissible(RingParams p, const RelationInstance& rel);
/// The unreduced left-hand side of a relation; throws if the instance is not admissible.
FreeClass relation_lhs(RingParams p, const RelationInstance& rel);
/// All admissible instances whose left-hand side has exactly the given degree.
std::vector<RelationInstance> relation_instances(RingParams p, int degree);

/// All monomials of the free algebra in a given degree, in ascending monomial order.
std::vector<Monomial> monomials_of_degree(RingParams p, int degree);
/// Monomials surviving reduction in a degree; their number is the Betti number b_degree.
std::vector<Monomial> standard_monomials(RingParams p, int degree);

}  // namespace vortexmod::symring
