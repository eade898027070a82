#include "vortexmod/genus0.hpp"

#include "vortexmod/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace vortexmod::genus0 {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coefficients)
    : degree_(degree), c_(std::move(coefficients)) {
  if (degree < 0) throw ParameterError("binary form degree must be >= 0");
  if (static_cast<int>(c_.size()) != degree + 1) {
    throw ParameterError("binary form of degree " + std::to_string(degree) + " needs " +
                         std::to_string(degree + 1) + " coefficients");
  }
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Rational>(static_cast<std::size_t>(degree) + 1, Rational(0)));
}

BinaryForm BinaryForm::monomial(int degree, int y_power, const Rational& c) {
  if (y_power < 0 || y_power > degree) throw ParameterError("monomial y power out of range");
  BinaryForm out = zero(degree);
  out.c_[static_cast<std::size_t>(y_power)] = c;
  return out;
}

BinaryForm BinaryForm::linear_power(const Rational& a, const Rational& b, int k) {
  if (k < 0) throw ParameterError("negative power of a linear form");
  BinaryForm out(0, {Rational(1)});
  const BinaryForm lin(1, {a, b});
  for (int i = 0; i < k; ++i) out = out * lin;
  return out;
}

BinaryForm BinaryForm::homogenize(const Polynomial<Rational>& p, int degree) {
  if (p.degree() > degree) throw ParameterError("homogenize: polynomial degree exceeds form degree");
  BinaryForm out = zero(degree);
  for (int i = 0; i <= p.degree(); ++i) out.c_[static_cast<std::size_t>(i)] = p.coeff(i);
  return out;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
}

int BinaryForm::x_multiplicity() const {
  int m = 0;
  for (int i = degree_; i >= 0 && c_[static_cast<std::size_t>(i)].is_zero(); --i) ++m;
  return m;
}

Polynomial<Rational> BinaryForm::dehomogenize() const { return Polynomial<Rational>(c_); }

Rational BinaryForm::evaluate(const Rational& x, const Rational& y) const {
  // sum_i c_i x^{k-i} y^i by Horner in y with x powers folded in
  Rational acc(0);
  Rational x_power(1);
  for (int i = degree_; i >= 0; --i) {
    acc = acc * y + c_[static_cast<std::size_t>(i)] * x_power;
    x_power *= x;
  }
  return acc;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out = BinaryForm::zero(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    const auto& ca = a.c_[static_cast<std::size_t>(i)];
    if (ca.is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) {
      out.c_[static_cast<std::size_t>(i + j)] += ca * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

BinaryForm operator*(const Rational& s, const BinaryForm& a) {
  BinaryForm out = a;
  for (auto& c : out.c_) c *= s;
  return out;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) throw ParameterError("adding binary forms of different degree");
  BinaryForm out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

BinaryForm normalized(const BinaryForm& f) {
  for (const auto& c : f.coefficients()) {
    if (!c.is_zero()) return (Rational(1) / c) * f;
  }
  return f;
}

BinaryForm gcd(std::span<const BinaryForm> forms) {
  int x_power = -1;
  Polynomial<Rational> g;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    const int m = f.x_multiplicity();
    x_power = any ? std::min(x_power, m) : m;
    g = any ? gcd(g, f.dehomogenize()) : f.dehomogenize().monic();
    any = true;
  }
  if (!any) return BinaryForm::zero(0);
  const BinaryForm y_part = BinaryForm::homogenize(g, g.degree());
  return normalized(BinaryForm::monomial(x_power, 0) * y_part);
}

BinaryForm divide(const BinaryForm& num, const BinaryForm& den) {
  if (den.is_zero()) throw ParameterError("division by the zero form");
  const int k = num.degree() - den.degree();
  if (k < 0) throw ParameterError("divisor has larger degree");
  if (num.is_zero()) return BinaryForm::zero(k);
  const int mx = num.x_multiplicity() - den.x_multiplicity();
  if (mx < 0) throw ParameterError("form does not divide");
  auto [q, rem] = divmod(num.dehomogenize(), den.dehomogenize());
  if (!rem.is_zero()) throw ParameterError("form does not divide");
  return BinaryForm::homogenize(q, k);
}

std::string to_string(const BinaryForm& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    if (i > 0) out += ",";
    out += vortexmod::to_string(f.coefficients()[i]);
  }
  return out + "]";
}

namespace {

// Matrix of f_s evaluated at (1, t).
RMatrix evaluate_at(const std::vector<std::vector<BinaryForm>>& rows, const Rational& t) {
  RMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].evaluate(Rational(1), t);
    }
  }
  return m;
}

}  // namespace

BinaryFormPair BinaryFormPair::make(std::vector<std::vector<BinaryForm>> rows) {
  if (rows.empty()) throw ParameterError("pair needs at least one row");
  BinaryFormPair out;
  out.r = static_cast<int>(rows.size());
  out.n = static_cast<int>(rows.front().size());
  if (out.n < out.r) throw ParameterError("pair needs n >= r");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != out.n) throw ParameterError("pair rows have different lengths");
    for (const auto& f : row) {
      if (f.degree() != row.front().degree()) {
        throw ParameterError("entries of one row must share a degree");
      }
    }
    out.d += row.front().degree();
  }
  // Minors are forms of degree <= d; at x = 1 they are polynomials of degree <= d in t,
  // so vanishing at d + 1 values of t means they vanish identically.
  bool full_rank = false;
  for (int t = 0; t <= out.d && !full_rank; ++t) {
    full_rank = rank(evaluate_at(rows, Rational(t))) == out.r;
  }
  if (!full_rank) throw ParameterError("pair does not have generic rank r = " + std::to_string(out.r));
  out.rows = std::move(rows);
  return out;
}

BinaryFormPair BinaryFormPair::line(std::vector<BinaryForm> s) {
  std::vector<std::vector<BinaryForm>> rows;
  rows.push_back(std::move(s));
  return make(std::move(rows));
}

std::vector<int> BinaryFormPair::row_degrees() const {
  std::vector<int> out;
  for (const auto& row : rows) out.push_back(row.front().degree());
  return out;
}

bool same_up_to_scalar(const BinaryFormPair& a, const BinaryFormPair& b) {
  if (a.n != b.n || a.r != b.r || a.row_degrees() != b.row_degrees()) return false;
  std::optional<Rational> scale;
  for (int i = 0; i < a.r; ++i) {
    if (a.r > 1) scale.reset();
    for (int j = 0; j < a.n; ++j) {
      const auto& fa = a.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& fb = b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int k = 0; k <= fa.degree(); ++k) {
        const Rational& ca = fa[k];
        const Rational& cb = fb[k];
        if (ca.is_zero() != cb.is_zero()) return false;
        if (ca.is_zero()) continue;
        const Rational ratio = cb / ca;
        if (!scale) scale = ratio;
        if (*scale != ratio) return false;
      }
    }
  }
  return true;
}

long expected_dim(const BinaryFormPair& pair, int delta) {
  return static_cast<long>(pair.r) * (delta + 1) - pair.d;
}

SubspaceBasis embed_pair(const BinaryFormPair& pair, int delta) {
  if (delta < 0) throw ParameterError("delta must be >= 0");
  if (expected_dim(pair, delta) < 0) throw ParameterError("delta too small for this pair");
  std::vector<RVector> images;
  const Eigen::Index block = delta + 1;
  for (const auto& row : pair.rows) {
    const int h_degree = delta - row.front().degree();
    for (int i = 0; i <= h_degree; ++i) {
      const BinaryForm h = BinaryForm::monomial(h_degree, i);
      RVector v = RVector::Zero(pair.n * block);
      for (int j = 0; j < pair.n; ++j) {
        const BinaryForm prod = h * row[static_cast<std::size_t>(j)];
        for (int k = 0; k <= delta; ++k) v(j * block + k) = prod[k];
      }
      images.push_back(std::move(v));
    }
  }
  RMatrix gens = RMatrix::Zero(static_cast<Eigen::Index>(images.size()), pair.n * block);
  for (std::size_t i = 0; i < images.size(); ++i) gens.row(static_cast<Eigen::Index>(i)) = images[i].transpose();
  SubspaceBasis out{pair.n, delta, row_space(gens)};
  if (out.dim() != expected_dim(pair, delta)) {
    throw ParameterError("delta too small for this pair: dimension " + std::to_string(out.dim()) +
                         ", expected " + std::to_string(expected_dim(pair, delta)));
  }
  return out;
}

std::vector<Rational> plucker(const SubspaceBasis& b) {
  if (b.dim() == 0) throw ParameterError("plucker: empty basis");
  auto coords = maximal_minors(b.basis);
  auto first = std::find_if(coords.begin(), coords.end(), [](const Rational& c) { return !c.is_zero(); });
  const Rational lead = *first;
  for (auto& c : coords) c /= lead;
  return coords;
}

namespace {

BinaryForm component(const SubspaceBasis& b, Eigen::Index row, int j) {
  std::vector<Rational> c(static_cast<std::size_t>(b.delta) + 1);
  for (int k = 0; k <= b.delta; ++k) c[static_cast<std::size_t>(k)] = b.basis(row, j * (b.delta + 1) + k);
  return BinaryForm(b.delta, std::move(c));
}

}  // namespace

BinaryFormPair reconstruct(const SubspaceBasis& b) {
  if (b.dim() == 0) throw ParameterError("reconstruct: empty basis");
  // r = 1: every basis vector is h * s, and the h range over all forms of degree delta - d.
  std::vector<BinaryForm> all;
  for (Eigen::Index i = 0; i < b.basis.rows(); ++i) {
    for (int j = 0; j < b.n; ++j) all.push_back(component(b, i, j));
  }
  const BinaryForm base = gcd(all);
  std::vector<BinaryForm> first(all.begin(), all.begin() + b.n);
  const BinaryForm cofactor = divide(gcd(first), base);
  const int d = b.delta - cofactor.degree();
  if (b.dim() != b.delta + 1 - d) {
    throw DomainError("reconstruct: subspace is not of the form h * s for a single s; "
                      "only rank one is implemented");
  }
  std::vector<BinaryForm> s;
  for (const auto& f : first) s.push_back(divide(f, cofactor));
  // scale so the first nonzero coefficient overall is 1
  const auto lead = std::find_if(s.begin(), s.end(), [](const BinaryForm& f) { return !f.is_zero(); });
  if (lead != s.end()) {
    const auto& c = lead->coefficients();
    const Rational first = *std::find_if(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
    for (auto& f : s) f = (Rational(1) / first) * f;
  }
  auto pair = BinaryFormPair::line(std::move(s));
  // the rebuilt pair must give back the same subspace
  if (!exact_equal(embed_pair(pair, b.delta).basis, b.basis)) {
    throw DomainError("reconstruct: subspace does not saturate to a rank-one subsheaf");
  }
  return pair;
}

bool check_subspace_dimension(const SubspaceBasis& b, int r, int d) {
  return b.dim() == static_cast<long>(r) * (b.delta + 1) - d;
}

BinaryFormPair family_member(Family family, int d, const Rational& t, const Rational& p) {
  if (d < 1) throw ParameterError("family needs d >= 1");
  if (family == Family::D0) return BinaryFormPair::line({BinaryForm::linear_power(1, -t, d)});
  return BinaryFormPair::line({BinaryForm::linear_power(1, -p, 1) * BinaryForm::linear_power(1, -t, d - 1)});
}

long curve_degree(Family family, int d, int delta, const Rational& p) {
  if (d < 1) throw ParameterError("curve_degree needs d >= 1");
  if (delta < d) throw ParameterError("curve_degree needs delta >= d");
  const int k = delta - d + 1;  // subspace dimension
  // Basis h_i * s_t with h_i = x^{k-1-i} y^i: entries are polynomials of degree <= d in t,
  // so every minor has degree <= k d.
  const int samples = k * d + 1;
  std::vector<Rational> nodes;
  std::vector<std::vector<Rational>> values;
  for (int a = 0; a < samples; ++a) {
    const Rational t(a);
    const BinaryForm s = family_member(family, d, t, p).rows[0][0];
    RMatrix m = RMatrix::Zero(k, delta + 1);
    for (int i = 0; i < k; ++i) {
      const BinaryForm row = BinaryForm::monomial(k - 1, i) * s;
      for (int c = 0; c <= delta; ++c) m(i, c) = row[c];
    }
    const auto minors = maximal_minors(m);
    if (values.empty()) values.resize(minors.size());
    for (std::size_t c = 0; c < minors.size(); ++c) values[c].push_back(minors[c]);
    nodes.push_back(t);
  }
  std::vector<Polynomial<Rational>> coords;
  Polynomial<Rational> common;
  for (const auto& v : values) {
    coords.push_back(interpolate<Rational>(nodes, v));
    common = gcd(common, coords.back());
  }
  long degree = 0;
  for (const auto& c : coords) {
    if (c.is_zero()) continue;
    degree = std::max<long>(degree, divmod(c, common).first.degree());
  }
  return degree;
}

int smallest_working_delta(const BinaryFormPair& pair, int max_delta) {
  const auto degrees = pair.row_degrees();
  const int lowest = std::max(0, *std::max_element(degrees.begin(), degrees.end()));
  for (int delta = lowest; delta <= max_delta; ++delta) {
    try {
      embed_pair(pair, delta);
      return delta;
    } catch (const ParameterError&) {
    }
  }
  throw ParameterError("no working delta up to " + std::to_string(max_delta));
}

}  // namespace vortexmod::genus0
