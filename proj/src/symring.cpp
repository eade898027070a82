#include "vortexmod/symring.hpp"

#include "vortexmod/errors.hpp"
#include "vortexmod/exact_linalg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace vortexmod::symring {

RingParams RingParams::make(int d, int g) {
  if (d < 1) throw ParameterError("ring parameters: d must be >= 1, got " + std::to_string(d));
  if (g < 0 || g > max_genus) {
    throw ParameterError("ring parameters: g must lie in [0, " + std::to_string(max_genus) +
                         "], got " + std::to_string(g));
  }
  return RingParams{d, g};
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.eta_power <=> b.eta_power; c != 0) return c;
  return a.xi <=> b.xi;
}

namespace {

void check_same(const RingParams& a, const RingParams& b) {
  if (!(a == b)) throw ParameterError("cohomology classes live in different rings");
}

// Product of exterior monomials; sign 0 when an index repeats.
int merge_xi(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the remaining a.size() - i elements of a
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

void accumulate(Terms& terms, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

struct DegreeBlock {
  std::vector<Monomial> monomials;  // ascending order; pivots eliminate the smallest
  std::map<Monomial, Eigen::Index> column;
  Echelon<Rational> relations;
  std::vector<Monomial> standard;
};

class Reducer {
 public:
  explicit Reducer(RingParams p) : blocks_(static_cast<std::size_t>(p.top_degree()) + 1) {
    for (int k = 0; k <= p.top_degree(); ++k) {
      auto& block = blocks_[static_cast<std::size_t>(k)];
      block.monomials = monomials_of_degree(p, k);
      for (std::size_t c = 0; c < block.monomials.size(); ++c) {
        block.column.emplace(block.monomials[c], static_cast<Eigen::Index>(c));
      }
      const auto instances = relation_instances(p, k);
      RMatrix rows = RMatrix::Zero(static_cast<Eigen::Index>(instances.size()),
                                   static_cast<Eigen::Index>(block.monomials.size()));
      for (std::size_t r = 0; r < instances.size(); ++r) {
        const FreeClass lhs = relation_lhs(p, instances[r]);
        for (const auto& [m, c] : lhs.terms()) {
          rows(static_cast<Eigen::Index>(r), block.column.at(m)) = c;
        }
      }
      block.relations = reduced_row_echelon(rows);
      std::vector<bool> pivot(block.monomials.size(), false);
      for (auto c : block.relations.pivots) pivot[static_cast<std::size_t>(c)] = true;
      for (std::size_t c = 0; c < block.monomials.size(); ++c) {
        if (!pivot[c]) block.standard.push_back(block.monomials[c]);
      }
    }
    const auto& top = blocks_.back().standard;
    if (top.size() != 1 || !(top.front() == Monomial{p.d, {}})) {
      throw std::logic_error("relation span does not leave eta^d as the only top-degree class");
    }
  }

  const DegreeBlock& block(int k) const { return blocks_[static_cast<std::size_t>(k)]; }

  Terms reduce(const Terms& raw) const {
    std::map<int, RVector> by_degree;
    for (const auto& [m, c] : raw) {
      const int k = m.degree();
      if (k >= static_cast<int>(blocks_.size())) continue;
      const auto& b = block(k);
      auto [it, inserted] = by_degree.try_emplace(k);
      if (inserted) it->second = RVector::Zero(static_cast<Eigen::Index>(b.monomials.size()));
      it->second(b.column.at(m)) += c;
    }
    Terms out;
    for (auto& [k, v] : by_degree) {
      const auto& b = block(k);
      const RVector reduced = reduce_modulo(b.relations, std::move(v));
      for (Eigen::Index c = 0; c < reduced.size(); ++c) {
        if (!reduced(c).is_zero()) out.emplace(b.monomials[static_cast<std::size_t>(c)], reduced(c));
      }
    }
    return out;
  }

 private:
  std::vector<DegreeBlock> blocks_;
};

std::shared_ptr<const Reducer> reducer_for(RingParams p) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Reducer>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p.d, p.g}];
  if (!slot) slot = std::make_shared<const Reducer>(p);
  return slot;
}

void check_subset(const RingParams& p, const std::vector<int>& s, const char* name) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > p.g) {
      throw ParameterError(std::string("relation: index out of range in ") + name);
    }
    if (i > 0 && s[i] <= s[i - 1]) {
      throw ParameterError(std::string("relation: ") + name + " must be strictly increasing");
    }
  }
}

}  // namespace

FreeClass FreeClass::monomial(RingParams params, Monomial m, const Rational& coeff) {
  FreeClass out(params);
  out.add_term(m, coeff);
  return out;
}

FreeClass& FreeClass::add_term(const Monomial& m, const Rational& coeff) {
  for (std::size_t i = 0; i < m.xi.size(); ++i) {
    if (m.xi[i] < 1 || m.xi[i] > 2 * params_.g || (i > 0 && m.xi[i] <= m.xi[i - 1])) {
      throw ParameterError("monomial xi indices must be strictly increasing within 1..2g");
    }
  }
  if (m.eta_power < 0) throw ParameterError("monomial eta power must be nonnegative");
  if (m.degree() > params_.top_degree()) return *this;
  accumulate(terms_, m, coeff);
  return *this;
}

FreeClass operator+(const FreeClass& a, const FreeClass& b) {
  check_same(a.params_, b.params_);
  FreeClass out = a;
  for (const auto& [m, c] : b.terms_) accumulate(out.terms_, m, c);
  return out;
}

FreeClass operator-(const FreeClass& a) {
  FreeClass out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

FreeClass operator-(const FreeClass& a, const FreeClass& b) { return a + (-b); }

FreeClass operator*(const Rational& s, const FreeClass& a) {
  FreeClass out(a.params_);
  if (s.is_zero()) return out;
  out.terms_ = a.terms_;
  for (auto& [m, c] : out.terms_) c *= s;
  return out;
}

FreeClass operator*(const FreeClass& a, const FreeClass& b) {
  check_same(a.params_, b.params_);
  FreeClass out(a.params_);
  const int top = a.params_.top_degree();
  Monomial prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > top) continue;
      const int sign = merge_xi(ma.xi, mb.xi, prod.xi);
      if (sign == 0) continue;
      prod.eta_power = ma.eta_power + mb.eta_power;
      // odd factors of ma pass over eta powers of mb freely; sign only from xi reordering
      accumulate(out.terms_, prod, sign > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

CohomologyClass CohomologyClass::one(RingParams params) {
  return CohomologyClass(params, Terms{{Monomial{}, Rational(1)}});
}

Rational CohomologyClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> CohomologyClass::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int k = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != k) return std::nullopt;
  }
  return k;
}

FreeClass CohomologyClass::lift() const {
  FreeClass out(params_);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
  check_same(a.params_, b.params_);
  Terms t = a.terms_;
  for (const auto& [m, c] : b.terms_) accumulate(t, m, c);
  return CohomologyClass(a.params_, std::move(t));
}

CohomologyClass operator-(const CohomologyClass& a) { return Rational(-1) * a; }

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) { return a + (-b); }

CohomologyClass operator*(const Rational& s, const CohomologyClass& a) {
  if (s.is_zero()) return CohomologyClass::zero(a.params_);
  Terms t = a.terms_;
  for (auto& [m, c] : t) c *= s;
  return CohomologyClass(a.params_, std::move(t));
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
  return normal_form(a.lift() * b.lift());
}

FreeClass free_eta(RingParams p) { return FreeClass::monomial(p, Monomial{1, {}}); }

FreeClass free_xi(RingParams p, int j) {
  if (j < 1 || j > 2 * p.g) {
    throw ParameterError("xi index " + std::to_string(j) + " outside 1.." + std::to_string(2 * p.g));
  }
  return FreeClass::monomial(p, Monomial{0, {j}});
}

FreeClass free_sigma_j(RingParams p, int j) {
  if (j < 1 || j > p.g) {
    throw ParameterError("sigma index " + std::to_string(j) + " outside 1.." + std::to_string(p.g));
  }
  return FreeClass::monomial(p, Monomial{0, {j, j + p.g}});
}

FreeClass free_sigma(RingParams p) {
  FreeClass out(p);
  for (int j = 1; j <= p.g; ++j) out = out + free_sigma_j(p, j);
  return out;
}

CohomologyClass eta(RingParams p) { return normal_form(free_eta(p)); }
CohomologyClass xi(RingParams p, int j) { return normal_form(free_xi(p, j)); }
CohomologyClass sigma_j(RingParams p, int j) { return normal_form(free_sigma_j(p, j)); }
CohomologyClass sigma(RingParams p) { return normal_form(free_sigma(p)); }

CohomologyClass normal_form(const FreeClass& a) {
  return CohomologyClass(a.params(), reducer_for(a.params())->reduce(a.terms()));
}

CohomologyClass normal_form(const CohomologyClass& a) { return normal_form(a.lift()); }

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) { return a * b; }

CohomologyClass power(const CohomologyClass& a, int k) {
  if (k < 0) throw ParameterError("negative power of a cohomology class");
  CohomologyClass acc = CohomologyClass::one(a.params());
  for (int i = 0; i < k; ++i) acc = acc * a;
  return acc;
}

Rational integrate(const CohomologyClass& a) {
  return a.coefficient(Monomial{a.params().d, {}});
}

CohomologyClass pd_sigma0(RingParams p) {
  if (p.d <= 1) throw DomainError("pd_sigma0 needs d > 1");
  const int d = p.d;
  const int g = p.g;
  FreeClass out = FreeClass::monomial(p, Monomial{d - 1, {}}, Rational(d * (d + (g - 1) * (d - 1))));
  out = out - Rational(d * (d - 1)) * (FreeClass::monomial(p, Monomial{d - 2, {}}) * free_sigma(p));
  return normal_form(out);
}

namespace {

void require_degree_two(const CohomologyClass& a) {
  if (a.is_zero()) return;
  const auto k = a.degree();
  if (!k || *k != 2) throw ParameterError("pairing with a curve needs a class of degree 2");
}

}  // namespace

Rational pairing_via_pullback(const CohomologyClass& a, Curve curve) {
  require_degree_two(a);
  const auto& p = a.params();
  const int weight = p.d - (curve == Curve::Sigma0 ? 0 : 1);
  // pullback: eta -> weight*beta, xi_i -> weight*alpha_i, alpha_i alpha_{i+g} = beta
  Rational total(0);
  for (const auto& [m, c] : a.terms()) {
    if (m.eta_power == 1) {
      total += c * weight;
    } else if (m.xi.size() == 2 && m.xi[1] == m.xi[0] + p.g) {
      total += c * weight * weight;
    }
  }
  return total;
}

Rational pairing(const CohomologyClass& a, Curve curve) {
  require_degree_two(a);
  if (curve == Curve::Sigma0 && a.params().d > 1) {
    return integrate(a * pd_sigma0(a.params()));
  }
  return pairing_via_pullback(a, curve);
}

bool is_admissible(RingParams p, const RelationInstance& rel) {
  if (rel.r < 0) return false;
  std::vector<int> seen(static_cast<std::size_t>(p.g) + 1, 0);
  for (const auto* s : {&rel.I1, &rel.I2, &rel.J}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      const int v = (*s)[i];
      if (v < 1 || v > p.g || (i > 0 && v <= (*s)[i - 1])) return false;
      if (seen[static_cast<std::size_t>(v)]++) return false;
    }
  }
  const int bound = p.d - static_cast<int>(rel.I1.size()) - static_cast<int>(rel.I2.size()) -
                    2 * static_cast<int>(rel.J.size()) + 1;
  return rel.r >= bound;
}

FreeClass relation_lhs(RingParams p, const RelationInstance& rel) {
  check_subset(p, rel.I1, "I1");
  check_subset(p, rel.I2, "I2");
  check_subset(p, rel.J, "J");
  if (!is_admissible(p, rel)) throw ParameterError("relation instance is not admissible");
  FreeClass out = FreeClass::monomial(p, Monomial{rel.r, {}});
  for (int i : rel.I1) out = out * free_xi(p, i);
  for (int i : rel.I2) out = out * free_xi(p, i + p.g);
  for (int j : rel.J) out = out * (free_eta(p) - free_sigma_j(p, j));
  return out;
}

std::vector<RelationInstance> relation_instances(RingParams p, int degree) {
  std::vector<RelationInstance> out;
  std::vector<int> label(static_cast<std::size_t>(p.g), 0);  // 0 none, 1 I1, 2 I2, 3 J
  while (true) {
    RelationInstance rel;
    for (int i = 0; i < p.g; ++i) {
      switch (label[static_cast<std::size_t>(i)]) {
        case 1: rel.I1.push_back(i + 1); break;
        case 2: rel.I2.push_back(i + 1); break;
        case 3: rel.J.push_back(i + 1); break;
        default: break;
      }
    }
    const int rest = degree - static_cast<int>(rel.I1.size() + rel.I2.size()) -
                     2 * static_cast<int>(rel.J.size());
    if (rest >= 0 && rest % 2 == 0) {
      rel.r = rest / 2;
      if (is_admissible(p, rel)) out.push_back(std::move(rel));
    }
    int pos = 0;
    while (pos < p.g && label[static_cast<std::size_t>(pos)] == 3) label[static_cast<std::size_t>(pos++)] = 0;
    if (pos == p.g) break;
    ++label[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(RingParams p, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const int n = 2 * p.g;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Monomial m;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) m.xi.push_back(i + 1);
    }
    const int rest = degree - static_cast<int>(m.xi.size());
    if (rest < 0 || rest % 2 != 0) continue;
    m.eta_power = rest / 2;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> standard_monomials(RingParams p, int degree) {
  if (degree < 0 || degree > p.top_degree()) return {};
  return reducer_for(p)->block(degree).standard;
}

}  // namespace vortexmod::symring
