#include "generators.hpp"

#include "vortexmod/class_io.hpp"
#include "vortexmod/errors.hpp"
#include "vortexmod/symring.hpp"
#include "vortexmod/tensor_oracle.hpp"

#include <doctest.h>

using namespace vortexmod;
using namespace vortexmod::symring;

namespace {

CohomologyClass eta_power(RingParams p, int k) { return power(eta(p), k); }

// Betti numbers from the generating function
//   sum_d P_d(x) t^d = (1 + x t)^{2g} / ((1 - t)(1 - x^2 t)),
// i.e. b_k = #{(a, c) : a + 2c = k, a + c <= d, a <= 2g} weighted by C(2g, a).
std::vector<long> betti_generating_function(int d, int g) {
  std::vector<long> b(static_cast<std::size_t>(2 * d + 1), 0);
  for (int a = 0; a <= std::min(2 * g, d); ++a) {
    for (int c = 0; a + c <= d; ++c) {
      b[static_cast<std::size_t>(a + 2 * c)] += static_cast<long>(binomial(2 * g, a));
    }
  }
  return b;
}

}  // namespace

TEST_CASE("ring parameters are validated") {
  CHECK_THROWS_AS(RingParams::make(0, 1), ParameterError);
  CHECK_THROWS_AS(RingParams::make(2, -1), ParameterError);
  CHECK_THROWS_AS(RingParams::make(2, RingParams::max_genus + 1), ParameterError);
  CHECK_THROWS_AS(xi(RingParams::make(2, 1), 3), ParameterError);
  CHECK_THROWS_AS(sigma_j(RingParams::make(2, 1), 2), ParameterError);
}

TEST_CASE("eta^{d-1} sigma = g eta^d") {
  const auto p = RingParams::make(3, 2);
  CHECK(multiply(eta_power(p, 2), sigma(p)) == Rational(2) * eta_power(p, 3));
}

TEST_CASE("eta^{d-1} sigma_j = eta^d") {
  const auto p = RingParams::make(2, 1);
  CHECK(normal_form(free_eta(p) * free_sigma_j(p, 1) - free_eta(p) * free_eta(p)).is_zero());
  for (int d = 1; d <= 5; ++d) {
    for (int g = 1; g <= 3; ++g) {
      const auto q = RingParams::make(d, g);
      for (int j = 1; j <= g; ++j) CHECK(multiply(eta_power(q, d - 1), sigma_j(q, j)) == eta_power(q, d));
    }
  }
}

TEST_CASE("eta^{d-2} sigma_i sigma_j = eta^{d-1}(sigma_i + sigma_j) - eta^d") {
  const auto p = RingParams::make(4, 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const auto lhs = multiply(multiply(eta_power(p, 2), sigma_j(p, i)), sigma_j(p, j));
      const auto rhs = eta_power(p, 3) * (sigma_j(p, i) + sigma_j(p, j)) - eta_power(p, 4);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("eta^{d-2} sigma^2 = g(g-1) eta^d") {
  const auto p = RingParams::make(3, 3);
  CHECK(multiply(eta(p), power(sigma(p), 2)) == Rational(6) * eta_power(p, 3));
  CHECK(integrate(power(sigma(RingParams::make(2, 2)), 2)) == 2);
}

TEST_CASE("eta^d is the fundamental class") {
  for (int d = 1; d <= 5; ++d) {
    const auto p = RingParams::make(d, 2);
    CHECK(integrate(eta_power(p, d)) == 1);
    CHECK(eta_power(p, d).terms().size() == 1);
  }
  const auto p = RingParams::make(2, 1);
  CHECK(integrate(eta(p)) == 0);
}

TEST_CASE("integrals of eta^{d-k} sigma^k match the tensor model") {
  for (int d = 1; d <= 4; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      if (d == 4 && g == 3) continue;
      for (int k = 0; k <= d; ++k) {
        const auto cls = multiply(eta_power(p, d - k), power(sigma(p), k));
        const Rational expected = oracle::oracle_integrate(oracle::pullback(cls.lift()));
        CHECK(integrate(cls) == expected);
        CHECK(expected == Rational(factorial(k) * binomial(g, k)));
      }
    }
  }
}

TEST_CASE("Poincare dual of Sigma0") {
  const auto p = RingParams::make(3, 2);
  CHECK(integrate(multiply(eta(p), pd_sigma0(p))) == 3);
  CHECK(integrate(multiply(sigma(p), pd_sigma0(p))) == 18);

  const auto q = RingParams::make(2, 0);
  CHECK(pd_sigma0(q) == Rational(2) * eta(q) - Rational(2) * sigma(q));
  CHECK_THROWS_AS(pd_sigma0(RingParams::make(1, 1)), DomainError);
}

TEST_CASE("pairings with Sigma0 and Sigma1") {
  CHECK(pairing(eta(RingParams::make(4, 1)), Curve::Sigma1) == 3);
  CHECK(pairing(sigma(RingParams::make(2, 3)), Curve::Sigma0) == 12);
  for (int d = 2; d <= 5; ++d) {
    for (int g = 1; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      for (auto [curve, j] : {std::pair{Curve::Sigma0, 0}, std::pair{Curve::Sigma1, 1}}) {
        CHECK(pairing(eta(p), curve) == d - j);
        CHECK(pairing(sigma(p), curve) == (d - j) * (d - j) * g);
        CHECK(pairing(eta(p), curve) == pairing_via_pullback(eta(p), curve));
        CHECK(pairing(sigma(p), curve) == pairing_via_pullback(sigma(p), curve));
      }
    }
  }
}

TEST_CASE("Betti numbers agree with the generating function") {
  for (int d = 1; d <= 5; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      const auto expected = betti_generating_function(d, g);
      for (int k = 0; k <= 2 * d; ++k) {
        CAPTURE(d);
        CAPTURE(g);
        CAPTURE(k);
        CHECK(static_cast<long>(standard_monomials(p, k).size()) == expected[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("relation instances reduce to zero") {
  for (int d = 1; d <= 4; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      for (int deg = 0; deg <= 2 * d; ++deg) {
        for (const auto& rel : relation_instances(p, deg)) CHECK(normal_form(relation_lhs(p, rel)).is_zero());
      }
    }
  }
  const auto p = RingParams::make(3, 2);
  CHECK_FALSE(is_admissible(p, RelationInstance{1, {}, {}, {1}}));
  CHECK_THROWS_AS(relation_lhs(p, RelationInstance{0, {1}, {1}, {1}}), ParameterError);
}

TEST_CASE("relation instances vanish in the tensor model") {
  for (int d = 1; d <= 3; ++d) {
    for (int g = 0; g <= 2; ++g) {
      const auto p = RingParams::make(d, g);
      for (int deg = 0; deg <= 2 * d; ++deg) {
        for (const auto& rel : relation_instances(p, deg)) CHECK(oracle::pullback(relation_lhs(p, rel)).is_zero());
      }
    }
  }
}

TEST_CASE("normal form properties on seeded random classes") {
  testgen::Engine rng(4101);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = RingParams::make(testgen::uniform(rng, 1, 4), testgen::uniform(rng, 0, 3));
    const auto a = testgen::free_class(rng, p);
    const auto b = testgen::free_class(rng, p);
    const auto c = testgen::free_class(rng, p);
    const auto na = normal_form(a);
    CHECK(normal_form(na) == na);
    CHECK(normal_form(na.lift()) == na);
    CHECK(normal_form(a * b) == na * normal_form(b));
    CHECK((na * normal_form(b)) * normal_form(c) == na * (normal_form(b) * normal_form(c)));
    CHECK(na * (normal_form(b) + normal_form(c)) == na * normal_form(b) + na * normal_form(c));
    CHECK(normal_form(a + b) == na + normal_form(b));
  }
}

TEST_CASE("graded commutativity") {
  const auto p = RingParams::make(3, 2);
  CHECK(xi(p, 1) * xi(p, 3) == -(xi(p, 3) * xi(p, 1)));
  CHECK((xi(p, 2) * xi(p, 2)).is_zero());
  CHECK(eta(p) * xi(p, 4) == xi(p, 4) * eta(p));
  CHECK(sigma_j(p, 1) * sigma_j(p, 2) == sigma_j(p, 2) * sigma_j(p, 1));
  CHECK((sigma_j(p, 1) * sigma_j(p, 1)).is_zero());
}

TEST_CASE("top degree is one-dimensional and higher degrees vanish") {
  for (int d = 1; d <= 4; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      const auto top = standard_monomials(p, 2 * d);
      REQUIRE(top.size() == 1);
      CHECK(top.front() == Monomial{d, {}});
      CHECK(power(eta(p), d + 1).is_zero());
    }
  }
}

TEST_CASE("text form") {
  const auto p = RingParams::make(3, 2);
  CHECK(to_string(CohomologyClass::zero(p)) == "0");
  CHECK(to_string(parse_class(p, "xi[3,1]")) == "-xi[1,3]");
  CHECK(to_string(parse_class(p, "sigma[1]")) == "xi[1,3]");
  CHECK(to_string(parse_class(p, "2*eta^3 - 1/2*eta*xi[1,3]")) == "2*eta^3 - 1/2*eta*xi[1,3]");
  CHECK(parse_class(p, "sigma") == free_sigma(p));
  CHECK(parse_class(p, "-3/4") == Rational(-3, 4) * FreeClass::monomial(p, Monomial{}));
  CHECK(to_string(normal_form(parse_class(p, "eta^2*sigma"))) == "2*eta^3");

  CHECK_THROWS_AS(parse_class(p, "eta^"), ParseError);
  CHECK_THROWS_AS(parse_class(p, "xi[5]"), ParameterError);
  CHECK_THROWS_AS(parse_class(p, "1/0"), ParseError);
  CHECK_THROWS_AS(parse_class(p, "eta +"), ParseError);
  CHECK_THROWS_AS(parse_class(p, "zeta"), ParseError);
}

TEST_CASE("text round trip on seeded random classes") {
  testgen::Engine rng(9090);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = RingParams::make(testgen::uniform(rng, 1, 5), testgen::uniform(rng, 0, 3));
    const auto a = testgen::free_class(rng, p, 4);
    CHECK(parse_class(p, to_string(a)) == a);
    const auto na = normal_form(a);
    CHECK(normal_form(parse_class(p, to_string(na))) == na);
  }
}
