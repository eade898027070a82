#include "vortexmod/errors.hpp"
#include "vortexmod/kahler_class.hpp"
#include "vortexmod/symring.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vortexmod;

constexpr double pi = std::numbers::pi;

TEST_CASE("L2 class") {
  const double vol = 5.0;
  const double e2 = 0.8;
  const int d = 3;
  const double crit = 4 * pi * d / (e2 * vol);
  const auto at_crit = l2_class(PhysicalParams::make(e2, crit, vol), d);
  CHECK(at_crit.c_eta == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
  CHECK(at_crit.c_sigma == doctest::Approx(2 * pi * pi / e2));

  // e2 = 2 pi^2 and pi tau vol = 4 pi^2 d / e2 + 1
  const double e2b = 2 * pi * pi;
  const double taub = (4 * pi * pi * 2 / e2b + 1) / (pi * vol);
  const auto unit = l2_class(PhysicalParams::make(e2b, taub, vol), 2);
  CHECK(unit.c_eta == doctest::Approx(1.0));
  CHECK(unit.c_sigma == doctest::Approx(1.0));

  const auto empty = l2_class(PhysicalParams::make(e2, 0.0, vol), 0);
  CHECK(empty.c_eta == 0.0);
  CHECK(empty.c_sigma == doctest::Approx(2 * pi * pi / e2));
}

TEST_CASE("c_eta changes sign at the critical tau") {
  const double vol = 3.0;
  const double e2 = 1.7;
  for (int d = 1; d <= 4; ++d) {
    const double crit = 4 * pi * d / (e2 * vol);
    CHECK(l2_class(PhysicalParams::make(e2, crit * 0.99, vol), d).c_eta < 0);
    CHECK(l2_class(PhysicalParams::make(e2, crit * 1.01, vol), d).c_eta > 0);
  }
}

TEST_CASE("curve degrees") {
  const auto a = curve_degrees(2, 2, 5);
  CHECK(a.d0 == 12);
  CHECK(a.d1 == 4);
  for (int d = 2; d <= 6; ++d) {
    for (long ed = 1; ed <= 10; ++ed) {
      const auto g1 = curve_degrees(d, 1, ed);
      CHECK(g1.d0 == d * ed);
      CHECK(g1.d1 == (d - 1) * (ed - 1));
    }
  }
  CHECK(curve_degrees(2, 0, 2).d0 == 2);
  CHECK_THROWS_AS(curve_degrees(1, 1, 3), DomainError);
  CHECK_THROWS_AS(curve_degrees(4, 0, 1), DomainError);
}

TEST_CASE("pairing matrix matches the pullback route") {
  for (int d = 2; d <= 5; ++d) {
    for (int g = 1; g <= 3; ++g) {
      const auto m = pairing_matrix(d, g);
      const auto p = symring::RingParams::make(d, g);
      using symring::Curve;
      CHECK(m(0, 0) == symring::pairing_via_pullback(symring::eta(p), Curve::Sigma0));
      CHECK(m(0, 1) == symring::pairing_via_pullback(symring::sigma(p), Curve::Sigma0));
      CHECK(m(1, 0) == symring::pairing_via_pullback(symring::eta(p), Curve::Sigma1));
      CHECK(m(1, 1) == symring::pairing_via_pullback(symring::sigma(p), Curve::Sigma1));
    }
  }
}

TEST_CASE("Fubini-Study coefficients") {
  const auto c = fs_coefficients(2, 2, curve_degrees(2, 2, 5));
  CHECK(c.c_eta == 2);
  CHECK(c.c_sigma == 1);

  for (int d = 2; d <= 6; ++d) {
    for (int g = 1; g <= 3; ++g) {
      for (long ed = d + g - 1; ed <= 12; ++ed) {
        const auto degrees = curve_degrees(d, g, ed);
        const auto k = fs_coefficients(d, g, degrees);
        CHECK(k.c_eta == Rational(ed - d - g + 1));
        CHECK(k.c_sigma == 1);
        // closed forms of the 2x2 solve
        const Rational dd(d);
        CHECK(k.c_eta == (dd * dd * degrees.d1 - (dd - 1) * (dd - 1) * degrees.d0) / (dd * (dd - 1)));
        CHECK(k.c_sigma == ((dd - 1) * degrees.d0 - dd * degrees.d1) / (dd * (dd - 1) * g));
      }
    }
  }
}

TEST_CASE("degenerate degrees give c_sigma = 0") {
  // (d-1) d0 = d d1
  const auto k = fs_coefficients(3, 2, CurveDegrees{6, 4});
  CHECK(k.c_sigma == 0);
  CHECK(k.c_eta == 2);
  CHECK_THROWS_AS(fs_coefficients(3, 0, CurveDegrees{6, 4}), ParameterError);
}

TEST_CASE("quantization") {
  const double vol = 6.5;
  const double e2 = 1.4;
  for (int d = 0; d <= 5; ++d) {
    const auto crit = quantization(PhysicalParams::make(e2, 4 * pi * d / (e2 * vol), vol));
    CHECK(crit.q == doctest::Approx(d));
    CHECK(crit.is_integer);
    const auto next = quantization(PhysicalParams::make(e2, 4 * pi * (d + 1) / (e2 * vol), vol));
    CHECK(next.q == doctest::Approx(d + 1));
    CHECK(next.is_integer);
  }
  CHECK_FALSE(quantization(PhysicalParams::make(e2, 4 * pi * 2.5 / (e2 * vol), vol)).is_integer);
  CHECK(quantization(PhysicalParams::make(e2, 0.0, vol)).q == 0.0);
}

TEST_CASE("representability reports both candidate values") {
  const double vol = 4.0;
  const double e2 = 1.0;
  for (int d = 2; d <= 4; ++d) {
    for (int g = 1; g <= 3; ++g) {
      const auto at_d = representability(PhysicalParams::make(e2, 4 * pi * d / (e2 * vol), vol), d, g);
      REQUIRE(at_d.elldelta_theorem.has_value());
      CHECK(*at_d.elldelta_theorem == d + g - 1);
      REQUIRE(at_d.elldelta_ratio.has_value());
      CHECK(*at_d.elldelta_ratio == d + g - 1);
      CHECK(at_d.consistent);

      const auto above = representability(PhysicalParams::make(e2, 4 * pi * (d + 1) / (e2 * vol), vol), d, g);
      CHECK(*above.elldelta_theorem == d + g);
      CHECK(*above.elldelta_ratio == d + g + 1);
      CHECK_FALSE(above.consistent);

      const auto half = representability(PhysicalParams::make(e2, 4 * pi * (d + 0.5) / (e2 * vol), vol), d, g);
      CHECK_FALSE(half.elldelta_theorem.has_value());
      CHECK(*half.elldelta_ratio == d + g);
      CHECK_FALSE(half.consistent);
    }
  }
}

TEST_CASE("the ratio value reproduces the L2 proportion") {
  const double vol = 4.0;
  const double e2 = 1.0;
  const int d = 3;
  const int g = 2;
  const double tau = 4 * pi * 4.25 / (e2 * vol);
  const auto phys = PhysicalParams::make(e2, tau, vol);
  const auto rep = representability(phys, d, g);
  const auto l2 = l2_class(phys, d);
  // C_eta / C_sigma = elldelta - d - g + 1 with C_sigma = 1
  CHECK(rep.elldelta_ratio_value - d - g + 1 == doctest::Approx(l2.c_eta / l2.c_sigma));
}

TEST_CASE("symplectic volume") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(symplectic_volume(KahlerClass2<Rational>{1, 0}, d, 2) == Rational(1) / Rational(factorial(d)));
  }
  CHECK(symplectic_volume(KahlerClass2<Rational>{0, 1}, 2, 2) == 1);
  CHECK(symplectic_volume(KahlerClass2<Rational>{1, 1}, 2, 1) == Rational(3, 2));

  for (int d = 1; d <= 4; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const KahlerClass2<Rational> c{Rational(3, 2), Rational(-2, 5)};
      const KahlerClass2<Rational> c2{Rational(3), Rational(-4, 5)};
      Rational scale(1);
      for (int k = 0; k < d; ++k) scale *= 2;
      CHECK(symplectic_volume(c2, d, g) == scale * symplectic_volume(c, d, g));
      const KahlerClass2<double> cf{1.5, -0.4};
      CHECK(symplectic_volume(cf, d, g) == doctest::Approx(to_double(symplectic_volume(c, d, g))));
    }
  }
}

TEST_CASE("eta-sigma integrals") {
  const auto v = eta_sigma_integrals(4, 3);
  REQUIRE(v.size() == 5);
  CHECK(v[0] == 1);
  CHECK(v[1] == 3);
  CHECK(v[2] == 6);
  CHECK(v[3] == 6);
  CHECK(v[4] == 0);
}
