#include "vortexmod/errors.hpp"
#include "vortexmod/moduli_numerics.hpp"
#include "vortexmod/strata.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace vortexmod;

constexpr double pi = std::numbers::pi;

TEST_CASE("Riemann-Roch dimension") {
  CHECK(rr_dim(EmbeddingParams::make(1, 1, 2, 2, 1, 5)) == 2);
  CHECK(rr_dim(EmbeddingParams::make(2, 2, 3, 1, 2, 2)) == 5);
}

TEST_CASE("embedding parameters are validated") {
  CHECK_THROWS_AS(EmbeddingParams::make(1, 2, 2, 0, 1, 5), ParameterError);
  CHECK_THROWS_AS(EmbeddingParams::make(1, 1, -1, 0, 1, 5), ParameterError);
  CHECK_THROWS_AS(EmbeddingParams::make(1, 1, 2, 0, 0, 5), ParameterError);
  CHECK_THROWS_AS(EmbeddingParams::make(1, 1, 2, 0, 1, 0), ParameterError);
  // ell*delta must reach d/r + g - 1
  CHECK_THROWS_AS(EmbeddingParams::make(1, 1, 5, 2, 1, 5), ParameterError);
  CHECK_NOTHROW(EmbeddingParams::make(1, 1, 4, 2, 1, 5));
}

TEST_CASE("Grassmannian data") {
  const auto a = grassmann_params(EmbeddingParams::make(1, 1, 2, 2, 1, 5));
  CHECK(a.total_dim == 4);
  CHECK(a.subspace_dim == 2);
  CHECK(a.gr_dim == 4);
  CHECK(a.plucker_ambient_dim == 5);

  const auto b = grassmann_params(EmbeddingParams::make(2, 2, 3, 0, 1, 2));
  CHECK(b.total_dim == 6);
  CHECK(b.subspace_dim == 3);
  CHECK(b.gr_dim == 9);
  CHECK(b.plucker_ambient_dim == 19);
}

TEST_CASE("zero-dimensional subspace") {
  // r(ell delta - g + 1) = d
  const auto p = EmbeddingParams::make(2, 1, 3, 1, 1, 3);
  const auto gr = grassmann_params(p);
  CHECK(gr.subspace_dim == 0);
  CHECK(gr.gr_dim == 0);
  CHECK(gr.plucker_ambient_dim == 0);
}

TEST_CASE("Grassmannian dimension agrees with Riemann-Roch across the grid") {
  int checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 0; d <= 8; ++d) {
        for (int g = 0; g <= 3; ++g) {
          for (int ed = 1; ed <= 12; ++ed) {
            if (r * ed < d + r * (g - 1) || ed <= 2 * g - 2) continue;
            const auto p = EmbeddingParams::make(n, r, d, g, 1, ed);
            const auto gr = grassmann_params(p);
            CHECK(gr.subspace_dim == rr_dim(p));
            CHECK(gr.total_dim == n * (ed + 1 - g));
            CHECK(gr.gr_dim == gr.subspace_dim * (gr.total_dim - gr.subspace_dim));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("moduli dimension") {
  for (int g = 0; g <= 5; ++g) CHECK(moduli_dim(2, 2, 3, g) == 6);
  CHECK(moduli_dim(1, 1, 7, 3) == 7);
  CHECK(moduli_dim(3, 2, 5, 2) == 13);
  CHECK_THROWS_AS(moduli_dim(3, 2, 2, 2), DomainError);
}

TEST_CASE("local tangent dimension") {
  CHECK(tangent_dim_local(1, 4) == 4);
  CHECK(tangent_dim_local(3, 0) == 0);
  for (int g = 0; g <= 3; ++g) CHECK(tangent_dim_local(2, 3) == moduli_dim(2, 2, 3, g));
}

TEST_CASE("local moduli dimensions agree") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 8; ++d) {
      const long top = strata::stratum_dim(strata::Partition(static_cast<std::size_t>(d), 1), n);
      for (int g = 0; g <= 3; ++g) {
        CHECK(moduli_dim(n, n, d, g) == n * d);
        CHECK(tangent_dim_local(n, d) == n * d);
        CHECK(top == n * d);
      }
    }
  }
}

TEST_CASE("stability") {
  const auto a = stability_check(PhysicalParams::make(1.0, 1.0, 4 * pi * 3), 2);
  CHECK(a.stable);
  CHECK(a.critical_tau == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(a.margin == doctest::Approx(4 * pi).epsilon(1e-14));

  const double vol = 7.3;
  const double e2 = 0.6;
  const double crit = 4 * pi * 3 / (e2 * vol);
  CHECK_FALSE(stability_check(PhysicalParams::make(e2, crit, vol), 3).stable);
  CHECK(stability_check(PhysicalParams::make(e2, crit * (1 + 1e-9), vol), 3).stable);
  CHECK(stability_check(PhysicalParams::make(1.0, 0.01, 1.0), 0).stable);
  CHECK_FALSE(stability_check(PhysicalParams::make(1.0, 0.0, 1.0), 0).stable);
}

TEST_CASE("stability is monotone in tau and antitone in d") {
  const double e2 = 1.3;
  const double vol = 9.0;
  for (int d = 0; d <= 6; ++d) {
    bool was_stable = false;
    for (double tau = 0.05; tau < 10; tau += 0.05) {
      const bool s = stability_check(PhysicalParams::make(e2, tau, vol), d).stable;
      CHECK((!was_stable || s));
      was_stable = s;
      if (d > 0 && !stability_check(PhysicalParams::make(e2, tau, vol), d - 1).stable) CHECK_FALSE(s);
    }
  }
}

TEST_CASE("physical parameters are validated") {
  CHECK_THROWS_AS(PhysicalParams::make(0.0, 1.0, 1.0), ParameterError);
  CHECK_THROWS_AS(PhysicalParams::make(1.0, 1.0, -1.0), ParameterError);
  CHECK_THROWS_AS(PhysicalParams::make(1.0, std::nan(""), 1.0), ParameterError);
}
