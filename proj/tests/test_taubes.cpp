#include "vortexmod/errors.hpp"
#include "vortexmod/taubes_solver.hpp"
#include "vortexmod/vortex_config.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace vortexmod;
using namespace vortexmod::taubes;

namespace {

constexpr double pi = std::numbers::pi;

VortexProblem square(double vol, int n, std::vector<VortexZero> zeros) {
  VortexProblem p;
  const double side = std::sqrt(vol);
  p.torus = TorusSpec::make(side, side, n, n);
  p.zeros = std::move(zeros);
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("torus validation") {
  CHECK_THROWS_AS(TorusSpec::make(1.0, 1.0, 16, 64), ParameterError);
  CHECK_THROWS_AS(TorusSpec::make(-1.0, 1.0, 64, 64), ParameterError);
  const auto t = TorusSpec::make(2.0, 3.0, 32, 64);
  CHECK(t.vol() == 6.0);
  CHECK(t.size() == 32 * 64);
  CHECK(t.index(1, 2) == 66);
}

TEST_CASE("vacuum") {
  const auto s = solve(square(10.0, 32, {}));
  CHECK(s.degree == 0);
  CHECK(s.u.cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.flux == doctest::Approx(0.0).scale(1.0));
  CHECK(s.sup_phi2 == 1.0);
  CHECK(s.higgs_l2 == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("one vortex: integral identity and flux") {
  const auto prob = square(8 * pi, 64, {{1.0, 2.0, 1}});
  const auto s = solve(prob);
  CHECK(s.residual_norm <= prob.tol);
  CHECK(rel(s.higgs_l2, 4 * pi) < 1e-6);
  CHECK(rel(s.higgs_l2, expected_higgs_l2(prob)) < 1e-10);
  CHECK(std::abs(s.flux - 1.0) < 1e-6);
  CHECK(s.sup_phi2 < prob.tau);
  CHECK(s.max_u < 0.0);
}

TEST_CASE("double zero and two simple zeros carry the same integrals") {
  const double vol = 4 * pi * 3;
  const auto two = solve(square(vol, 64, {{1.0, 1.0, 1}, {3.0, 4.0, 1}}));
  const auto dbl = solve(square(vol, 64, {{2.0, 2.0, 2}}));
  CHECK(std::abs(two.flux - 2.0) < 1e-6);
  CHECK(std::abs(dbl.flux - 2.0) < 1e-6);
  CHECK(rel(two.higgs_l2, dbl.higgs_l2) < 1e-8);
  CHECK(dbl.sup_phi2 != doctest::Approx(two.sup_phi2));
}

TEST_CASE("unstable problems are refused") {
  auto prob = square(4 * pi, 32, {{1.0, 1.0, 1}});
  try {
    solve(prob);
    FAIL("expected a stability error");
  } catch (const StabilityError& e) {
    CHECK(e.critical_tau() == doctest::Approx(1.0));
  }
  prob.tau = 0.5;
  CHECK_THROWS_AS(solve(prob), StabilityError);
  prob.tau = 2.0;
  prob.zeros.front().multiplicity = 0;
  CHECK_THROWS_AS(solve(prob), ParameterError);
}

TEST_CASE("iteration budget") {
  auto prob = square(8 * pi, 64, {{1.0, 1.0, 1}});
  prob.max_iter = 1;
  prob.tol = 1e-14;
  CHECK_THROWS_AS(solve(prob), ConvergenceError);
}

TEST_CASE("translating by grid steps leaves the scalars unchanged") {
  auto prob = square(8 * pi, 64, {{1.0, 1.5, 1}, {3.0, 2.0, 1}});
  prob.tau = 1.2;
  auto moved = prob;
  for (auto& z : moved.zeros) {
    z.x += 5 * prob.torus.h1();
    z.y += 11 * prob.torus.h2();
  }
  const auto a = solve(prob);
  const auto b = solve(moved);
  CHECK(std::abs(a.flux - b.flux) < 1e-10);
  CHECK(std::abs(a.higgs_l2 - b.higgs_l2) < 1e-10);
  CHECK(std::abs(a.sup_phi2 - b.sup_phi2) < 1e-10);
}

TEST_CASE("grid refinement") {
  std::vector<double> sup;
  for (int n : {64, 128, 256}) sup.push_back(solve(square(8 * pi, n, {{1.0, 2.0, 1}})).sup_phi2);
  const double coarse = std::abs(sup[1] - sup[0]);
  const double fine = std::abs(sup[2] - sup[1]);
  CHECK(fine * 2 <= coarse);
}

TEST_CASE("Bradlow sweep") {
  auto tmpl = square(8 * pi, 64, {{1.0, 2.0, 1}});
  const std::vector<double> vols{4 * pi * 1.05, 4 * pi * 1.5, 4 * pi * 2, 4 * pi * 3};
  const auto rows = bradlow_sweep(tmpl, vols);
  REQUIRE(rows.size() == vols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].vol == doctest::Approx(vols[i]));
    CHECK(rel(rows[i].higgs_l2, vols[i] - 4 * pi) < 1e-6);
    if (i > 0) CHECK(rows[i].sup_phi2 > rows[i - 1].sup_phi2);
  }
  // margin 4 pi at vol 8 pi, 8 pi at vol 12 pi
  CHECK(rows[3].higgs_l2 == doctest::Approx(2 * rows[2].higgs_l2).epsilon(1e-8));
  CHECK(rows[0].higgs_l2 < 0.06 * rows[2].higgs_l2);
  CHECK_THROWS_AS(bradlow_sweep(tmpl, std::vector<double>{2 * pi}), StabilityError);
}

TEST_CASE("config files") {
  const auto prob = parse_vortex_config(
      "# comment\n"
      "periods = 6 7\n"
      "grid = 64 32\n"
      "zero = 1 2\n"
      "zero = 3 4 2   # double zero\n"
      "e2 = 0.5\n"
      "tau = 3\n"
      "reg_width = 0.4\n"
      "max_iter = 20\n");
  CHECK(prob.torus.L1 == 6.0);
  CHECK(prob.torus.N2 == 32);
  CHECK(prob.degree() == 3);
  CHECK(prob.zeros[1].multiplicity == 2);
  CHECK(prob.e2 == 0.5);
  CHECK(prob.width() == 0.4);
  CHECK(prob.max_iter == 20);
  CHECK(prob.tol == 1e-10);

  CHECK_THROWS_AS(parse_vortex_config("grid = 64 64\n"), ParseError);
  CHECK_THROWS_AS(parse_vortex_config("periods = 1 1\ngrid = 64 64\ne2 = 1\ne2 = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_vortex_config("periods = 1 1\ngrid = 64 64\ncolour = red\n"), ParseError);
  CHECK_THROWS_AS(parse_vortex_config("periods = 1\ngrid = 64 64\n"), ParseError);
  CHECK_THROWS_AS(parse_vortex_config("periods = 1 1\ngrid = 64 64\nzero = 1 1 1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_vortex_config("periods 1 1\n"), ParseError);
}

TEST_CASE("config directory lookup") {
  CHECK_THROWS_AS(load_vortex_config("no_such_problem.cfg"), ParameterError);
  ::setenv("VORTEXMOD_CONFIG_DIR", VORTEXMOD_TEST_DATA, 1);
  const auto prob = load_vortex_config("torus_d2.cfg");
  CHECK(prob.degree() == 2);
  CHECK(prob.torus.N1 == 64);
  ::unsetenv("VORTEXMOD_CONFIG_DIR");
}
