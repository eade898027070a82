#include "vortexmod/acceptance.hpp"

#include "vortexmod/genus0.hpp"
#include "vortexmod/kahler_class.hpp"
#include "vortexmod/moduli_numerics.hpp"
#include "vortexmod/strata.hpp"
#include "vortexmod/symring.hpp"
#include "vortexmod/taubes_solver.hpp"
#include "vortexmod/tensor_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace vortexmod::acceptance {

namespace {

using namespace symring;
using std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail << "first failure: " << what << "; ";
    }
  }
};

void pairings(Outcome& out) {
  for (int d = 2; d <= 5; ++d) {
    for (int g = 1; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      const auto e = eta(p);
      const auto s = sigma(p);
      const std::string at = "d=" + std::to_string(d) + " g=" + std::to_string(g);
      out.check(pairing(e, Curve::Sigma0) == d, "<eta,S0> " + at);
      out.check(pairing(e, Curve::Sigma1) == d - 1, "<eta,S1> " + at);
      out.check(pairing(s, Curve::Sigma0) == d * d * g, "<sigma,S0> " + at);
      out.check(pairing(s, Curve::Sigma1) == (d - 1) * (d - 1) * g, "<sigma,S1> " + at);
      out.check(integrate(e * pd_sigma0(p)) == pairing_via_pullback(e, Curve::Sigma0), "PD route eta " + at);
      out.check(integrate(s * pd_sigma0(p)) == pairing_via_pullback(s, Curve::Sigma0), "PD route sigma " + at);
    }
  }
}

void ring_identities(Outcome& out) {
  for (int d = 1; d <= 5; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      const std::string at = " d=" + std::to_string(d) + " g=" + std::to_string(g);
      const auto e = eta(p);
      const auto top = power(e, d);
      out.check(power(e, d - 1) * sigma(p) == Rational(g) * top, "eta^{d-1} sigma = g eta^d" + at);
      for (int j = 1; j <= g; ++j) out.check(power(e, d - 1) * sigma_j(p, j) == top, "eta^{d-1} sigma_j = eta^d" + at);
      if (d < 2) continue;
      out.check(power(e, d - 2) * power(sigma(p), 2) == Rational(g * (g - 1)) * top, "eta^{d-2} sigma^2" + at);
      for (int i = 1; i <= g; ++i) {
        for (int j = 1; j <= g; ++j) {
          if (i == j) continue;
          const auto lhs = power(e, d - 2) * sigma_j(p, i) * sigma_j(p, j);
          const auto rhs = power(e, d - 1) * (sigma_j(p, i) + sigma_j(p, j)) - top;
          out.check(lhs == rhs, "eta^{d-2} sigma_i sigma_j" + at);
        }
      }
    }
  }
  std::mt19937_64 rng(20240611);
  for (int n = 0; n < 200; ++n) {
    const int d = std::uniform_int_distribution<int>(1, 5)(rng);
    const int g = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto p = RingParams::make(d, g);
    RelationInstance rel;
    for (int i = 1; i <= g; ++i) {
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 1: rel.I1.push_back(i); break;
        case 2: rel.I2.push_back(i); break;
        case 3: rel.J.push_back(i); break;
        default: break;
      }
    }
    const int bound = d - static_cast<int>(rel.I1.size() + rel.I2.size() + 2 * rel.J.size()) + 1;
    rel.r = std::max(0, bound) + std::uniform_int_distribution<int>(0, 1)(rng);
    out.check(normal_form(relation_lhs(p, rel)).is_zero(), "random relation instance " + std::to_string(n));
  }
}

void oracle_equivalence(Outcome& out) {
  for (int d = 1; d <= 4; ++d) {
    for (int g = 0; g <= 3; ++g) {
      const auto p = RingParams::make(d, g);
      for (int k = 0; k <= 2 * d; ++k) {
        for (const auto& m : monomials_of_degree(p, k)) {
          const auto f = FreeClass::monomial(p, m);
          out.check(integrate(normal_form(f)) == oracle::oracle_integrate(oracle::pullback(f)),
                    "monomial integral d=" + std::to_string(d) + " g=" + std::to_string(g));
        }
      }
    }
  }
  // seeded products at d = 4, g = 3, integrated after multiplying on both sides
  const auto p = RingParams::make(4, 3);
  std::vector<Monomial> all;
  for (int k = 0; k <= 8; ++k) {
    for (auto& m : monomials_of_degree(p, k)) all.push_back(m);
  }
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int n = 0; n < 500; ++n) {
    const auto a = FreeClass::monomial(p, all[pick(rng)]);
    const auto b = FreeClass::monomial(p, all[pick(rng)]);
    const Rational ring = integrate(normal_form(a) * normal_form(b));
    const Rational tensor = oracle::oracle_integrate(oracle::oracle_multiply(oracle::pullback(a), oracle::pullback(b)));
    out.check(ring == tensor, "sampled product " + std::to_string(n));
  }
}

void fs_coefficient_grid(Outcome& out) {
  for (int d = 2; d <= 6; ++d) {
    for (int g = 1; g <= 3; ++g) {
      for (int ld = d + g - 1; ld <= 12; ++ld) {
        const auto c = fs_coefficients(d, g, curve_degrees(d, g, ld));
        out.check(c.c_eta == ld - d - g + 1 && c.c_sigma == 1,
                  "fs coefficients d=" + std::to_string(d) + " g=" + std::to_string(g) + " elldelta=" + std::to_string(ld));
      }
    }
  }
}

void genus_zero_degrees(Outcome& out) {
  for (int d = 1; d <= 4; ++d) {
    for (int delta = d + 1; delta <= d + 4; ++delta) {
      // (d - j)(delta + (d - j - 1)(g - 1) - j) at g = 0
      const long want0 = static_cast<long>(d) * (delta - (d - 1));
      const long want1 = static_cast<long>(d - 1) * (delta - (d - 2) - 1);
      if (d >= 2) {
        const auto formula = curve_degrees(d, 0, delta);
        out.check(formula.d0 == want0 && formula.d1 == want1, "closed-form degrees");
      }
      const std::string at = " d=" + std::to_string(d) + " delta=" + std::to_string(delta);
      out.check(genus0::curve_degree(genus0::Family::D0, d, delta) == want0, "d0" + at);
      out.check(genus0::curve_degree(genus0::Family::D1, d, delta) == want1, "d1" + at);
    }
  }
}

void reconstruction(Outcome& out) {
  using namespace genus0;
  std::mt19937_64 rng(777);
  for (int n = 0; n < 100; ++n) {
    const int d = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    do {
      for (auto& x : c) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); }));
    const auto pair = BinaryFormPair::line({BinaryForm(d, c)});
    const auto back = reconstruct(embed_pair(pair, d + 2));
    out.check(same_up_to_scalar(pair, back), "round trip " + std::to_string(n));
  }
  // divisors supported on {infinity, 0, 1, -1, 2, 1/2}
  const std::vector<BinaryForm> points{BinaryForm(1, {0, 1}), BinaryForm(1, {1, 0}), BinaryForm(1, {1, -1}),
                                       BinaryForm(1, {1, 1}), BinaryForm(1, {1, -2}), BinaryForm(1, {1, Rational(-1, 2)})};
  for (int d = 1; d <= 4; ++d) {
    std::set<std::vector<Rational>> seen;
    std::size_t divisors = 0;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      BinaryForm s(0, {Rational(1)});
      for (int i : idx) s = s * points[static_cast<std::size_t>(i)];
      seen.insert(plucker(embed_pair(BinaryFormPair::line({s}), d + 2)));
      ++divisors;
      // next weakly increasing index tuple
      int k = d - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == 5) --k;
      if (k < 0) break;
      ++idx[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(k)];
    }
    out.check(seen.size() == divisors, "distinct Plucker points for d=" + std::to_string(d));
  }
}

void dimensions(Outcome& out) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 8; ++d) {
      for (int g = 0; g <= 3; ++g) {
        const long nd = static_cast<long>(n) * d;
        const strata::Partition ones(static_cast<std::size_t>(d), 1);
        out.check(moduli_dim(n, n, d, g) == nd && strata::stratum_dim(ones, n) == nd && tangent_dim_local(n, d) == nd,
                  "local dimensions n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 0; d <= 8; ++d) {
        for (int g = 0; g <= 3; ++g) {
          for (int ell = 1; ell <= 3; ++ell) {
            for (int delta = 1; delta <= 6; ++delta) {
              EmbeddingParams p;
              try {
                p = EmbeddingParams::make(n, r, d, g, ell, delta);
              } catch (const std::invalid_argument&) {
                continue;
              }
              if (p.elldelta() <= 2L * g - 2) continue;
              out.check(grassmann_params(p).subspace_dim == rr_dim(p), "subspace_dim = rr_dim");
            }
          }
        }
      }
    }
  }
}

void quantization_checks(Outcome& out) {
  for (int d = 2; d <= 5; ++d) {
    for (int g = 1; g <= 3; ++g) {
      for (const auto& [e2, vol] : {std::pair{1.0, 4 * pi}, std::pair{0.5, 7.3}, std::pair{2.0, 1.9}}) {
        const std::string at = " d=" + std::to_string(d) + " g=" + std::to_string(g);
        const auto crit = PhysicalParams::make(e2, 4 * pi * d / (e2 * vol), vol);
        const auto q0 = quantization(crit);
        out.check(q0.is_integer && std::abs(q0.q - d) <= 1e-9, "q = d at critical tau" + at);
        const auto r0 = representability(crit, d, g);
        out.check(r0.consistent && r0.elldelta_theorem == d + g - 1, "consistent at q = d" + at);
        const auto above = PhysicalParams::make(e2, 4 * pi * (d + 1) / (e2 * vol), vol);
        const auto q1 = quantization(above);
        out.check(q1.is_integer && std::abs(q1.q - (d + 1)) <= 1e-9, "q = d + 1" + at);
        const auto r1 = representability(above, d, g);
        out.check(!r1.consistent && r1.elldelta_theorem == d + g && r1.elldelta_ratio == Rational(d + g + 1),
                  "discrepancy flagged at q = d + 1" + at);
        const auto off = PhysicalParams::make(e2, 4 * pi * (d + 0.3) / (e2 * vol), vol);
        const auto r2 = representability(off, d, g);
        out.check(!r2.elldelta_theorem && !r2.consistent, "non-integral q" + at);
      }
    }
  }
}

taubes::VortexProblem square_problem(int d, double vol, int grid) {
  const double L = std::sqrt(vol);
  taubes::VortexProblem prob;
  prob.torus = taubes::TorusSpec::make(L, L, grid, grid);
  prob.e2 = 1.0;
  prob.tau = 1.0;
  prob.tol = 1e-10;
  if (d == 1) {
    prob.zeros = {{0.5 * L, 0.5 * L, 1}};
  } else {
    prob.zeros = {{0.25 * L, 0.25 * L, 1}, {0.75 * L, 0.5 * L, 1}};
  }
  return prob;
}

void pde_identity(Outcome& out) {
  for (int d : {1, 2}) {
    const auto prob = square_problem(d, 4 * pi * (d + 1), 256);
    const auto state = taubes::solve(prob);
    const double err = std::abs(state.higgs_l2 - (prob.torus.vol() - 4 * pi * d)) / prob.torus.vol();
    out.detail << "d=" << d << ": rel err " << err << ", flux " << state.flux << "; ";
    out.check(state.residual_norm <= prob.tol, "residual d=" + std::to_string(d));
    out.check(err <= 1e-6, "integral identity d=" + std::to_string(d));
    out.check(std::abs(state.flux - d) <= 1e-6, "flux d=" + std::to_string(d));
  }
}

void dissolving_limit(Outcome& out) {
  const auto tmpl = square_problem(1, 4 * pi * 2, 256);
  const std::vector<double> vols{4 * pi * 1.05, 4 * pi * 1.5, 4 * pi * 2};
  const auto rows = taubes::bradlow_sweep(tmpl, vols);
  double last_sup = 0.0;
  for (const auto& row : rows) {
    const double want = row.vol - 4 * pi;
    const double err = std::abs(row.higgs_l2 - want) / want;
    out.detail << "vol/4pi=" << row.vol / (4 * pi) << ": sup " << row.sup_phi2 << "; ";
    out.check(err <= 1e-5, "higgs_l2 at vol " + std::to_string(row.vol));
    out.check(row.sup_phi2 > last_sup, "sup_phi2 increasing");
    last_sup = row.sup_phi2;
  }
}

struct Spec {
  const char* name;
  double time_limit;
  std::function<void(Outcome&)> body;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all{
      {"pairing table", 10, pairings},
      {"ring identities and random relation instances", 30, ring_identities},
      {"oracle equivalence", 120, oracle_equivalence},
      {"Fubini-Study coefficients", 1, fs_coefficient_grid},
      {"genus-zero curve degrees", 60, genus_zero_degrees},
      {"reconstruction and injectivity", 30, reconstruction},
      {"dimensions", 1, dimensions},
      {"quantization and representability", 1, quantization_checks},
      {"PDE integral identity", 240, pde_identity},
      {"dissolving limit", 300, dissolving_limit},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count) throw std::out_of_range("criterion id out of range");
  const auto& spec = specs()[static_cast<std::size_t>(id - 1)];
  CriterionResult result{id, spec.name, false, "", 0.0, spec.time_limit};
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.pass = out.pass && result.seconds <= spec.time_limit;
  if (result.seconds > spec.time_limit) out.detail << "over time limit; ";
  result.detail = out.detail.str() + std::to_string(out.checks) + " checks";
  return result;
}

std::vector<CriterionResult> run_acceptance(bool fast) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) {
    if (fast && id >= 9) continue;
    out.push_back(run_criterion(id));
  }
  return out;
}

std::string format(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + ": " + r.detail +
         " (" + time + " s)";
}

}  // namespace vortexmod::acceptance
