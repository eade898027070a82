// Command-line front end. Every subcommand prints one JSON document on stdout (or
// "key: value" lines with --text). Exit codes: 0 ok, 1 verify failure, 2 invalid input,
// 3 solver did not converge.

#include "vortexmod/acceptance.hpp"
#include "vortexmod/class_io.hpp"
#include "vortexmod/errors.hpp"
#include "vortexmod/genus0.hpp"
#include "vortexmod/kahler_class.hpp"
#include "vortexmod/moduli_numerics.hpp"
#include "vortexmod/strata.hpp"
#include "vortexmod/symring.hpp"
#include "vortexmod/taubes_solver.hpp"
#include "vortexmod/tensor_oracle.hpp"
#include "vortexmod/vortex_config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;
using namespace vortexmod;

constexpr int exit_invalid = 2;
constexpr int exit_no_convergence = 3;

bool text_output = false;

void print_text(const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j) {
  if (text_output) {
    print_text(j, "");
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Json rational(const Rational& x) { return to_string(x); }

Json optional_number(const std::optional<long>& x) { return x ? Json(*x) : Json(nullptr); }

std::vector<Rational> parse_coefficients(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ParseError("no coefficients given");
  return out;
}

// ---- ring

struct RingArgs {
  int d = 1;
  int g = 0;
  std::string expr;
  bool oracle = false;
};

int run_ring(const RingArgs& a) {
  const auto p = symring::RingParams::make(a.d, a.g);
  const auto free_class = symring::parse_class(p, a.expr);
  const auto nf = symring::normal_form(free_class);
  Json out;
  out["d"] = a.d;
  out["g"] = a.g;
  out["normal_form"] = symring::to_string(nf);
  out["integral"] = rational(symring::integrate(nf));
  if (a.oracle) {
    const Rational via_oracle = oracle::oracle_integrate(oracle::pullback(free_class));
    out["oracle_integral"] = rational(via_oracle);
    out["oracle_agrees"] = via_oracle == symring::integrate(nf);
  }
  emit(out);
  return 0;
}

// ---- kahler

struct KahlerArgs {
  int d = 2;
  int g = 1;
  long elldelta = 1;
  std::optional<double> e2, tau, vol;
};

int run_kahler(const KahlerArgs& a) {
  const auto degrees = curve_degrees(a.d, a.g, a.elldelta);
  const auto fs = fs_coefficients(a.d, a.g, degrees);
  Json out;
  out["d"] = a.d;
  out["g"] = a.g;
  out["elldelta"] = a.elldelta;
  out["d0"] = degrees.d0;
  out["d1"] = degrees.d1;
  out["C_eta"] = rational(fs.c_eta);
  out["C_sigma"] = rational(fs.c_sigma);
  out["volume"] = rational(symplectic_volume(fs, a.d, a.g));
  const bool physical = a.e2 || a.tau || a.vol;
  if (physical && !(a.e2 && a.tau && a.vol)) throw ParameterError("--e2, --tau and --vol go together");
  if (physical) {
    const auto phys = PhysicalParams::make(*a.e2, *a.tau, *a.vol);
    const auto l2 = l2_class(phys, a.d);
    const auto rep = representability(phys, a.d, a.g);
    out["q"] = rep.q;
    out["q_is_integer"] = quantization(phys).is_integer;
    out["elldelta_theorem"] = optional_number(rep.elldelta_theorem);
    out["elldelta_ratio"] = rep.elldelta_ratio ? rational(*rep.elldelta_ratio) : Json(rep.elldelta_ratio_value);
    out["consistent"] = rep.consistent;
    out["l2_class"] = {{"c_eta", l2.c_eta}, {"c_sigma", l2.c_sigma}};
    out["l2_volume"] = symplectic_volume(l2, a.d, a.g);
  } else {
    out["q"] = nullptr;
    out["elldelta_theorem"] = nullptr;
    out["elldelta_ratio"] = nullptr;
    out["consistent"] = nullptr;
  }
  emit(out);
  return 0;
}

// ---- embed

struct EmbedArgs {
  int n = 1, r = 1, d = 0, g = 0, ell = 1, delta = 1;
};

int run_embed(const EmbedArgs& a) {
  const auto p = EmbeddingParams::make(a.n, a.r, a.d, a.g, a.ell, a.delta);
  const auto gr = grassmann_params(p);
  Json out;
  out["n"] = p.n;
  out["r"] = p.r;
  out["d"] = p.d;
  out["g"] = p.g;
  out["ell"] = p.ell;
  out["delta"] = p.delta;
  out["rr_dim"] = rr_dim(p);
  out["total_dim"] = gr.total_dim;
  out["subspace_dim"] = gr.subspace_dim;
  out["gr_dim"] = gr.gr_dim;
  out["plucker_ambient_dim"] = to_string(gr.plucker_ambient_dim);
  try {
    out["moduli_dim"] = moduli_dim(p.n, p.r, p.d, p.g);
  } catch (const DomainError&) {
    out["moduli_dim"] = nullptr;
  }
  out["tangent_dim_local"] = p.n == p.r ? Json(tangent_dim_local(p.r, p.d)) : Json(nullptr);
  emit(out);
  return 0;
}

// ---- stability

struct StabilityArgs {
  double e2 = 1, tau = 1, vol = 1;
  int d = 0, r = 1;
};

int run_stability(const StabilityArgs& a) {
  const auto rep = stability_check(PhysicalParams::make(a.e2, a.tau, a.vol), a.d, a.r);
  emit(Json{{"stable", rep.stable}, {"margin", rep.margin}, {"critical_tau", rep.critical_tau}});
  return 0;
}

// ---- strata

int run_strata(int d, int r) {
  Json rows = Json::array();
  for (const auto& row : strata::stratification_report(d, r)) {
    rows.push_back({{"partition", row.partition},
                    {"points", row.points},
                    {"tower", row.tower},
                    {"parameter_dim", row.parameter_dim},
                    {"codim", row.codim}});
  }
  if (text_output) {
    std::printf("%-20s %6s %14s %6s  %s\n", "partition", "points", "parameter_dim", "codim", "tower");
    for (const auto& row : strata::stratification_report(d, r)) {
      std::printf("%-20s %6d %14d %6d  %s\n", strata::to_string(row.partition).c_str(), row.points,
                  row.parameter_dim, row.codim, row.tower.c_str());
    }
    return 0;
  }
  emit(Json{{"d", d}, {"r", r}, {"rows", rows}});
  return 0;
}

// ---- genus0

struct Genus0Args {
  std::vector<std::string> s;
  std::optional<int> delta;
  std::string family;
  int d = 1;
  std::string p = "2";
};

Json form_json(const genus0::BinaryForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(rational(c));
  return out;
}

int run_genus0(const Genus0Args& a) {
  using namespace genus0;
  if (!a.family.empty()) {
    if (!a.s.empty()) throw ParameterError("--s and --family are exclusive");
    if (a.family != "d0" && a.family != "d1") throw ParameterError("--family must be d0 or d1");
    const int delta = a.delta.value_or(a.d + 1);
    const auto family = a.family == "d0" ? Family::D0 : Family::D1;
    Json out{{"family", a.family}, {"d", a.d}, {"delta", delta}};
    if (family == Family::D1) out["p"] = a.p;
    out["degree"] = curve_degree(family, a.d, delta, parse_rational(a.p));
    const long j = family == Family::D0 ? 0 : 1;
    out["formula_degree"] = (a.d - j) * (delta - a.d + 1);
    emit(out);
    return 0;
  }
  if (a.s.empty()) throw ParameterError("genus0 needs --s or --family");
  std::vector<BinaryForm> forms;
  for (const auto& text : a.s) {
    auto c = parse_coefficients(text);
    const int degree = static_cast<int>(c.size()) - 1;
    forms.emplace_back(degree, std::move(c));
  }
  const auto pair = BinaryFormPair::line(forms);
  const int delta = a.delta.value_or(pair.d + 1);
  const auto basis = embed_pair(pair, delta);
  Json vectors = Json::array();
  for (Eigen::Index i = 0; i < basis.basis.rows(); ++i) {
    Json v = Json::array();
    for (Eigen::Index j = 0; j < basis.basis.cols(); ++j) v.push_back(rational(basis.basis(i, j)));
    vectors.push_back(v);
  }
  Json coords = Json::array();
  for (const auto& c : plucker(basis)) coords.push_back(rational(c));
  Json rebuilt = Json::array();
  const auto back = reconstruct(basis);
  for (const auto& f : back.rows.front()) rebuilt.push_back(form_json(f));
  Json out{{"n", pair.n}, {"d", pair.d}, {"delta", delta}};
  out["ambient_dim"] = basis.ambient_dim();
  out["dim"] = basis.dim();
  out["basis"] = vectors;
  out["plucker"] = coords;
  out["reconstruction"] = rebuilt;
  out["round_trip"] = same_up_to_scalar(pair, back);
  out["smallest_working_delta"] = smallest_working_delta(pair);
  emit(out);
  return 0;
}

// ---- vortex

struct VortexArgs {
  std::string config;
  std::string dump;
};

void dump_field(const taubes::TorusVortexState& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write dump file '" + path + "'");
  char header[256];
  std::snprintf(header, sizeof header, "%d %d %.17g %.17g %d\n", s.torus.N1, s.torus.N2, s.torus.L1,
                s.torus.L2, s.degree);
  out << header;
  static_assert(std::endian::native == std::endian::little, "field dump assumes a little-endian host");
  out.write(reinterpret_cast<const char*>(s.u.data()), static_cast<std::streamsize>(s.u.size() * sizeof(double)));
}

int run_vortex(const VortexArgs& a) {
  const auto prob = load_vortex_config(a.config);
  const auto state = taubes::solve(prob);
  if (!a.dump.empty()) dump_field(state, a.dump);
  emit(Json{{"d", state.degree},
            {"residual", state.residual_norm},
            {"iterations", state.iterations},
            {"flux", state.flux},
            {"higgs_l2", state.higgs_l2},
            {"expected_higgs_l2", taubes::expected_higgs_l2(prob)},
            {"sup_phi2", state.sup_phi2},
            {"max_u", state.max_u},
            {"reg_width", state.reg_width}});
  return 0;
}

// ---- verify

int run_verify(bool fast) {
  const auto results = acceptance::run_acceptance(fast);
  bool all = true;
  Json rows = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    std::cerr << acceptance::format(r) << "\n";
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
  }
  emit(Json{{"fast", fast}, {"all_pass", all}, {"criteria", rows}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vortex moduli computations: cohomology of Sym^d, embeddings, strata, vortex solver"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", text_output, "plain key: value output");

  RingArgs ring;
  auto* ring_cmd = app.add_subcommand("ring", "normal form and integral of a cohomology class");
  ring_cmd->add_option("--d", ring.d, "degree of the symmetric product")->required();
  ring_cmd->add_option("--g", ring.g, "genus")->required();
  ring_cmd->add_option("--expr", ring.expr, "class, e.g. \"eta^2*sigma - 3*xi[1,4]\"")->required();
  ring_cmd->add_flag("--oracle", ring.oracle, "cross-check the integral in the tensor model");

  KahlerArgs kahler;
  auto* kahler_cmd = app.add_subcommand("kahler", "Fubini-Study coefficients, L2 class, representability");
  kahler_cmd->add_option("--d", kahler.d)->required();
  kahler_cmd->add_option("--g", kahler.g)->required();
  kahler_cmd->add_option("--elldelta", kahler.elldelta)->required();
  kahler_cmd->add_option("--e2", kahler.e2);
  kahler_cmd->add_option("--tau", kahler.tau);
  kahler_cmd->add_option("--vol", kahler.vol);

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Grassmannian and Plucker dimensions");
  embed_cmd->add_option("--n", embed.n)->required();
  embed_cmd->add_option("--r", embed.r)->required();
  embed_cmd->add_option("--d", embed.d)->required();
  embed_cmd->add_option("--g", embed.g)->required();
  embed_cmd->add_option("--ell", embed.ell)->required();
  embed_cmd->add_option("--delta", embed.delta)->required();

  StabilityArgs stab;
  auto* stab_cmd = app.add_subcommand("stability", "tau e2 vol > 4 pi d");
  stab_cmd->add_option("--e2", stab.e2)->required();
  stab_cmd->add_option("--tau", stab.tau)->required();
  stab_cmd->add_option("--vol", stab.vol)->required();
  stab_cmd->add_option("--d", stab.d)->required();
  stab_cmd->add_option("--r", stab.r);

  int strata_d = 1;
  int strata_r = 1;
  auto* strata_cmd = app.add_subcommand("strata", "stratification of the local moduli space");
  strata_cmd->add_option("--d", strata_d)->required();
  strata_cmd->add_option("--r", strata_r)->required();

  Genus0Args g0;
  auto* g0_cmd = app.add_subcommand("genus0", "embedding, Plucker point and curve degrees on P^1");
  g0_cmd->add_option("--s", g0.s, "coefficients of one component of s, e.g. \"0,1,-1,0\" (repeatable)");
  g0_cmd->add_option("--delta", g0.delta);
  g0_cmd->add_option("--family", g0.family, "d0 or d1");
  g0_cmd->add_option("--d", g0.d, "degree for --family");
  g0_cmd->add_option("--p", g0.p, "fixed point of the d1 family");

  VortexArgs vortex;
  auto* vortex_cmd = app.add_subcommand("vortex", "solve the vortex equations on a flat torus");
  vortex_cmd->add_option("--config", vortex.config, "problem file (relative paths also tried under $VORTEXMOD_CONFIG_DIR)")
      ->required();
  vortex_cmd->add_option("--dump", vortex.dump, "write u as a binary grid");

  bool fast = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_flag("--fast", fast, "exact checks only (skip the PDE criteria)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }
  if (json_flag && text_output) {
    std::cerr << "error: --json and --text are exclusive\n";
    return exit_invalid;
  }

  try {
    if (*ring_cmd) return run_ring(ring);
    if (*kahler_cmd) return run_kahler(kahler);
    if (*embed_cmd) return run_embed(embed);
    if (*stab_cmd) return run_stability(stab);
    if (*strata_cmd) return run_strata(strata_d, strata_r);
    if (*g0_cmd) return run_genus0(g0);
    if (*vortex_cmd) return run_vortex(vortex);
    if (*verify_cmd) return run_verify(fast);
  } catch (const StabilityError& e) {
    std::cerr << "error: " << e.what() << " (critical tau " << e.critical_tau() << ")\n";
    return exit_invalid;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_no_convergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
