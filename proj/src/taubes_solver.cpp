#include "vortexmod/taubes_solver.hpp"

#include "vortexmod/errors.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vortexmod::taubes {

using std::numbers::pi;
using SpMat = Eigen::SparseMatrix<double>;

TorusSpec TorusSpec::make(double L1, double L2, int N1, int N2) {
  if (!(L1 > 0) || !(L2 > 0) || !std::isfinite(L1) || !std::isfinite(L2)) {
    throw ParameterError("torus periods must be positive and finite");
  }
  if (N1 < 32 || N2 < 32) throw ParameterError("torus grid needs N1, N2 >= 32");
  return TorusSpec{L1, L2, N1, N2};
}

int VortexProblem::degree() const {
  int d = 0;
  for (const auto& z : zeros) d += z.multiplicity;
  return d;
}

double VortexProblem::width() const {
  return reg_width.value_or(3.0 * std::max(torus.h1(), torus.h2()));
}

double VortexProblem::margin() const { return tau * e2 * torus.vol() - 4.0 * pi * degree(); }

double VortexProblem::critical_tau() const { return 4.0 * pi * degree() / (e2 * torus.vol()); }

void VortexProblem::validate() const {
  TorusSpec::make(torus.L1, torus.L2, torus.N1, torus.N2);
  for (const auto& z : zeros) {
    if (z.multiplicity < 1) throw ParameterError("zero multiplicities must be >= 1");
    if (!std::isfinite(z.x) || !std::isfinite(z.y)) throw ParameterError("zero positions must be finite");
  }
  if (!(e2 > 0)) throw ParameterError("e2 must be positive");
  if (!(tau > 0)) throw ParameterError("tau must be positive");
  if (!(width() > 0)) throw ParameterError("reg_width must be positive");
  if (!(tol > 0)) throw ParameterError("tol must be positive");
  if (max_iter < 1) throw ParameterError("max_iter must be >= 1");
  if (!(margin() > 1e-12 * tau * e2 * torus.vol())) {
    throw StabilityError("no vortex solution: tau e2 vol = " + std::to_string(tau * e2 * torus.vol()) +
                             " does not exceed 4 pi d = " + std::to_string(4.0 * pi * degree()),
                         critical_tau());
  }
}

double TorusVortexState::phi2(long k) const { return tau * std::exp(u(k)); }

namespace {

double wrap(double x, double period) {
  x = std::fmod(x, period);
  if (x > period / 2) x -= period;
  if (x < -period / 2) x += period;
  return x;
}

// Periodic 5-point Laplacian on the row-major grid.
SpMat laplacian(const TorusSpec& t) {
  const double c1 = 1.0 / (t.h1() * t.h1());
  const double c2 = 1.0 / (t.h2() * t.h2());
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(t.size()) * 5);
  for (int i = 0; i < t.N1; ++i) {
    for (int j = 0; j < t.N2; ++j) {
      const long k = t.index(i, j);
      entries.emplace_back(k, k, -2.0 * (c1 + c2));
      entries.emplace_back(k, t.index((i + 1) % t.N1, j), c1);
      entries.emplace_back(k, t.index((i + t.N1 - 1) % t.N1, j), c1);
      entries.emplace_back(k, t.index(i, (j + 1) % t.N2), c2);
      entries.emplace_back(k, t.index(i, (j + t.N2 - 1) % t.N2), c2);
    }
  }
  SpMat L(t.size(), t.size());
  L.setFromTriplets(entries.begin(), entries.end());
  L.makeCompressed();
  return L;
}

// Sum of Gaussians, each scaled so its grid quadrature is 4 pi m.
Eigen::VectorXd sources(const VortexProblem& prob) {
  const auto& t = prob.torus;
  const double w = prob.width();
  const double cell = t.h1() * t.h2();
  Eigen::VectorXd total = Eigen::VectorXd::Zero(t.size());
  Eigen::VectorXd bump(t.size());
  for (const auto& z : prob.zeros) {
    for (int i = 0; i < t.N1; ++i) {
      const double dx = wrap(i * t.h1() - z.x, t.L1);
      for (int j = 0; j < t.N2; ++j) {
        const double dy = wrap(j * t.h2() - z.y, t.L2);
        bump(t.index(i, j)) = std::exp(-(dx * dx + dy * dy) / (2.0 * w * w));
      }
    }
    total += (4.0 * pi * z.multiplicity / (bump.sum() * cell)) * bump;
  }
  return total;
}

struct Newton {
  const SpMat& L;
  const Eigen::VectorXd& S;
  double c;  // e2 tau

  // F(u) = -L u + c (e^u - 1) + S; zero at a solution.
  Eigen::VectorXd residual(const Eigen::VectorXd& u) const {
    return -(L * u) + c * (u.array().exp() - 1.0).matrix() + S;
  }
};

std::vector<long> diagonal_positions(const SpMat& A) {
  std::vector<long> pos(static_cast<std::size_t>(A.cols()), -1);
  for (long col = 0; col < A.outerSize(); ++col) {
    for (long p = A.outerIndexPtr()[col]; p < A.outerIndexPtr()[col + 1]; ++p) {
      if (A.innerIndexPtr()[p] == col) pos[static_cast<std::size_t>(col)] = p;
    }
  }
  return pos;
}

}  // namespace

double expected_higgs_l2(const VortexProblem& prob) {
  return prob.tau * prob.torus.vol() - 4.0 * pi * prob.degree() / prob.e2;
}

TorusVortexState solve(const VortexProblem& prob) {
  prob.validate();
  const auto& t = prob.torus;
  const double cell = t.h1() * t.h2();
  const SpMat L = laplacian(t);
  const Eigen::VectorXd S = sources(prob);
  const Newton newton{L, S, prob.e2 * prob.tau};

  // Jacobian of F is -L + c diag(e^u): symmetric positive definite.
  SpMat A = -L;
  A.makeCompressed();
  const auto diag = diagonal_positions(A);
  Eigen::VectorXd base_diag(t.size());
  for (long k = 0; k < t.size(); ++k) base_diag(k) = A.valuePtr()[diag[static_cast<std::size_t>(k)]];

  Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg;
  cg.setTolerance(1e-12);
  cg.setMaxIterations(20 * static_cast<int>(std::sqrt(static_cast<double>(t.size()))) + 1000);

  auto linear_solve = [&](const Eigen::VectorXd& mass, const Eigen::VectorXd& rhs) {
    for (long k = 0; k < t.size(); ++k) A.valuePtr()[diag[static_cast<std::size_t>(k)]] = base_diag(k) + mass(k);
    cg.compute(A);
    Eigen::VectorXd x = cg.solve(rhs);
    if (cg.info() != Eigen::Success && cg.error() > 1e-6) {
      throw ConvergenceError("linear solve stalled, relative error " + std::to_string(cg.error()));
    }
    return x;
  };

  // Start from the linearized problem e^u - 1 ~ u.
  Eigen::VectorXd u = linear_solve(Eigen::VectorXd::Constant(t.size(), newton.c), -S);
  Eigen::VectorXd F = newton.residual(u);
  double norm = F.lpNorm<Eigen::Infinity>();

  int iter = 0;
  while (norm > prob.tol) {
    if (iter == prob.max_iter) {
      throw ConvergenceError("Newton did not converge in " + std::to_string(prob.max_iter) +
                             " iterations, residual " + std::to_string(norm));
    }
    ++iter;
    const Eigen::VectorXd step = linear_solve(newton.c * u.array().exp().matrix(), -F);
    double lambda = 1.0;
    Eigen::VectorXd trial = u + step;
    Eigen::VectorXd trial_F = newton.residual(trial);
    while (!(trial_F.lpNorm<Eigen::Infinity>() < norm) && lambda > std::ldexp(1.0, -10)) {
      lambda *= 0.5;
      trial = u + lambda * step;
      trial_F = newton.residual(trial);
    }
    u = std::move(trial);
    F = std::move(trial_F);
    norm = F.lpNorm<Eigen::Infinity>();
  }

  TorusVortexState out;
  out.torus = t;
  out.degree = prob.degree();
  out.tau = prob.tau;
  out.reg_width = prob.width();
  out.residual_norm = norm;
  out.iterations = iter;
  const Eigen::ArrayXd phi2 = prob.tau * u.array().exp();
  out.higgs_l2 = phi2.sum() * cell;
  out.flux = flux_orientation * prob.e2 / (4.0 * pi) * (prob.tau * t.vol() - out.higgs_l2);
  out.sup_phi2 = phi2.maxCoeff();
  out.max_u = u.maxCoeff();
  out.u = std::move(u);
  return out;
}

std::vector<SweepRow> bradlow_sweep(const VortexProblem& tmpl, std::span<const double> vols) {
  std::vector<SweepRow> rows;
  for (double vol : vols) {
    if (!(vol > 0)) throw ParameterError("sweep volumes must be positive");
    const double s = std::sqrt(vol / tmpl.torus.vol());
    VortexProblem prob = tmpl;
    prob.torus.L1 *= s;
    prob.torus.L2 *= s;
    for (auto& z : prob.zeros) {
      z.x *= s;
      z.y *= s;
    }
    const auto state = solve(prob);
    rows.push_back(SweepRow{prob.torus.vol(), prob.margin(), state.sup_phi2, state.higgs_l2,
                            expected_higgs_l2(prob), state.iterations});
  }
  return rows;
}

}  // namespace vortexmod::taubes
