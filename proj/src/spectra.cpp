#include "dotoep/spectra.hpp"

#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "dotoep/errors.hpp"

namespace dotoep {

namespace {

// Lanczos with full reorthogonalization for the largest eigenvalue of a
// symmetric operator.  Residual of the top Ritz pair is |beta_m * s_m|.
struct LanczosResult {
  double value = 0.0;
  double residual = 0.0;
  Eigen::VectorXd vector;
  bool converged = false;
};

LanczosResult lanczos_largest(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& op,
                              int n, double resid_tol, int max_iter, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gauss(rng);
  v.normalize();

  const int m_max = std::min(n, max_iter);
  Eigen::MatrixXd basis(n, m_max);
  std::vector<double> alpha, beta;
  basis.col(0) = v;

  LanczosResult best;
  for (int m = 0; m < m_max; ++m) {
    Eigen::VectorXd w = op(basis.col(m));
    const double a = basis.col(m).dot(w);
    alpha.push_back(a);
    w -= a * basis.col(m);
    if (m > 0) w -= beta.back() * basis.col(m - 1);
    // full reorthogonalization, twice
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= m; ++i) w -= basis.col(i).dot(w) * basis.col(i);
    }
    const double b = w.norm();

    const int m1 = m + 1;
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m1, m1);
    for (int i = 0; i < m1; ++i) tri(i, i) = alpha[static_cast<size_t>(i)];
    for (int i = 0; i + 1 < m1; ++i) {
      tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const int top = m1 - 1;
    const double ritz = es.eigenvalues()(top);
    const double resid = b * std::abs(es.eigenvectors()(m, top));

    best.value = ritz;
    best.residual = resid;
    if (resid <= resid_tol || b <= 1e-300) {
      best.vector = basis.leftCols(m1) * es.eigenvectors().col(top);
      best.converged = true;
      return best;
    }
    if (m + 1 == m_max) break;
    beta.push_back(b);
    basis.col(m + 1) = w / b;
  }
  return best;
}

}  // namespace

std::pair<double, double> extreme_eigs(const SymToeplitz& T, EigMode mode,
                                       const IterOptions& opt) {
  const int n = T.order();
  if (mode == EigMode::kFull) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.dense(), Eigen::EigenvaluesOnly);
    return {es.eigenvalues()(0), es.eigenvalues()(n - 1)};
  }

  const double anchor = T.norm1();
  const double resid_tol = opt.resid_rel * anchor;

  // lambda_max: plain Lanczos through the fast matvec
  auto apply = [&](const Eigen::VectorXd& x) { return T.matvec(x); };
  LanczosResult top = lanczos_largest(apply, n, resid_tol, opt.max_iter, opt.seed);
  if (!top.converged) {
    throw ConvergenceError("extreme_eigs: lambda_max iteration budget exhausted",
                           top.value, top.residual);
  }

  // lambda_min: shift-and-invert at zero with a factored solve
  Eigen::LLT<Eigen::MatrixXd> llt(T.dense());
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("extreme_eigs: matrix not positive definite");
  }
  auto solve = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return llt.solve(x); };
  LanczosResult inv = lanczos_largest(solve, n, 1e-300, opt.max_iter, opt.seed + 1);
  double lmin = 1.0 / inv.value;
  // residual check in the original space
  if (inv.vector.size() == n) {
    const Eigen::VectorXd r = T.matvec(inv.vector) - lmin * inv.vector;
    if (r.norm() > resid_tol) {
      throw ConvergenceError("extreme_eigs: lambda_min residual above tolerance", lmin, r.norm());
    }
  } else {
    throw ConvergenceError("extreme_eigs: lambda_min iteration budget exhausted",
                           lmin, inv.residual);
  }
  return {lmin, top.value};
}

std::vector<double> full_spectrum(const SymToeplitz& T) {
  const int n = T.order();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.dense(), Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  const double trace = n * T.coeff(0);
  double sum = 0.0;
  for (double v : ev) sum += v;
  const double scale = std::max(1.0, std::abs(trace));
  if (std::abs(sum - trace) > 1e-10 * scale * n) {
    throw std::runtime_error("full_spectrum: trace identity violated");
  }
  return ev;
}

std::vector<double> precond_spectrum(const SymToeplitz& A, const SymToeplitz& M) {
  if (A.order() != M.order()) throw std::invalid_argument("precond_spectrum: order mismatch");
  const int n = A.order();
  Eigen::LLT<Eigen::MatrixXd> llt(M.dense());
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("precond_spectrum: preconditioner not positive definite");
  }
  const Eigen::MatrixXd L = llt.matrixL();
  // C = L^{-1} A L^{-T}, same spectrum as M^{-1} A
  Eigen::MatrixXd X = L.triangularView<Eigen::Lower>().solve(A.dense());
  Eigen::MatrixXd C = L.triangularView<Eigen::Lower>().solve(X.transpose()).transpose();
  C = 0.5 * (C + C.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C, Eigen::EigenvaluesOnly);
  return std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + n);
}

double spectral_norm(const SymToeplitz& T) {
  auto [lo, hi] = extreme_eigs(T, EigMode::kFull);
  return std::max(std::abs(lo), std::abs(hi));
}

SpectrumReport condition_report(const SymToeplitz& T, const SymToeplitz* precond,
                                bool keep_spectrum) {
  SpectrumReport rep;
  const int n = T.order();
  rep.n = n;

  std::vector<double> ev = precond ? precond_spectrum(T, *precond) : full_spectrum(T);
  rep.lambda_min = ev.front();
  rep.lambda_max = ev.back();
  rep.mu2 = rep.lambda_max / rep.lambda_min;
  if (keep_spectrum) rep.full_spectrum = std::move(ev);

  const double logpn = std::log(M_PI * n);
  if (precond) {
    rep.scaled["lambda_min_dagger"] = std::log(static_cast<double>(n)) / n * rep.lambda_min;
    rep.scaled["lambda_max_dagger"] = logpn / (static_cast<double>(n) * n) * rep.lambda_max;
    rep.scaled["mu2_dagger"] = rep.mu2 / n;
  } else {
    rep.scaled["lambda_min_star"] = n * rep.lambda_min;
    rep.scaled["lambda_max_star"] = logpn / (M_PI * M_PI * n) * rep.lambda_max;
    rep.scaled["mu2_star"] = logpn / (M_PI * n * M_PI * n) * rep.mu2;
  }
  return rep;
}

}  // namespace dotoep
