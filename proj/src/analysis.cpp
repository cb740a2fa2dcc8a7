#include "dotoep/analysis.hpp"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "dotoep/errors.hpp"

namespace dotoep {

BoundReport BoundReport::make(std::string name, double lhs, double rhs, double tol,
                              std::map<std::string, double> params) {
  BoundReport rep;
  rep.name = std::move(name);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  rep.passed = rep.margin >= -tol;
  rep.params = std::move(params);
  rep.params["tol"] = tol;
  return rep;
}

void SandwichConfig::validate() const {
  if (n < 1) throw ConfigError("SandwichConfig: n must be >= 1");
  if (static_cast<int>(c.size()) != n || static_cast<int>(d.size()) != n) {
    throw ConfigError("SandwichConfig: c and d must both have n entries");
  }
  if (!(c_lo > 0.0) || !(d_lo > 0.0)) throw ConfigError("SandwichConfig: lower bounds must be > 0");
  if (c_hi < c_lo || d_hi < d_lo) throw ConfigError("SandwichConfig: upper bound below lower bound");
  for (double v : c) {
    if (!(v >= c_lo && v <= c_hi)) throw ConfigError("SandwichConfig: c_j outside [c_lo,c_hi]");
  }
  for (double v : d) {
    if (!(v >= d_lo && v <= d_hi)) throw ConfigError("SandwichConfig: d_j outside [d_lo,d_hi]");
  }
}

SandwichConfig SandwichConfig::uniform(int n) {
  SandwichConfig cfg;
  cfg.n = n;
  cfg.c.assign(static_cast<size_t>(n), 1.0);
  cfg.d.assign(static_cast<size_t>(n), 1.0);
  cfg.c_lo = cfg.c_hi = cfg.d_lo = cfg.d_hi = 1.0;
  return cfg;
}

SandwichConfig SandwichConfig::random(int n, double c_lo, double c_hi, double d_lo,
                                      double d_hi, std::uint64_t seed) {
  SandwichConfig cfg;
  cfg.n = n;
  cfg.c_lo = c_lo;
  cfg.c_hi = c_hi;
  cfg.d_lo = d_lo;
  cfg.d_hi = d_hi;
  cfg.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uc(c_lo, c_hi), ud(d_lo, d_hi);
  cfg.c.resize(static_cast<size_t>(n));
  cfg.d.resize(static_cast<size_t>(n));
  for (auto& v : cfg.c) v = uc(rng);
  for (auto& v : cfg.d) v = ud(rng);
  cfg.validate();
  return cfg;
}

std::pair<BoundReport, BoundReport> lemma_rnj_check(int n, double alpha, double tol) {
  if (n < 1) throw std::invalid_argument("lemma_rnj_check: n must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("lemma_rnj_check: alpha must lie in [0,1]");
  }
  const double h = 1.0 / n;

  std::vector<double> rcol(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) rcol[static_cast<size_t>(k)] = psi_coeff(n, alpha, k);
  SymToeplitz R(std::move(rcol));

  const double norm_bound = alpha / (3.0 * M_PI * n * n * (3.0 - alpha));
  const double rnorm = (alpha == 0.0) ? 0.0 : spectral_norm(R);
  std::map<std::string, double> params{{"n", static_cast<double>(n)}, {"alpha", alpha}};
  BoundReport norm_rep = BoundReport::make("rnj.spectral_norm", rnorm, norm_bound, tol, params);

  // h^alpha T(g_alpha) <= T(eta) + R
  std::vector<double> lhs_col(static_cast<size_t>(n)), rhs_col(static_cast<size_t>(n));
  const double ha = std::pow(h, alpha);
  for (int k = 0; k < n; ++k) {
    lhs_col[static_cast<size_t>(k)] = ha * fourier_coeff_power_cached(alpha, k, 1e-13);
    rhs_col[static_cast<size_t>(k)] = fourier_coeff_eta(k) + R.coeff(k);
  }
  SymToeplitz lhs_m(std::move(lhs_col)), rhs_m(std::move(rhs_col));
  LoewnerResult loewner = loewner_leq(lhs_m, rhs_m, 1e-10);
  params["loewner_scale"] = loewner.scale;
  BoundReport loewner_rep =
      BoundReport::make("rnj.loewner", 0.0, loewner.margin, 1e-10 * loewner.scale, params);
  return {norm_rep, loewner_rep};
}

namespace {

struct SpectrumTriple {
  double lmin, lmax, mu2;
};

SpectrumTriple triple_of(const SymToeplitz& T) {
  auto [lo, hi] = extreme_eigs(T, EigMode::kFull);
  return {lo, hi, hi / lo};
}

void scalar_sandwich(std::vector<BoundReport>& out, const std::string& prefix,
                     double lo_factor, double hi_factor, const SpectrumTriple& inner,
                     const SpectrumTriple& outer, double tol,
                     const std::map<std::string, double>& params) {
  // lo_factor*outer <= inner <= hi_factor*outer for lambda_min, lambda_max;
  // (lo/hi)*mu2(outer) <= mu2(inner) <= (hi/lo)*mu2(outer)
  auto both = [&](const std::string& what, double inner_v, double outer_v, double lo_f,
                  double hi_f) {
    const double scale = std::max(std::abs(inner_v), std::abs(hi_f * outer_v));
    out.push_back(BoundReport::make(prefix + "." + what + ".lower", lo_f * outer_v, inner_v,
                                    tol * scale, params));
    out.push_back(BoundReport::make(prefix + "." + what + ".upper", inner_v, hi_f * outer_v,
                                    tol * scale, params));
  };
  both("lambda_min", inner.lmin, outer.lmin, lo_factor, hi_factor);
  both("lambda_max", inner.lmax, outer.lmax, lo_factor, hi_factor);
  both("mu2", inner.mu2, outer.mu2, lo_factor / hi_factor, hi_factor / lo_factor);
}

}  // namespace

std::vector<BoundReport> sandwich_check(const SandwichConfig& cfg, double tol) {
  cfg.validate();
  const int n = cfg.n;
  const double h = 1.0 / n;

  // per-exponent coefficient vectors, shared by the three matrices
  std::vector<double> grid(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) grid[static_cast<size_t>(j)] = j * h;
  const std::vector<std::vector<double>> base = power_coeff_table(grid, n, 1e-13);
  std::vector<double> hat_col(static_cast<size_t>(n), 0.0);
  std::vector<double> tilde_col(static_cast<size_t>(n), 0.0);
  std::vector<double> sum_col(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    const double hw = std::pow(h, j * h);
    for (int k = 0; k < n; ++k) {
      const double a = base[static_cast<size_t>(j)][static_cast<size_t>(k)];
      hat_col[static_cast<size_t>(k)] += hw * a;
      tilde_col[static_cast<size_t>(k)] += cfg.c[static_cast<size_t>(j)] * hw * a;
      sum_col[static_cast<size_t>(k)] +=
          cfg.c[static_cast<size_t>(j)] * cfg.d[static_cast<size_t>(j)] * hw * a;
    }
  }
  SymToeplitz hat(std::move(hat_col)), tilde(std::move(tilde_col)), full(std::move(sum_col));

  std::map<std::string, double> params{{"n", static_cast<double>(n)},
                                       {"c_lo", cfg.c_lo},
                                       {"c_hi", cfg.c_hi},
                                       {"d_lo", cfg.d_lo},
                                       {"d_hi", cfg.d_hi},
                                       {"seed", static_cast<double>(cfg.seed)}};
  std::vector<BoundReport> out;

  auto matrix_sandwich = [&](const std::string& name, const SymToeplitz& inner,
                             const SymToeplitz& outer, double lo_f, double hi_f) {
    // lo_f*outer <= inner: scale outer columns by lo_f
    std::vector<double> lo_col(outer.first_col()), hi_col(outer.first_col());
    for (auto& v : lo_col) v *= lo_f;
    for (auto& v : hi_col) v *= hi_f;
    LoewnerResult lower = loewner_leq(SymToeplitz(lo_col), inner, tol);
    LoewnerResult upper = loewner_leq(inner, SymToeplitz(hi_col), tol);
    const double worst = std::min(lower.margin, upper.margin);
    const double scale = std::max(lower.scale, upper.scale);
    out.push_back(BoundReport::make(name, 0.0, worst, tol * std::max(scale, 1e-300), params));
  };

  SpectrumTriple s_hat = triple_of(hat);
  SpectrumTriple s_tilde = triple_of(tilde);
  SpectrumTriple s_full = triple_of(full);

  matrix_sandwich("reduction.matrix", tilde, hat, cfg.c_lo, cfg.c_hi);
  scalar_sandwich(out, "reduction", cfg.c_lo, cfg.c_hi, s_tilde, s_hat, tol, params);
  matrix_sandwich("sandwich.matrix", full, tilde, cfg.d_lo, cfg.d_hi);
  scalar_sandwich(out, "sandwich", cfg.d_lo, cfg.d_hi, s_full, s_tilde, tol, params);
  return out;
}

BoundReport mnq_bound_check(int n, int q, const std::vector<double>& alphas, double tol) {
  if (q < 1 || static_cast<int>(alphas.size()) != q) {
    throw std::invalid_argument("mnq_bound_check: need q >= 1 exponents");
  }
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw std::invalid_argument("mnq_bound_check: alpha_j must lie in [0,1]");
    }
  }
  const double h = 1.0 / n;

  const std::vector<std::vector<double>> table = power_coeff_table(alphas, n, 1e-13);
  std::vector<double> col(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < q; ++j) {
    const double w = std::pow(h, alphas[static_cast<size_t>(j)]) / q;
    for (int k = 0; k < n; ++k) {
      col[static_cast<size_t>(k)] += w * table[static_cast<size_t>(j)][static_cast<size_t>(k)];
    }
  }
  SymToeplitz M(std::move(col));

  std::vector<double> eta_col(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) eta_col[static_cast<size_t>(k)] = fourier_coeff_eta(k);
  SymToeplitz T_eta(std::move(eta_col));

  const double lambda_min_M = extreme_eigs(M, EigMode::kFull).first;
  const double lambda0 = extreme_eigs(T_eta, EigMode::kFull).first;

  double stated_sum = 0.0, chain_sum = 0.0;
  for (double a : alphas) {
    stated_sum += a / (a + 1.0);
    chain_sum += a / (3.0 * M_PI * n * n * (3.0 - a));
  }
  const double rhs_stated = lambda0 + h * h / (M_PI * q) * stated_sum;
  const double rhs_chain = lambda0 + chain_sum / q;

  std::map<std::string, double> params{{"n", static_cast<double>(n)},
                                       {"q", static_cast<double>(q)},
                                       {"lambda0", lambda0},
                                       {"rhs_chain", rhs_chain},
                                       {"ratio_h2", lambda_min_M / (h * h)}};
  const double scale = std::max(std::abs(lambda_min_M), std::abs(rhs_stated));
  return BoundReport::make("mnq.lambda_min", lambda_min_M, rhs_stated, tol * scale,
                           std::move(params));
}

double canonical_closed_form(int q, double theta) {
  if (q < 1) throw std::invalid_argument("canonical_closed_form: q must be >= 1");
  const double t = std::abs(theta);
  if (t == 0.0) return 0.0;
  const double L = std::log(q * t);
  if (L == 0.0) return q * t * t;  // removable point q|theta| = 1
  // theta^2 (1 - 1/(q t)) / (1 - (q t)^{-1/q}) via expm1 for stability
  const double num = -std::expm1(-L);
  const double den = -std::expm1(-L / q);
  return t * t * num / den;
}

double quantile_prediction(int q, double x) {
  if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("quantile_prediction: x must lie in (0,1)");
  return canonical_closed_form(q, M_PI * x);
}

double heuristic_lambda_min_constant() { return M_PI * (M_PI - 1.0) / std::log(M_PI); }

std::pair<double, double> heuristic_extremes(int n) {
  if (n < 2) throw std::invalid_argument("heuristic_extremes: n must be >= 2");
  const double h = 1.0 / n;
  return {heuristic_lambda_min_constant() * h, M_PI * M_PI * n / std::log(M_PI * n)};
}

FitReport asymptotic_fit(const std::vector<std::pair<int, double>>& series, GrowthModel model,
                         double threshold) {
  if (series.size() < 3) throw std::invalid_argument("asymptotic_fit: need at least 3 points");
  FitReport rep;
  rep.model = model;
  rep.threshold = threshold;
  rep.scaled.reserve(series.size());
  for (const auto& [n, value] : series) {
    double scale = 1.0;
    switch (model) {
      case GrowthModel::kH: scale = n; break;
      case GrowthModel::kH2: scale = static_cast<double>(n) * n; break;
      case GrowthModel::kNOverLogN: scale = std::log(static_cast<double>(n)) / n; break;
      case GrowthModel::kN2OverLogN: scale = std::log(M_PI * n) / (M_PI * n * M_PI * n); break;
    }
    rep.scaled.push_back(value * scale);
  }
  for (size_t i = 0; i + 1 < rep.scaled.size(); ++i) {
    rep.max_deviation =
        std::max(rep.max_deviation, std::abs(rep.scaled[i + 1] / rep.scaled[i] - 1.0));
  }
  rep.flat = rep.max_deviation <= threshold;
  return rep;
}

}  // namespace dotoep
