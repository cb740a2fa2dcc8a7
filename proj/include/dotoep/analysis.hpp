#ifndef DOTOEP_ANALYSIS_HPP
#define DOTOEP_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dotoep/spectra.hpp"

// Machine verification of the sandwich theorems, the remainder-norm
// lemma, the minimal-eigenvalue bound, and the asymptotic heuristics.

namespace dotoep {

// One verified inequality lhs <= rhs; margin = rhs - lhs and
// passed <=> margin >= -tol for the tolerance recorded in params["tol"].
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool passed = false;
  std::map<std::string, double> params;

  static BoundReport make(std::string name, double lhs, double rhs, double tol,
                          std::map<std::string, double> params = {});
};

// Random sandwich experiment: weights c_j in [c_lo,c_hi] build
// T~ = sum c_j h^{jh} T(g_j); per-term factors d_j in [d_lo,d_hi]
// realize f_j = d_j g_j, giving the general matrix sum.
struct SandwichConfig {
  int n = 0;
  std::vector<double> c;
  std::vector<double> d;
  double c_lo = 0.0, c_hi = 0.0;
  double d_lo = 0.0, d_hi = 0.0;
  std::uint64_t seed = 0;  // 0 when weights were given explicitly

  void validate() const;  // throws before any compute on a bad config

  static SandwichConfig uniform(int n);  // all c_j = d_j = 1, bounds [1,1]
  static SandwichConfig random(int n, double c_lo, double c_hi, double d_lo, double d_hi,
                               std::uint64_t seed);
};

// Remainder matrix R = T(psi_{n,alpha}) checks:
//   first  ||R||_2 <= alpha/(3 pi n^2 (3-alpha))
//   second h^alpha T(g_alpha) <= T(eta) + R     (Loewner)
std::pair<BoundReport, BoundReport> lemma_rnj_check(int n, double alpha, double tol = 1e-12);

// Both matrix sandwiches and all twelve scalar consequences:
//   c_lo T^ <= T~ <= c_hi T^   and   d_lo T~ <= T_sum <= d_hi T~
// plus the lambda_min / lambda_max / mu2 two-sided bounds each implies.
// Returns 14 reports (2 matrix + 12 scalar).
std::vector<BoundReport> sandwich_check(const SandwichConfig& cfg, double tol = 1e-10);

// M_{n,q} = (1/q) sum_j h^{alpha_j} T(g_{alpha_j});
//   lambda_min(M) <= lambda_min(T(eta)) + (h^2/(pi q)) sum alpha_j/(alpha_j+1).
// params records the tighter chain bound with sum ||R_j||_2/q, lambda_0,
// and the ratio lambda_min(M)/h^2.
BoundReport mnq_bound_check(int n, int q, const std::vector<double>& alphas,
                            double tol = 1e-10);

// Q_q(x) = F^_q(pi x) through the geometric closed form; the removable
// point q|theta| = 1 takes its limit value q theta^2.
double quantile_prediction(int q, double x);

// Closed-form evaluation of the canonical aggregate symbol at any theta.
double canonical_closed_form(int q, double theta);

// (pi(pi-1)/log pi) * h  and  pi^2 n / log(pi n).
std::pair<double, double> heuristic_extremes(int n);
double heuristic_lambda_min_constant();

enum class GrowthModel { kH, kH2, kNOverLogN, kN2OverLogN };

struct FitReport {
  GrowthModel model;
  std::vector<double> scaled;       // value_i * scale(model, n_i)
  double max_deviation = 0.0;       // max |scaled_{i+1}/scaled_i - 1|
  bool flat = false;                // max_deviation <= threshold
  double threshold = 0.1;
};

// Flatness diagnostic for a doubling series against a claimed growth order.
FitReport asymptotic_fit(const std::vector<std::pair<int, double>>& series,
                         GrowthModel model, double threshold = 0.1);

}  // namespace dotoep

#endif  // DOTOEP_ANALYSIS_HPP
