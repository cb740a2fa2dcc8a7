#ifndef DOTOEP_SYMBOLS_HPP
#define DOTOEP_SYMBOLS_HPP

#include <string>
#include <vector>

#include "dotoep/errors.hpp"

// Symbol family on [-pi,pi] and its Fourier coefficients.
//
// Members of the family:
//   PowerSymbol      g(theta) = |theta|^(2-alpha),           alpha in [0,1]
//   quadratic        eta(theta) = theta^2                    (alpha = 0 case)
//   CutoffSymbol     psi(theta) = 1_[-h,h] (|theta|^(2-alpha) h^alpha - theta^2)
//   AggregateSymbol  F(theta) = sum_j w_j |theta|^(2-alpha_j)
//
// Coefficients a_k = (1/2pi) int_{-pi}^{pi} F(t) exp(-i k t) dt are real
// for this family (even, real symbols).  Two engines compute them:
// oscillation-partitioned quadrature (reference) and corrected uniform
// sampling + FFT (fast); they are cross-validated in the tests.

namespace dotoep {

enum class Engine { kQuadrature, kFftSampling, kClosedForm };

std::string engine_name(Engine e);
Engine engine_from_name(const std::string& name);

// |theta|^(2-alpha) with alpha in [0,1].
struct PowerSymbol {
  double alpha;

  explicit PowerSymbol(double a);
  double operator()(double theta) const;
};

// 1_[-h,h](theta) * (|theta|^(2-alpha) h^alpha - theta^2), h = 1/n.
// Nonnegative, even, supported on [-h,h]; identically zero when alpha = 0.
struct CutoffSymbol {
  int n;
  double alpha;

  CutoffSymbol(int order, double a);
  double h() const { return 1.0 / n; }
  double operator()(double theta) const;
};

// sum_j w_j |theta|^(2-alpha_j) with all w_j > 0.
class AggregateSymbol {
 public:
  AggregateSymbol(std::vector<double> weights, std::vector<double> alphas);

  // F_hat_n: weights h^(j h), exponents alpha_j = j h, h = 1/n.
  static AggregateSymbol canonical(int n);
  // weights c_j h^(j h); c must have n positive entries.
  static AggregateSymbol weighted(int n, const std::vector<double>& c);
  // weights c_j d_j h^(j h), realizing f_j = d_j g_j termwise.
  static AggregateSymbol weighted(int n, const std::vector<double>& c,
                                  const std::vector<double>& d);

  int order() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& alphas() const { return alphas_; }

  double operator()(double theta) const;

 private:
  std::vector<double> weights_;
  std::vector<double> alphas_;
};

// First coefficients a_0..a_{n-1} of an even real symbol plus engine and
// accuracy metadata.
struct CoeffVector {
  std::vector<double> coeffs;
  Engine engine = Engine::kQuadrature;
  double abs_tol = 0.0;

  int size() const { return static_cast<int>(coeffs.size()); }
};

// a_k(theta^2): pi^2/3 for k = 0, 2(-1)^k/k^2 for k >= 1.  Closed form,
// no quadrature.  Negative k rejected (symbol is even, callers use |k|).
double fourier_coeff_eta(int k);

// a_0(|theta|^(2-alpha)) = pi^(2-alpha)/(3-alpha), the analytic value.
double power_coeff_zero(double alpha);

// a_k(|theta|^(2-alpha)) by oscillation-partitioned quadrature, absolute
// accuracy tol.  Throws AccuracyError if the subdivision budget is hit.
double fourier_coeff_power(double alpha, int k, double tol);

// Memoized per (alpha, k, tol) within a run; thread safe.
double fourier_coeff_power_cached(double alpha, int k, double tol);
void clear_coeff_cache();

// Cached block of coefficients: row j holds a_0..a_{num_k-1} of
// |theta|^(2-alphas[j]), rows computed concurrently when parallel.
std::vector<std::vector<double>> power_coeff_table(const std::vector<double>& alphas,
                                                   int num_k, double tol,
                                                   bool parallel = true);

struct AggregateOptions {
  int oversample = 16;   // fft engine: M = oversample * n samples (>= 2)
  int num_coeffs = -1;   // defaults to the symbol order
  bool parallel = true;  // quadrature engine: distribute terms over threads
};

// Coefficients of an aggregate symbol.
//   kQuadrature  per-term quadrature at tol / sum(w_j) each, summed
//   kFftSampling uniform sampling + FFT with corner and cusp corrections;
//                abs_tol reports the measured aliasing estimate
CoeffVector fourier_coeffs_aggregate(const AggregateSymbol& sym, Engine engine,
                                     double tol, const AggregateOptions& opt = {});

// a_k(psi_{n,alpha}) over [0,h]; |result| <= alpha h^3/(3 pi (3-alpha)) + tol.
double psi_coeff(int n, double alpha, int k, double tol = 1e-15);

// Pointwise evaluation of an aggregate symbol; exact 0 at theta = 0.
double eval_aggregate(const AggregateSymbol& sym, double theta);

}  // namespace dotoep

#endif  // DOTOEP_SYMBOLS_HPP
