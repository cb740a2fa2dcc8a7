#ifndef DOTOEP_SPECTRA_HPP
#define DOTOEP_SPECTRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dotoep/toeplitz.hpp"

// Extreme eigenvalues, full spectra, condition numbers, and pencil
// spectra of symmetric positive definite Toeplitz matrices.

namespace dotoep {

enum class EigMode { kFull, kIterative };

struct IterOptions {
  int max_iter = 500;
  double resid_rel = 1e-10;   // converged when ||Tv - lv|| <= resid_rel*||T||_1
  unsigned seed = 20240915;   // deterministic start vector
};

// (lambda_min, lambda_max).  kFull uses a dense symmetric solve; kIterative
// uses Lanczos on the matrix for lambda_max and on a factored inverse for
// lambda_min.  Throws ConvergenceError past the iteration budget.
std::pair<double, double> extreme_eigs(const SymToeplitz& T, EigMode mode = EigMode::kFull,
                                       const IterOptions& opt = {});

// All eigenvalues ascending; verifies the trace identity against n*a_0.
std::vector<double> full_spectrum(const SymToeplitz& T);

// Eigenvalues of M^{-1} A via the Cholesky pencil reduction
// M = L L^T, eig(L^{-1} A L^{-T}); ascending, all real.
std::vector<double> precond_spectrum(const SymToeplitz& A, const SymToeplitz& M);

double spectral_norm(const SymToeplitz& T);

struct SpectrumReport {
  int n = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  double mu2 = 0.0;
  std::optional<std::vector<double>> full_spectrum;
  std::map<std::string, double> scaled;
};

// Populates the report plus the scaled quantities:
//   plain         lambda*_min = n lmin, lambda*_max = log(pi n)/(pi^2 n) lmax,
//                 mu*_2 = log(pi n)/(pi n)^2 mu2
//   preconditioned lambda^_min = (log n/n) lmin, lambda^_max = log(pi n)/n^2 lmax,
//                 mu^_2 = mu2/n
SpectrumReport condition_report(const SymToeplitz& T, const SymToeplitz* precond = nullptr,
                                bool keep_spectrum = false);

}  // namespace dotoep

#endif  // DOTOEP_SPECTRA_HPP
