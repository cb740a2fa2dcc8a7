#include "dotoep/toeplitz.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/FFT>

namespace dotoep {

SymToeplitz::SymToeplitz(std::vector<double> first_col) : col_(std::move(first_col)) {
  if (col_.empty()) throw std::invalid_argument("SymToeplitz: empty first column");
}

SymToeplitz SymToeplitz::assemble(const CoeffVector& coeffs) {
  if (coeffs.coeffs.empty()) throw std::invalid_argument("assemble: empty coefficient vector");
  return SymToeplitz(coeffs.coeffs);
}

Eigen::MatrixXd SymToeplitz::dense() const {
  const int n = order();
  Eigen::MatrixXd m(n, n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      m(s, t) = col_[static_cast<size_t>(std::abs(s - t))];
    }
  }
  return m;
}

double SymToeplitz::norm1() const {
  const int n = order();
  // row s sum = sum_t |c_{|s-t|}|; maximal over s, computed directly
  double best = 0.0;
  for (int s = 0; s < n; ++s) {
    double sum = 0.0;
    for (int t = 0; t < n; ++t) sum += std::abs(col_[static_cast<size_t>(std::abs(s - t))]);
    best = std::max(best, sum);
  }
  return best;
}

Eigen::VectorXd SymToeplitz::matvec(const Eigen::VectorXd& x, MatvecMode mode) const {
  const int n = order();
  if (x.size() != n) throw std::invalid_argument("matvec: dimension mismatch");
  if (mode == MatvecMode::kAuto) {
    mode = (n >= 256) ? MatvecMode::kFft : MatvecMode::kDirect;
  }
  if (mode == MatvecMode::kDirect) {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (int s = 0; s < n; ++s) {
      double sum = 0.0;
      for (int t = 0; t < n; ++t) sum += col_[static_cast<size_t>(std::abs(s - t))] * x[t];
      y[s] = sum;
    }
    return y;
  }

  // circulant embedding of size 2n: [c_0 .. c_{n-1}, 0, c_{n-1} .. c_1]
  const int m = 2 * n;
  std::vector<std::complex<double>> c(m), v(m), fc(m), fv(m);
  for (int i = 0; i < n; ++i) c[i] = col_[static_cast<size_t>(i)];
  c[n] = 0.0;
  for (int i = 1; i < n; ++i) c[m - i] = col_[static_cast<size_t>(i)];
  for (int i = 0; i < n; ++i) v[i] = x[i];
  Eigen::FFT<double> fft;
  fft.fwd(fc, c);
  fft.fwd(fv, v);
  for (int i = 0; i < m; ++i) fc[i] *= fv[i];
  fft.inv(fv, fc);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = fv[i].real();
  return y;
}

SymToeplitz linear_combination(const std::vector<std::pair<double, const SymToeplitz*>>& terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combination: no terms");
  const int n = terms.front().second->order();
  for (const auto& [w, t] : terms) {
    if (t->order() != n) throw std::invalid_argument("linear_combination: order mismatch");
    if (!(w > 0.0)) throw std::invalid_argument("linear_combination: weights must be > 0");
  }
  std::vector<double> col(static_cast<size_t>(n), 0.0);
  for (const auto& [w, t] : terms) {
    for (int k = 0; k < n; ++k) col[static_cast<size_t>(k)] += w * t->coeff(k);
  }
  return SymToeplitz(std::move(col));
}

LoewnerResult loewner_leq(const SymToeplitz& A, const SymToeplitz& B, double rel_tol) {
  if (A.order() != B.order()) throw std::invalid_argument("loewner_leq: order mismatch");
  const int n = A.order();
  std::vector<double> diff(static_cast<size_t>(n));
  bool all_zero = true;
  for (int k = 0; k < n; ++k) {
    diff[static_cast<size_t>(k)] = B.coeff(k) - A.coeff(k);
    if (diff[static_cast<size_t>(k)] != 0.0) all_zero = false;
  }
  if (all_zero) return LoewnerResult{true, 0.0, 0.0};

  SymToeplitz d(std::move(diff));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.dense(), Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(n - 1);
  const double scale = std::max(std::abs(lo), std::abs(hi));
  return LoewnerResult{lo >= -rel_tol * scale, lo, scale};
}

}  // namespace dotoep
