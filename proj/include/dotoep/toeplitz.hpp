#ifndef DOTOEP_TOEPLITZ_HPP
#define DOTOEP_TOEPLITZ_HPP

#include <Eigen/Dense>
#include <vector>

#include "dotoep/symbols.hpp"

// Symmetric Toeplitz matrices stored by first column.  Dense
// materialization happens only inside eigensolvers and debug dumps.

namespace dotoep {

enum class MatvecMode { kAuto, kDirect, kFft };

class SymToeplitz {
 public:
  explicit SymToeplitz(std::vector<double> first_col);

  static SymToeplitz assemble(const CoeffVector& coeffs);

  int order() const { return static_cast<int>(col_.size()); }
  const std::vector<double>& first_col() const { return col_; }
  double coeff(int k) const { return col_[static_cast<size_t>(k)]; }
  double operator()(int s, int t) const { return col_[static_cast<size_t>(std::abs(s - t))]; }

  Eigen::MatrixXd dense() const;

  // max absolute row sum; equals the induced 1-norm for symmetric matrices
  double norm1() const;

  Eigen::VectorXd matvec(const Eigen::VectorXd& x, MatvecMode mode = MatvecMode::kAuto) const;

 private:
  std::vector<double> col_;
};

// Coefficient-wise weighted sum; all orders must match, weights > 0.
SymToeplitz linear_combination(const std::vector<std::pair<double, const SymToeplitz*>>& terms);

struct LoewnerResult {
  bool holds = false;
  double margin = 0.0;      // lambda_min(B - A)
  double scale = 0.0;       // ||B - A||_2, the tolerance anchor
};

// Tests A <= B in the Loewner order: lambda_min(B - A) >= -rel_tol*||B - A||_2.
LoewnerResult loewner_leq(const SymToeplitz& A, const SymToeplitz& B, double rel_tol = 1e-10);

}  // namespace dotoep

#endif  // DOTOEP_TOEPLITZ_HPP
