#pragma once

#include <optional>
#include <vector>

#include "sylvester/matcore.hpp"

namespace sylvester {

/// Inertia (n+, n0, n-) of a Hermitian matrix.
struct Inertia3 {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  [[nodiscard]] int size() const { return n_plus + n_zero + n_minus; }
  [[nodiscard]] int rank() const { return n_plus + n_minus; }
  [[nodiscard]] int signature() const { return n_plus - n_minus; }
  /// Inertia of -M.
  [[nodiscard]] Inertia3 negated() const { return {n_minus, n_zero, n_plus}; }
  [[nodiscard]] bool valid_for(int n) const {
    return n_plus >= 0 && n_zero >= 0 && n_minus >= 0 && size() == n;
  }

  friend bool operator==(const Inertia3&, const Inertia3&) = default;
};

/// Numerical surrogate for exact zero tests.
///
/// The zero threshold for a matrix of dimension n and norm `nrm` is
/// relative(n) * max(1, nrm) + absolute_floor. When `relative_zero` is unset
/// the relative part defaults to 1e-12 * n.
struct Tolerance {
  std::optional<double> relative_zero;
  double absolute_floor = 0.0;

  static constexpr double kDefaultPerDimension = 1e-12;

  [[nodiscard]] double relative(Index n) const {
    return relative_zero.value_or(kDefaultPerDimension * static_cast<double>(n));
  }
  [[nodiscard]] double threshold(Index n, double norm) const {
    return relative(n) * std::max(1.0, norm) + absolute_floor;
  }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// Result of a Bunch-Kaufman factorization P^T M P = L D L^*.
///
/// `perm[i]` is the row of M that lands in row i of P^T M P. D is block
/// diagonal with 1x1 and 2x2 blocks; `block_sizes` lists them in order.
template <class Scalar>
struct LdltFactorization {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  std::vector<Index> perm;
  Matrix lower;           // unit lower triangular
  Matrix block_diagonal;  // Hermitian, 1x1/2x2 blocks
  std::vector<int> block_sizes;
  Inertia3 inertia;
};

/// Bunch-Kaufman with alpha = (1 + sqrt 17)/8. Columns whose pivot and
/// sub-diagonal entries all fall below `zero_threshold` are deflated as exact
/// zero pivots. Each pivot block is classified against the threshold.
LdltFactorization<double> bunch_kaufman(const RealMatrix& m, double zero_threshold);
LdltFactorization<Complex> bunch_kaufman(const ComplexMatrix& m, double zero_threshold);

/// Inertia from the block diagonal of a Bunch-Kaufman factorization with the
/// zero threshold tol.threshold(n, ||m||_inf).
Inertia3 ldlt_inertia(const HermitianMatrix& m, const Tolerance& tol = {});

/// All eigenvalues, ascending (Householder tridiagonalization + implicit QR).
/// Throws NumericalError after 30*n QR iterations.
std::vector<double> symmetric_eigenvalues(const HermitianMatrix& m);

/// Sign counts of symmetric_eigenvalues under the zero threshold
/// tol.threshold(n, ||m||_inf), matching ldlt_inertia's convention.
Inertia3 eigenvalue_inertia(const HermitianMatrix& m, const Tolerance& tol = {});

/// Eigenvalues of a general square matrix (Hessenberg + shifted QR). For real
/// input complex values come in exactly conjugate pairs.
std::vector<Complex> general_eigenvalues(const RealMatrix& m);
std::vector<Complex> general_eigenvalues(const ComplexMatrix& m);

/// Number of singular values above relative(n) * max(1, ||m||_2) * n + absolute_floor.
/// For Hermitian input the absolute eigenvalues play the role of singular values.
int numeric_rank(const RealMatrix& m, const Tolerance& tol = {});
int numeric_rank(const ComplexMatrix& m, const Tolerance& tol = {});
int numeric_rank(const HermitianMatrix& m, const Tolerance& tol = {});

/// Threshold numeric_rank applies to singular values of an n x n matrix with
/// spectral norm `norm2`.
double rank_threshold(Index n, double norm2, const Tolerance& tol);

}  // namespace sylvester
