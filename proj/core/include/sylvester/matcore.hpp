#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace sylvester {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

enum class ScalarKind { real, complex };

/// Dense Hermitian (real symmetric or complex Hermitian) matrix.
///
/// Construction symmetrizes the input as (M + M*)/2 after checking that the
/// asymmetry is at the level of formatting noise, so the stored entries
/// satisfy entries(i,j) == conj(entries(j,i)) exactly.
class HermitianMatrix {
 public:
  /// Relative asymmetry accepted (and removed) on construction.
  static constexpr double kSymmetryTolerance = 1e-10;

  explicit HermitianMatrix(RealMatrix m);
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix zero(Index n, ScalarKind kind = ScalarKind::real);
  static HermitianMatrix identity(Index n);

  [[nodiscard]] Index size() const;
  [[nodiscard]] ScalarKind scalar_kind() const;
  [[nodiscard]] bool is_real() const { return scalar_kind() == ScalarKind::real; }

  /// Real storage; throws std::logic_error for complex matrices.
  [[nodiscard]] const RealMatrix& real() const;
  /// Complex storage; throws std::logic_error for real matrices.
  [[nodiscard]] const ComplexMatrix& complex() const;
  /// Copy promoted to complex regardless of kind.
  [[nodiscard]] ComplexMatrix to_complex() const;

  [[nodiscard]] Complex operator()(Index i, Index j) const;

  /// Infinity norm (max absolute row sum).
  [[nodiscard]] double norm_inf() const;

  /// Exact Hermitian check on the stored entries.
  [[nodiscard]] bool is_exactly_hermitian() const;

  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), storage_);
  }

  /// alpha*x + beta*y for real alpha, beta; promotes to complex if needed.
  static HermitianMatrix combine(double alpha, const HermitianMatrix& x, double beta,
                                 const HermitianMatrix& y);

  HermitianMatrix operator-() const;
  friend HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    return combine(1.0, x, 1.0, y);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    return combine(1.0, x, -1.0, y);
  }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& x) {
    return combine(s, x, 0.0, x);
  }

  /// X* M X for square X of matching size (congruence). Real X keeps a real M real.
  [[nodiscard]] HermitianMatrix congruence(const RealMatrix& x) const;
  [[nodiscard]] HermitianMatrix congruence(const ComplexMatrix& x) const;

  friend bool operator==(const HermitianMatrix& x, const HermitianMatrix& y);

 private:
  std::variant<RealMatrix, ComplexMatrix> storage_;
};

/// The pencil A - zB.
class Pencil {
 public:
  Pencil(HermitianMatrix a, HermitianMatrix b);

  [[nodiscard]] const HermitianMatrix& a() const { return a_; }
  [[nodiscard]] const HermitianMatrix& b() const { return b_; }
  [[nodiscard]] Index size() const { return a_.size(); }
  [[nodiscard]] bool is_real() const { return a_.is_real() && b_.is_real(); }

  /// A - tB for real t.
  [[nodiscard]] HermitianMatrix at(double t) const;

 private:
  HermitianMatrix a_;
  HermitianMatrix b_;
};

/// P(z) = sum_i z^i A_i with a declared degree; the leading coefficient is
/// kept even when it is the zero matrix.
class MatrixPolynomial {
 public:
  explicit MatrixPolynomial(std::vector<HermitianMatrix> coeffs);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Index size() const { return coeffs_.front().size(); }
  [[nodiscard]] const std::vector<HermitianMatrix>& coeffs() const { return coeffs_; }
  [[nodiscard]] const HermitianMatrix& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const HermitianMatrix& leading() const { return coeffs_.back(); }
  [[nodiscard]] const HermitianMatrix& trailing() const { return coeffs_.front(); }

 private:
  std::vector<HermitianMatrix> coeffs_;
};

// ---------------------------------------------------------------------------
// Matrix Market I/O

HermitianMatrix load_matrix_market(const std::filesystem::path& path);
HermitianMatrix parse_matrix_market(const std::string& text);

/// Writes array format with the symmetric/hermitian qualifier, lower triangle
/// in column-major order, 17 significant digits (round-trips bit-exactly).
void save_matrix_market(const std::filesystem::path& path, const HermitianMatrix& m);
std::string format_matrix_market(const HermitianMatrix& m);

// ---------------------------------------------------------------------------
// Generators

/// X + X^T with X standard normal; deterministic for a fixed seed.
HermitianMatrix gen_random_symmetric(Index n, std::uint64_t seed);

/// m - sI with s placed between the k-th and (k+1)-th ascending eigenvalue,
/// so the result has exactly k negative eigenvalues. k = 0 uses
/// s = lambda_min - 1 and k = n uses s = lambda_max + 1.
HermitianMatrix gen_shifted_inertia(const HermitianMatrix& m, Index k);

/// Quadratic z^2 I + z beta*B + C of the damped mass-spring chain.
/// B = tridiag(-10, [20, 30, ..., 30, 20], -10), C = tridiag(-5, 15, -5).
MatrixPolynomial gen_spring_quadratic(Index n, double beta);

/// Hermitian pair carrying a single Jordan block of size n at lambda:
/// B is the anti-identity, A has lambda on the antidiagonal and 1 on the
/// antidiagonal just above it.
Pencil gen_jordan_pair(Index n, double lambda);

}  // namespace sylvester
