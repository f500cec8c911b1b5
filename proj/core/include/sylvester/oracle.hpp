#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylvester/bounds.hpp"
#include "sylvester/eigcore.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester {

enum class EigenClass { positive, zero, negative, complex, infinite };

std::string to_string(EigenClass c);
EigenClass eigen_class_from_string(const std::string& s);

/// One distinct eigenvalue (a cluster of computed ones).
struct EigenRecord {
  std::optional<Complex> value;  // nullopt is the point at infinity
  int algebraic_mult = 1;
  int geometric_mult = 1;
  EigenClass classification = EigenClass::positive;

  [[nodiscard]] bool is_infinite() const { return !value.has_value(); }
  [[nodiscard]] bool is_real() const {
    return classification == EigenClass::positive || classification == EigenClass::zero ||
           classification == EigenClass::negative;
  }

  friend bool operator==(const EigenRecord&, const EigenRecord&) = default;
};

struct OracleReport {
  int n = 0;
  int normal_rank = 0;
  // dim(ker A ∩ ker B), removed before the eigenvalue computation
  int common_kernel = 0;
  std::vector<EigenRecord> records;
  Inertia5 inertia;
};

// Merge radius and classification constants.
inline constexpr double kMergeRadius = 1e-6;
inline constexpr double kZeroRadius = 1e-6;

/// max over three random complex shifts mu of numeric_rank(A - mu B); shifts
/// lie on the circle of radius 1 + ||A|| / (1 + ||B||).
int normal_rank(const Pencil& p, std::uint64_t seed = 0, const Tolerance& tol = {});

/// Same idea for a matrix polynomial: max rank of P(mu) over random mu.
int normal_rank(const MatrixPolynomial& p, std::uint64_t seed = 0, const Tolerance& tol = {});

/// Eigenvalues of a pencil with algebraic and geometric multiplicities.
/// The common kernel of A and B is split off first; what remains must be
/// regular or SingularPencilError is thrown.
OracleReport pencil_oracle(const Pencil& p, std::uint64_t seed = 0, const Tolerance& tol = {});

std::vector<EigenRecord> pencil_eigen_records(const Pencil& p, std::uint64_t seed = 0, const Tolerance& tol = {});
Inertia5 classify_inertia5(const Pencil& p, std::uint64_t seed = 0, const Tolerance& tol = {});

/// Computed eigenvalues without clustering (nullopt = infinite). Cheap path
/// for large regular pencils where only counts are needed.
std::vector<std::optional<Complex>> pencil_eigenvalues(const Pencil& p, const Tolerance& tol = {});

/// Eigenvalues of a regular matrix polynomial through its first companion
/// pencil. Geometric multiplicity is n - rank P(lambda).
std::vector<EigenRecord> polynomial_eigen_records(const MatrixPolynomial& p, std::uint64_t seed = 0,
                                                  const Tolerance& tol = {});

/// Hermitian linearization of lambda^2 M + lambda D + K:
/// ([[D, K], [K, 0]], [[-M, 0], [0, K]]), same eigenvalues.
Pencil quadratic_symmetric_linearization(const MatrixPolynomial& p);

Inertia5 inertia_of(const std::vector<EigenRecord>& records);

/// Real eigenvalue count (algebraic) in (a, b) or [a, b]; a, b may be infinite.
int count_real_in(const std::vector<EigenRecord>& records, double a, double b, bool closed = false);

/// Distance from t to the nearest real eigenvalue (inf if none).
double distance_to_real_spectrum(const std::vector<EigenRecord>& records, double t);

}  // namespace sylvester
