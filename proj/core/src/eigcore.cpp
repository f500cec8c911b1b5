#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sylvester/eigcore.hpp"
#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

constexpr int kSweepsPerRow = 30;

template <class M>
std::vector<double> selfadjoint_values(const M& m) {
  Eigen::SelfAdjointEigenSolver<M> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge within 30*n iterations");
  }
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

template <class M>
int rank_from_singular_values(const M& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) throw InputError("numeric_rank expects a square matrix");
  const Index n = m.rows();
  if (n == 0) return 0;
  Eigen::BDCSVD<M> svd(m);
  const auto& s = svd.singularValues();
  const double threshold = rank_threshold(n, s.size() > 0 ? s(0) : 0.0, tol);
  return static_cast<int>((s.array() > threshold).count());
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const HermitianMatrix& m) {
  return m.visit([](const auto& mat) { return selfadjoint_values(mat); });
}

Inertia3 eigenvalue_inertia(const HermitianMatrix& m, const Tolerance& tol) {
  const double threshold = tol.threshold(m.size(), m.norm_inf());
  Inertia3 inertia;
  for (double v : symmetric_eigenvalues(m)) {
    if (std::abs(v) <= threshold) {
      ++inertia.n_zero;
    } else if (v > 0) {
      ++inertia.n_plus;
    } else {
      ++inertia.n_minus;
    }
  }
  return inertia;
}

std::vector<Complex> general_eigenvalues(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("general_eigenvalues expects a square matrix");
  Eigen::EigenSolver<RealMatrix> solver;
  solver.setMaxIterations(kSweepsPerRow * std::max<Index>(1, m.rows()));
  solver.compute(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hessenberg QR did not converge within 30*n iterations");
  }
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<Complex> general_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("general_eigenvalues expects a square matrix");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.setMaxIterations(kSweepsPerRow * std::max<Index>(1, m.rows()));
  solver.compute(m, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("complex Hessenberg QR did not converge within 30*n iterations");
  }
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double rank_threshold(Index n, double norm2, const Tolerance& tol) {
  return tol.relative(n) * std::max(1.0, norm2) * static_cast<double>(n) + tol.absolute_floor;
}

int numeric_rank(const RealMatrix& m, const Tolerance& tol) { return rank_from_singular_values(m, tol); }

int numeric_rank(const ComplexMatrix& m, const Tolerance& tol) { return rank_from_singular_values(m, tol); }

int numeric_rank(const HermitianMatrix& m, const Tolerance& tol) {
  const auto values = symmetric_eigenvalues(m);
  double norm2 = 0.0;
  for (double v : values) norm2 = std::max(norm2, std::abs(v));
  const double threshold = rank_threshold(m.size(), norm2, tol);
  return static_cast<int>(
      std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v) > threshold; }));
}

}  // namespace sylvester
