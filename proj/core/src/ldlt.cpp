// Bunch-Kaufman symmetric indefinite factorization, used for inertia.

#include <cmath>
#include <numeric>

#include "sylvester/eigcore.hpp"

namespace sylvester {

namespace {

void classify(double value, double threshold, Inertia3& inertia) {
  if (std::abs(value) <= threshold) {
    ++inertia.n_zero;
  } else if (value > 0) {
    ++inertia.n_plus;
  } else {
    ++inertia.n_minus;
  }
}

template <class Scalar>
LdltFactorization<Scalar> factor(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> w,
                                 double threshold) {
  using std::abs;
  using Matrix = typename LdltFactorization<Scalar>::Matrix;
  const Index n = w.rows();
  const double alpha = (1.0 + std::sqrt(17.0)) / 8.0;

  LdltFactorization<Scalar> f;
  f.perm.resize(static_cast<std::size_t>(n));
  std::iota(f.perm.begin(), f.perm.end(), Index{0});
  f.lower = Matrix::Identity(n, n);
  f.block_diagonal = Matrix::Zero(n, n);

  Index k = 0;
  // Symmetric interchange of rows/columns i and j of the active matrix; rows
  // of the already computed part of L follow along.
  auto interchange = [&](Index i, Index j) {
    if (i == j) return;
    w.row(i).swap(w.row(j));
    w.col(i).swap(w.col(j));
    std::swap(f.perm[static_cast<std::size_t>(i)], f.perm[static_cast<std::size_t>(j)]);
    if (k > 0) f.lower.block(i, 0, 1, k).swap(f.lower.block(j, 0, 1, k));
  };

  auto pivot_one = [&] {
    const double d = Eigen::numext::real(w(k, k));
    f.block_diagonal(k, k) = Scalar(d);
    f.block_sizes.push_back(1);
    classify(d, threshold, f.inertia);
    const Index m = n - k - 1;
    if (m > 0 && d != 0.0) {
      const auto c = w.col(k).tail(m).eval();
      f.lower.col(k).tail(m) = c / d;
      w.bottomRightCorner(m, m).noalias() -= (c / d) * c.adjoint();
    }
    k += 1;
  };

  auto pivot_two = [&] {
    const Eigen::Matrix<Scalar, 2, 2> e = w.template block<2, 2>(k, k);
    const double e00 = Eigen::numext::real(e(0, 0));
    const double e11 = Eigen::numext::real(e(1, 1));
    const double off = abs(e(1, 0));
    const double det = e00 * e11 - off * off;
    Eigen::Matrix<Scalar, 2, 2> inv;
    inv << Scalar(e11), -e(0, 1), -e(1, 0), Scalar(e00);
    inv /= det;

    f.block_diagonal.template block<2, 2>(k, k) = e;
    f.block_sizes.push_back(2);
    const double mean = 0.5 * (e00 + e11);
    const double radius = std::hypot(0.5 * (e00 - e11), off);
    classify(mean + radius, threshold, f.inertia);
    classify(mean - radius, threshold, f.inertia);

    const Index m = n - k - 2;
    if (m > 0) {
      const Matrix c = w.block(k + 2, k, m, 2);
      const Matrix l = c * inv;
      f.lower.block(k + 2, k, m, 2) = l;
      w.bottomRightCorner(m, m).noalias() -= l * c.adjoint();
    }
    k += 2;
  };

  while (k < n) {
    const double diag = abs(Eigen::numext::real(w(k, k)));
    if (k == n - 1) {
      pivot_one();
      continue;
    }

    Index r = 0;
    const double colmax = w.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&r);
    r += k + 1;

    if (std::max(diag, colmax) <= threshold) {
      // Numerically zero column: deflate without elimination.
      f.block_diagonal(k, k) = Scalar(0);
      f.block_sizes.push_back(1);
      ++f.inertia.n_zero;
      k += 1;
      continue;
    }

    if (diag >= alpha * colmax) {
      pivot_one();
      continue;
    }

    double rowmax = 0.0;
    for (Index j = k; j < n; ++j) {
      if (j != r) rowmax = std::max(rowmax, abs(w(r, j)));
    }

    if (diag * rowmax >= alpha * colmax * colmax) {
      pivot_one();
    } else if (abs(Eigen::numext::real(w(r, r))) >= alpha * rowmax) {
      interchange(k, r);
      pivot_one();
    } else {
      interchange(k + 1, r);
      pivot_two();
    }
  }
  return f;
}

}  // namespace

LdltFactorization<double> bunch_kaufman(const RealMatrix& m, double zero_threshold) {
  return factor<double>(m, zero_threshold);
}

LdltFactorization<Complex> bunch_kaufman(const ComplexMatrix& m, double zero_threshold) {
  return factor<Complex>(m, zero_threshold);
}

Inertia3 ldlt_inertia(const HermitianMatrix& m, const Tolerance& tol) {
  const double threshold = tol.threshold(m.size(), m.norm_inf());
  return m.visit([&](const auto& mat) { return bunch_kaufman(mat, threshold).inertia; });
}

}  // namespace sylvester
