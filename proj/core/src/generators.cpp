#include <random>

#include "sylvester/eigcore.hpp"
#include "sylvester/errors.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester {

HermitianMatrix gen_random_symmetric(Index n, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_random_symmetric: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix x(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) x(i, j) = normal(rng);
  }
  return HermitianMatrix(RealMatrix(x + x.transpose()));
}

HermitianMatrix gen_shifted_inertia(const HermitianMatrix& m, Index k) {
  const Index n = m.size();
  if (k < 0 || k > n) {
    throw InputError("gen_shifted_inertia: k = " + std::to_string(k) + " outside [0, " +
                     std::to_string(n) + "]");
  }
  const auto lambda = symmetric_eigenvalues(m);
  double shift = 0.0;
  if (k == 0) {
    shift = lambda.front() - 1.0;
  } else if (k == n) {
    shift = lambda.back() + 1.0;
  } else {
    const double lo = lambda[static_cast<std::size_t>(k - 1)];
    const double hi = lambda[static_cast<std::size_t>(k)];
    if (!(hi > lo)) {
      throw InputError("gen_shifted_inertia: eigenvalues " + std::to_string(k) + " and " +
                       std::to_string(k + 1) + " coincide");
    }
    shift = 0.5 * (lo + hi);
  }
  return HermitianMatrix::combine(1.0, m, -shift, HermitianMatrix::identity(n));
}

namespace {

RealMatrix tridiagonal(const Eigen::VectorXd& diag, double off) {
  const Index n = diag.size();
  RealMatrix t = diag.asDiagonal();
  for (Index i = 0; i + 1 < n; ++i) t(i, i + 1) = t(i + 1, i) = off;
  return t;
}

}  // namespace

MatrixPolynomial gen_spring_quadratic(Index n, double beta) {
  if (n < 2) throw InputError("gen_spring_quadratic: n must be >= 2");
  if (!(beta > 0)) throw InputError("gen_spring_quadratic: beta must be positive");

  Eigen::VectorXd damping_diag = Eigen::VectorXd::Constant(n, 30.0);
  damping_diag(0) = damping_diag(n - 1) = 20.0;
  const RealMatrix damping = beta * tridiagonal(damping_diag, -10.0);
  const RealMatrix stiffness = tridiagonal(Eigen::VectorXd::Constant(n, 15.0), -5.0);

  return MatrixPolynomial({HermitianMatrix(stiffness), HermitianMatrix(damping), HermitianMatrix::identity(n)});
}

Pencil gen_jordan_pair(Index n, double lambda) {
  if (n < 1) throw InputError("gen_jordan_pair: n must be >= 1");
  RealMatrix a = RealMatrix::Zero(n, n);
  RealMatrix b = RealMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    b(i, n - 1 - i) = 1.0;
    a(i, n - 1 - i) = lambda;
    if (i + 2 <= n) a(i, n - 2 - i) = 1.0;
  }
  return {HermitianMatrix(std::move(a)), HermitianMatrix(std::move(b))};
}

}  // namespace sylvester
