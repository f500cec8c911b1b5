#include "families.hpp"

#include <Eigen/QR>

namespace sylvester::fam {

int uniform_int(int lo, int hi, Rng& rng) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(double lo, double hi, Rng& rng) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

namespace {

RealMatrix gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal;
  RealMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

std::vector<double> layout(const Inertia3& in, Rng& rng) {
  std::vector<double> d;
  for (int i = 0; i < in.n_plus; ++i) d.push_back(uniform_real(0.5, 2.0, rng));
  for (int i = 0; i < in.n_zero; ++i) d.push_back(0.0);
  for (int i = 0; i < in.n_minus; ++i) d.push_back(-uniform_real(0.5, 2.0, rng));
  return d;
}

}  // namespace

RealMatrix random_orthogonal(Index n, Rng& rng) {
  Eigen::HouseholderQR<RealMatrix> qr(gaussian(n, n, rng));
  return qr.householderQ() * RealMatrix::Identity(n, n);
}

HermitianMatrix random_with_inertia(const Inertia3& in, Rng& rng) {
  const Index n = in.size();
  const auto d = layout(in, rng);
  const RealMatrix q = random_orthogonal(n, rng);
  const Eigen::VectorXd dv = Eigen::Map<const Eigen::VectorXd>(d.data(), n);
  return HermitianMatrix(RealMatrix(q * dv.asDiagonal() * q.transpose()));
}

HermitianMatrix random_complex_with_inertia(const Inertia3& in, Rng& rng) {
  const Index n = in.size();
  const auto d = layout(in, rng);
  const ComplexMatrix g = gaussian(n, n, rng).cast<Complex>() + Complex(0, 1) * gaussian(n, n, rng).cast<Complex>();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const Eigen::VectorXcd dv = Eigen::Map<const Eigen::VectorXd>(d.data(), n).cast<Complex>();
  return HermitianMatrix(ComplexMatrix(q * dv.asDiagonal() * q.adjoint()));
}

HermitianMatrix random_shifted(Index n, Rng& rng) {
  const auto seed = rng();
  const Index k = uniform_int(0, static_cast<int>(n), rng);
  return gen_shifted_inertia(gen_random_symmetric(n, seed), k);
}

Pencil random_pencil(Index n, Rng& rng) {
  HermitianMatrix a = random_shifted(n, rng);
  HermitianMatrix b = random_shifted(n, rng);
  return {std::move(a), std::move(b)};
}

RealMatrix random_congruence(Index n, Rng& rng) {
  const RealMatrix u = random_orthogonal(n, rng);
  const RealMatrix v = random_orthogonal(n, rng);
  Eigen::VectorXd s(n);
  for (Index i = 0; i < n; ++i) s(i) = uniform_real(0.5, 2.0, rng);
  return u * s.asDiagonal() * v.transpose();
}

MatrixPolynomial random_hyperbolic(Index n, Rng& rng) {
  const RealMatrix r = gaussian(n, n, rng) / std::sqrt(static_cast<double>(n));
  const RealMatrix s = gaussian(n, n, rng) / std::sqrt(static_cast<double>(n));
  const RealMatrix e = gaussian(n, n, rng);
  const RealMatrix a = -(RealMatrix::Identity(n, n) + r * r.transpose());
  const RealMatrix c = RealMatrix::Identity(n, n) + s * s.transpose();
  const RealMatrix noise = 0.5 * (e + e.transpose());
  // |x*Bx| > 2 sqrt(|x*Ax| x*Cx) for unit x once c - ||E|| exceeds 2 sqrt(||A|| ||C||).
  const double bound = 2.0 * std::sqrt(a.norm() * c.norm()) + noise.norm();
  const RealMatrix b = (bound * uniform_real(1.1, 2.0, rng)) * RealMatrix::Identity(n, n) + noise;
  return MatrixPolynomial({HermitianMatrix(c), HermitianMatrix(b), HermitianMatrix(a)});
}

MatrixPolynomial random_polynomial(Index n, int degree, Rng& rng) {
  std::vector<HermitianMatrix> coeffs;
  for (int i = 0; i <= degree; ++i) coeffs.push_back(gen_random_symmetric(n, rng()));
  return MatrixPolynomial(std::move(coeffs));
}

std::pair<double, double> random_interval(double lo, double hi, Rng& rng) {
  double a = uniform_real(lo, hi, rng);
  double b = uniform_real(lo, hi, rng);
  while (a == b) b = uniform_real(lo, hi, rng);
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::vector<Inertia3> all_triples(int n) {
  std::vector<Inertia3> out;
  for (int p = 0; p <= n; ++p) {
    for (int z = 0; z + p <= n; ++z) out.push_back({p, z, n - p - z});
  }
  return out;
}

}  // namespace sylvester::fam
