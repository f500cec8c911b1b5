#include "sylvester/matcore.hpp"

#include <algorithm>
#include <stdexcept>

#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

template <class M>
void check_square(const M& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InputError("Hermitian matrix must be square with n >= 1, got " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw InputError("matrix has non-finite entries");
}

template <class M>
M symmetrized(M m) {
  check_square(m);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > HermitianMatrix::kSymmetryTolerance * scale) {
    throw InputError("matrix is not Hermitian (max |M - M*| = " + std::to_string(asym) + ")");
  }
  M sym = (m + m.adjoint()) * 0.5;
  // (M + M*)/2 is exact off the diagonal only up to rounding order; mirror the
  // lower triangle to make the stored entries exactly Hermitian.
  for (Index j = 0; j < sym.cols(); ++j) {
    for (Index i = j + 1; i < sym.rows(); ++i) sym(j, i) = Eigen::numext::conj(sym(i, j));
    sym(j, j) = Eigen::numext::real(sym(j, j));
  }
  return sym;
}

}  // namespace

HermitianMatrix::HermitianMatrix(RealMatrix m) : storage_(symmetrized(std::move(m))) {}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : storage_(symmetrized(std::move(m))) {}

HermitianMatrix HermitianMatrix::zero(Index n, ScalarKind kind) {
  if (kind == ScalarKind::real) return HermitianMatrix(RealMatrix(RealMatrix::Zero(n, n)));
  return HermitianMatrix(ComplexMatrix(ComplexMatrix::Zero(n, n)));
}

HermitianMatrix HermitianMatrix::identity(Index n) { return HermitianMatrix(RealMatrix(RealMatrix::Identity(n, n))); }

Index HermitianMatrix::size() const {
  return visit([](const auto& m) { return m.rows(); });
}

ScalarKind HermitianMatrix::scalar_kind() const {
  return std::holds_alternative<RealMatrix>(storage_) ? ScalarKind::real : ScalarKind::complex;
}

const RealMatrix& HermitianMatrix::real() const {
  if (!is_real()) throw std::logic_error("HermitianMatrix::real() on complex matrix");
  return std::get<RealMatrix>(storage_);
}

const ComplexMatrix& HermitianMatrix::complex() const {
  if (is_real()) throw std::logic_error("HermitianMatrix::complex() on real matrix");
  return std::get<ComplexMatrix>(storage_);
}

ComplexMatrix HermitianMatrix::to_complex() const {
  if (is_real()) return real().cast<Complex>();
  return complex();
}

Complex HermitianMatrix::operator()(Index i, Index j) const {
  return visit([&](const auto& m) { return Complex(m(i, j)); });
}

double HermitianMatrix::norm_inf() const {
  return visit([](const auto& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); });
}

bool HermitianMatrix::is_exactly_hermitian() const {
  return visit([](const auto& m) {
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = j; i < m.rows(); ++i) {
        if (m(i, j) != Eigen::numext::conj(m(j, i))) return false;
      }
    }
    return true;
  });
}

HermitianMatrix HermitianMatrix::combine(double alpha, const HermitianMatrix& x, double beta,
                                         const HermitianMatrix& y) {
  if (x.size() != y.size()) throw InputError("dimension mismatch in Hermitian combination");
  if (x.is_real() && y.is_real()) return HermitianMatrix(RealMatrix(alpha * x.real() + beta * y.real()));
  return HermitianMatrix(ComplexMatrix(alpha * x.to_complex() + beta * y.to_complex()));
}

HermitianMatrix HermitianMatrix::operator-() const { return combine(-1.0, *this, 0.0, *this); }

HermitianMatrix HermitianMatrix::congruence(const RealMatrix& x) const {
  if (x.rows() != size() || x.cols() != size()) throw InputError("congruence: dimension mismatch");
  if (is_real()) return HermitianMatrix(RealMatrix(x.transpose() * real() * x));
  return HermitianMatrix(ComplexMatrix(x.transpose().cast<Complex>() * complex() * x.cast<Complex>()));
}

HermitianMatrix HermitianMatrix::congruence(const ComplexMatrix& x) const {
  if (x.rows() != size() || x.cols() != size()) throw InputError("congruence: dimension mismatch");
  return HermitianMatrix(ComplexMatrix(x.adjoint() * to_complex() * x));
}

bool operator==(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.scalar_kind() != y.scalar_kind() || x.size() != y.size()) return false;
  if (x.is_real()) return x.real() == y.real();
  return x.complex() == y.complex();
}

Pencil::Pencil(HermitianMatrix a, HermitianMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) {
    throw InputError("pencil dimensions differ: " + std::to_string(a_.size()) + " vs " +
                     std::to_string(b_.size()));
  }
}

HermitianMatrix Pencil::at(double t) const { return HermitianMatrix::combine(1.0, a_, -t, b_); }

MatrixPolynomial::MatrixPolynomial(std::vector<HermitianMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw InputError("matrix polynomial needs degree >= 1");
  const Index n = coeffs_.front().size();
  for (const auto& c : coeffs_) {
    if (c.size() != n) throw InputError("matrix polynomial coefficients differ in dimension");
  }
}

}  // namespace sylvester
