#include "sylvester/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGoodShiftRcond = 1e-8;
constexpr double kLastResortRcond = 1e-13;
constexpr double kShiftLadder[] = {0.317, -1.114, 2.503, -0.689, 1.871, -2.237, 0.0923, 3.618, -4.409, 0.553};
constexpr double kCoarseRadii[] = {1e-4, 1e-3, 1e-2};
constexpr int kRankShifts = 3;

std::vector<Complex> random_shifts(double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::vector<Complex> shifts;
  for (int i = 0; i < kRankShifts; ++i) shifts.push_back(std::polar(radius, angle(rng)));
  return shifts;
}

template <class Mat>
double inf_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

// Eigenvalues of x - z y by shift-and-invert: mu = eig((x - sigma y)^-1 y),
// lambda = sigma + 1/mu. nullopt marks an infinite eigenvalue.
template <class Mat>
std::vector<std::optional<Complex>> shift_invert(const Mat& x, const Mat& y, const Tolerance& tol) {
  const Index n = x.rows();
  if (n == 0) return {};
  const double scale = (1.0 + inf_norm(x)) / (1.0 + inf_norm(y));

  double best_rcond = -1.0;
  double best_sigma = 0.0;
  for (double c : kShiftLadder) {
    const double sigma = c * scale;
    Eigen::PartialPivLU<Mat> lu(Mat(x - sigma * y));
    const double rc = lu.rcond();
    if (std::isfinite(rc) && rc > best_rcond) {
      best_rcond = rc;
      best_sigma = sigma;
    }
    if (rc > kGoodShiftRcond) break;
  }
  if (!(best_rcond > kLastResortRcond)) {
    throw SingularPencilError("no shift sigma makes A - sigma B invertible; the pencil is singular or nearly so");
  }

  Eigen::PartialPivLU<Mat> lu(Mat(x - best_sigma * y));
  const Mat m = lu.solve(y);
  const double infinite_threshold = tol.relative(n) * std::max(1.0, inf_norm(m));

  std::vector<std::optional<Complex>> out;
  for (const Complex& mu : general_eigenvalues(m)) {
    if (std::abs(mu) <= infinite_threshold) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(best_sigma + 1.0 / mu);
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool close(const Complex& u, const Complex& v, double radius) {
  return std::abs(u - v) <= radius * (1.0 + std::max(std::abs(u), std::abs(v)));
}

Complex centroid(const std::vector<Complex>& values, const std::vector<std::size_t>& members) {
  Complex sum = 0.0;
  for (std::size_t i : members) sum += values[i];
  return sum / static_cast<double>(members.size());
}

std::vector<std::vector<std::size_t>> groups_of(UnionFind& uf, std::size_t count) {
  std::vector<std::vector<std::size_t>> by_root(count);
  for (std::size_t i = 0; i < count; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  for (auto& g : by_root) {
    if (!g.empty()) groups.push_back(std::move(g));
  }
  return groups;
}

// Fine single-linkage clustering, then coarser passes that merge only where
// the pencil really loses rank at the merged centroid (defective eigenvalues
// scatter like eps^(1/size)).
template <class RankDrop>
std::vector<std::vector<std::size_t>> cluster(const std::vector<Complex>& values, RankDrop&& rank_drop) {
  const std::size_t m = values.size();
  UnionFind fine(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (close(values[i], values[j], kMergeRadius)) fine.unite(i, j);
    }
  }
  auto groups = groups_of(fine, m);

  for (double radius : kCoarseRadii) {
    const std::size_t g = groups.size();
    UnionFind coarse(g);
    for (std::size_t a = 0; a < g; ++a) {
      for (std::size_t b = a + 1; b < g; ++b) {
        bool linked = false;
        for (std::size_t i : groups[a]) {
          for (std::size_t j : groups[b]) linked = linked || close(values[i], values[j], radius);
        }
        if (linked) coarse.unite(a, b);
      }
    }
    std::vector<std::vector<std::size_t>> next;
    for (const auto& component : groups_of(coarse, g)) {
      if (component.size() == 1) {
        next.push_back(groups[component.front()]);
        continue;
      }
      std::vector<std::size_t> merged;
      for (std::size_t c : component) merged.insert(merged.end(), groups[c].begin(), groups[c].end());
      if (rank_drop(centroid(values, merged)) >= 1) {
        next.push_back(std::move(merged));
      } else {
        for (std::size_t c : component) next.push_back(groups[c]);
      }
    }
    groups = std::move(next);
  }
  return groups;
}

EigenClass classify(const Complex& c) {
  if (std::abs(c.imag()) > 0.5 * kMergeRadius * (1.0 + std::abs(c))) return EigenClass::complex;
  if (std::abs(c.real()) <= kZeroRadius) return EigenClass::zero;
  return c.real() > 0 ? EigenClass::positive : EigenClass::negative;
}

// rank_drop(c): r - rank(F(c)) at a finite point; infinite_drop: r - rank at infinity.
template <class RankDrop>
std::vector<EigenRecord> build_records(const std::vector<std::optional<Complex>>& computed, RankDrop&& rank_drop,
                                       int infinite_drop) {
  std::vector<Complex> finite;
  int infinite = 0;
  for (const auto& v : computed) {
    if (v) {
      finite.push_back(*v);
    } else {
      ++infinite;
    }
  }

  std::vector<EigenRecord> records;
  for (const auto& members : cluster(finite, rank_drop)) {
    const Complex c = centroid(finite, members);
    EigenRecord rec;
    rec.classification = classify(c);
    rec.value = rec.is_real() ? Complex(c.real(), 0.0) : c;
    rec.algebraic_mult = static_cast<int>(members.size());
    rec.geometric_mult = rec.algebraic_mult == 1 ? 1 : std::clamp(rank_drop(c), 1, rec.algebraic_mult);
    records.push_back(rec);
  }
  if (infinite > 0) {
    EigenRecord rec;
    rec.classification = EigenClass::infinite;
    rec.algebraic_mult = infinite;
    rec.geometric_mult = std::clamp(infinite_drop, 1, infinite);
    records.push_back(rec);
  }

  std::sort(records.begin(), records.end(), [](const EigenRecord& x, const EigenRecord& y) {
    if (x.is_infinite() != y.is_infinite()) return y.is_infinite();
    if (x.is_infinite()) return false;
    if (x.value->real() != y.value->real()) return x.value->real() < y.value->real();
    return x.value->imag() < y.value->imag();
  });
  return records;
}

template <class Mat>
struct Deflated {
  Mat a;
  Mat b;
  int common_kernel = 0;
};

// Restrict to the orthogonal complement of ker A ∩ ker B.
template <class Mat>
Deflated<Mat> deflate_common_kernel(const Mat& a, const Mat& b, const Tolerance& tol) {
  const Index n = a.rows();
  Mat stacked(2 * n, n);
  stacked << a, b;
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double threshold = rank_threshold(n, s.size() > 0 ? s(0) : 0.0, tol);
  const auto rank = static_cast<Index>((s.array() > threshold).count());
  if (rank == n) return {a, b, 0};
  const Mat q = svd.matrixV().leftCols(rank);
  return {Mat(q.adjoint() * a * q), Mat(q.adjoint() * b * q), static_cast<int>(n - rank)};
}

template <class Mat>
int rank_of_combination(const Mat& a, const Mat& b, const Complex& z, const Tolerance& tol) {
  const ComplexMatrix m = a.template cast<Complex>() - z * b.template cast<Complex>();
  return numeric_rank(m, tol);
}

template <class Mat>
OracleReport oracle_impl(const Mat& a, const Mat& b, int normal_rank_value, const Tolerance& tol) {
  const auto n = static_cast<int>(a.rows());
  OracleReport report;
  report.n = n;
  report.normal_rank = normal_rank_value;

  auto d = deflate_common_kernel(a, b, tol);
  report.common_kernel = d.common_kernel;
  const int size = n - d.common_kernel;
  if (normal_rank_value < size) {
    throw SingularPencilError("pencil is singular (normal rank " + std::to_string(normal_rank_value) + " < " +
                              std::to_string(size) +
                              " after removing the common kernel); eigenvalues are not computed for singular "
                              "pencils, use rank-aware bounds instead (bounds --rank " +
                              std::to_string(normal_rank_value) + ")");
  }
  if (size == 0) return report;

  const auto computed = shift_invert(d.a, d.b, tol);
  auto rank_drop = [&](const Complex& c) { return size - rank_of_combination(d.a, d.b, c, tol); };
  int infinite_drop = 0;
  if (std::count(computed.begin(), computed.end(), std::nullopt) > 1) {
    infinite_drop = size - numeric_rank(d.b, tol);
  }
  report.records = build_records(computed, rank_drop, infinite_drop);
  report.inertia = inertia_of(report.records);
  return report;
}

template <class Mat>
Mat companion_block(const MatrixPolynomial& p, bool leading) {
  const Index n = p.size();
  const int k = p.degree();
  const Index nk = n * k;
  auto coeff = [&](int i) -> Mat {
    if constexpr (std::is_same_v<Mat, RealMatrix>) {
      return p.coeff(i).real();
    } else {
      return p.coeff(i).to_complex();
    }
  };
  Mat m = Mat::Zero(nk, nk);
  if (leading) {
    m.topLeftCorner(n, n) = coeff(k);
    if (k > 1) m.bottomRightCorner(nk - n, nk - n).setIdentity();
    return m;
  }
  for (int j = 0; j < k; ++j) m.block(0, j * n, n, n) = -coeff(k - 1 - j);
  for (int j = 1; j < k; ++j) m.block(j * n, (j - 1) * n, n, n).setIdentity();
  return m;
}

ComplexMatrix poly_at(const MatrixPolynomial& p, const Complex& z) {
  ComplexMatrix acc = p.leading().to_complex();
  for (int i = p.degree() - 1; i >= 0; --i) acc = (z * acc + p.coeff(i).to_complex()).eval();
  return acc;
}

bool all_real(const MatrixPolynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const HermitianMatrix& c) { return c.is_real(); });
}

}  // namespace

std::string to_string(EigenClass c) {
  switch (c) {
    case EigenClass::positive: return "positive";
    case EigenClass::zero: return "zero";
    case EigenClass::negative: return "negative";
    case EigenClass::complex: return "complex";
    case EigenClass::infinite: return "infinite";
  }
  return "unknown";
}

EigenClass eigen_class_from_string(const std::string& s) {
  for (auto c : {EigenClass::positive, EigenClass::zero, EigenClass::negative, EigenClass::complex,
                 EigenClass::infinite}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown eigenvalue class '" + s + "'");
}

int normal_rank(const Pencil& p, std::uint64_t seed, const Tolerance& tol) {
  const ComplexMatrix a = p.a().to_complex();
  const ComplexMatrix b = p.b().to_complex();
  const double radius = 1.0 + p.a().norm_inf() / (1.0 + p.b().norm_inf());
  int r = 0;
  for (const Complex& mu : random_shifts(radius, seed)) r = std::max(r, numeric_rank(ComplexMatrix(a - mu * b), tol));
  return r;
}

int normal_rank(const MatrixPolynomial& p, std::uint64_t seed, const Tolerance& tol) {
  double others = 0.0;
  for (int i = 0; i < p.degree(); ++i) others = std::max(others, p.coeff(i).norm_inf());
  const double radius = 1.0 + others / (1.0 + p.leading().norm_inf());
  int r = 0;
  for (const Complex& mu : random_shifts(radius, seed)) r = std::max(r, numeric_rank(poly_at(p, mu), tol));
  return r;
}

OracleReport pencil_oracle(const Pencil& p, std::uint64_t seed, const Tolerance& tol) {
  const int r = normal_rank(p, seed, tol);
  if (p.is_real()) return oracle_impl(p.a().real(), p.b().real(), r, tol);
  return oracle_impl(p.a().to_complex(), p.b().to_complex(), r, tol);
}

std::vector<EigenRecord> pencil_eigen_records(const Pencil& p, std::uint64_t seed, const Tolerance& tol) {
  return pencil_oracle(p, seed, tol).records;
}

Inertia5 classify_inertia5(const Pencil& p, std::uint64_t seed, const Tolerance& tol) {
  return pencil_oracle(p, seed, tol).inertia;
}

std::vector<std::optional<Complex>> pencil_eigenvalues(const Pencil& p, const Tolerance& tol) {
  if (p.is_real()) return shift_invert(p.a().real(), p.b().real(), tol);
  return shift_invert(p.a().to_complex(), p.b().to_complex(), tol);
}

std::vector<EigenRecord> polynomial_eigen_records(const MatrixPolynomial& p, std::uint64_t seed,
                                                  const Tolerance& tol) {
  const auto n = static_cast<int>(p.size());
  const int r = normal_rank(p, seed, tol);
  if (r < n) {
    throw SingularPencilError("matrix polynomial is singular (normal rank " + std::to_string(r) + " < " +
                              std::to_string(n) + ")");
  }
  std::vector<std::optional<Complex>> computed;
  if (all_real(p)) {
    computed = shift_invert(companion_block<RealMatrix>(p, false), companion_block<RealMatrix>(p, true), tol);
  } else {
    computed =
        shift_invert(companion_block<ComplexMatrix>(p, false), companion_block<ComplexMatrix>(p, true), tol);
  }
  auto rank_drop = [&](const Complex& c) { return n - numeric_rank(poly_at(p, c), tol); };
  const int infinite_drop = n - numeric_rank(p.leading(), tol);
  return build_records(computed, rank_drop, infinite_drop);
}

Pencil quadratic_symmetric_linearization(const MatrixPolynomial& p) {
  if (p.degree() != 2) throw InputError("symmetric linearization needs a quadratic");
  const Index n = p.size();
  auto assemble = [n](const auto& m, const auto& d, const auto& k) {
    using Mat = std::decay_t<decltype(m)>;
    Mat a = Mat::Zero(2 * n, 2 * n);
    Mat b = Mat::Zero(2 * n, 2 * n);
    a.topLeftCorner(n, n) = d;
    a.topRightCorner(n, n) = k;
    a.bottomLeftCorner(n, n) = k;
    b.topLeftCorner(n, n) = -m;
    b.bottomRightCorner(n, n) = k;
    return Pencil(HermitianMatrix(std::move(a)), HermitianMatrix(std::move(b)));
  };
  if (all_real(p)) return assemble(p.coeff(2).real(), p.coeff(1).real(), p.coeff(0).real());
  return assemble(p.coeff(2).to_complex(), p.coeff(1).to_complex(), p.coeff(0).to_complex());
}

Inertia5 inertia_of(const std::vector<EigenRecord>& records) {
  Inertia5 q;
  for (const auto& rec : records) {
    switch (rec.classification) {
      case EigenClass::positive: q.n_plus += rec.algebraic_mult; break;
      case EigenClass::zero: q.n_zero += rec.algebraic_mult; break;
      case EigenClass::negative: q.n_minus += rec.algebraic_mult; break;
      case EigenClass::complex: q.n_complex += rec.algebraic_mult; break;
      case EigenClass::infinite: q.n_infinite += rec.algebraic_mult; break;
    }
  }
  return q;
}

int count_real_in(const std::vector<EigenRecord>& records, double a, double b, bool closed) {
  int count = 0;
  for (const auto& rec : records) {
    if (!rec.is_real()) continue;
    const double x = rec.value->real();
    const bool inside = closed ? (a <= x && x <= b) : (a < x && x < b);
    if (inside) count += rec.algebraic_mult;
  }
  return count;
}

double distance_to_real_spectrum(const std::vector<EigenRecord>& records, double t) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& rec : records) {
    if (rec.is_real()) d = std::min(d, std::abs(rec.value->real() - t));
  }
  return d;
}

}  // namespace sylvester
