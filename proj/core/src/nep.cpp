#include "sylvester/nep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

// Interior fractions used to probe the rank of F when an endpoint is singular.
constexpr double kSampleFractions[] = {0.1273, 0.2841, 0.4137, 0.5519, 0.6923, 0.8157, 0.9371};

int definite_sign(const Inertia3& in) {
  if (in.n_plus == in.size()) return 1;
  if (in.n_minus == in.size()) return -1;
  return 0;
}

double spectral_norm(const HermitianMatrix& m) {
  const auto v = symmetric_eigenvalues(m);
  return std::max(std::abs(v.front()), std::abs(v.back()));
}

}  // namespace

HermitianMatrix HermitianFunctionSlice::operator()(double t) const {
  HermitianMatrix m = evaluate(t);
  if (m.size() != n) {
    throw InputError("function '" + description + "' returned a " + std::to_string(m.size()) + "x" +
                     std::to_string(m.size()) + " matrix at t = " + std::to_string(t) + ", expected n = " +
                     std::to_string(n));
  }
  return m;
}

HermitianFunctionSlice polynomial_slice(const MatrixPolynomial& p) {
  return {[p](double t) { return poly_eval(p, t); }, p.size(), "matrix polynomial of degree " + std::to_string(p.degree())};
}

HermitianFunctionSlice pencil_slice(const Pencil& p) {
  return {[p](double t) { return p.at(t); }, p.size(), "pencil A - tB"};
}

HermitianMatrix poly_eval(const MatrixPolynomial& p, double t) {
  if (std::isinf(t)) return p.leading();
  HermitianMatrix acc = p.leading();
  for (int i = p.degree() - 1; i >= 0; --i) acc = HermitianMatrix::combine(t, acc, 1.0, p.coeff(i));
  return acc;
}

NepLowerResult nep_interval_lower(const HermitianFunctionSlice& f, double a, double b, const Tolerance& tol,
                                  const std::vector<double>& samples) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("nep_interval_lower needs finite a < b");
  }
  const auto n = static_cast<int>(f.n);
  NepLowerResult out;
  out.at_a = ldlt_inertia(f(a), tol);
  out.at_b = ldlt_inertia(f(b), tol);
  out.rank_baseline = std::max(out.at_a.rank(), out.at_b.rank());
  out.caveat = kRankCaveat;

  if (out.at_a.n_zero > 0 || out.at_b.n_zero > 0) {
    std::vector<double> points = samples;
    for (double s : kSampleFractions) points.push_back(a + s * (b - a));
    for (double t : points) {
      if (out.rank_baseline == n) break;
      out.rank_baseline = std::max(out.rank_baseline, ldlt_inertia(f(t), tol).rank());
    }
  }
  if (out.at_a.rank() < out.rank_baseline) {
    throw InputError("a = " + std::to_string(a) + " is an eigenvalue (rank " + std::to_string(out.at_a.rank()) +
                     " below baseline " + std::to_string(out.rank_baseline) + ")");
  }
  if (out.at_b.rank() < out.rank_baseline) {
    throw InputError("b = " + std::to_string(b) + " is an eigenvalue (rank " + std::to_string(out.at_b.rank()) +
                     " below baseline " + std::to_string(out.rank_baseline) + ")");
  }
  out.lower = std::abs(out.at_a.n_plus - out.at_b.n_plus);
  return out;
}

DefiniteCheck definite_poly_check(const MatrixPolynomial& p, const std::vector<double>& mus, const Tolerance& tol) {
  const int k = p.degree();
  if (static_cast<int>(mus.size()) != k + 1) {
    throw std::invalid_argument("definite_poly_check needs degree + 1 = " + std::to_string(k + 1) + " points");
  }
  for (std::size_t i = 1; i < mus.size(); ++i) {
    if (!(mus[i - 1] < mus[i])) throw std::invalid_argument("definite_poly_check points must be strictly ascending");
  }

  DefiniteCheck out;
  for (int i = 0; i <= k; ++i) {
    const Inertia3 in = ldlt_inertia(poly_eval(p, mus[static_cast<std::size_t>(i)]), tol);
    out.inertias.push_back(in);
    const int s = definite_sign(in);
    out.sign_characteristic.push_back(s);
    const int signed_s = (i % 2 == 0) ? s : -s;
    if (i == 0) out.sign = signed_s;
    if (!out.not_definite_at && (signed_s == 0 || signed_s != out.sign)) out.not_definite_at = i;
  }
  out.definite = !out.not_definite_at.has_value();
  if (out.definite) {
    out.per_interval_count.assign(static_cast<std::size_t>(k), static_cast<int>(p.size()));
  } else {
    out.sign = 0;
  }
  return out;
}

double hyperbolic_radius(const MatrixPolynomial& p) {
  if (p.degree() != 2) throw InputError("hyperbolic_radius needs a quadratic");
  const auto lead = symmetric_eigenvalues(p.coeff(2));
  double min_abs = INFINITY;
  for (double v : lead) min_abs = std::min(min_abs, std::abs(v));
  if (!(min_abs > 0)) throw InputError("leading coefficient is singular");
  return 1.0 + (spectral_norm(p.coeff(1)) + spectral_norm(p.coeff(0))) / min_abs;
}

int hyperbolic_quadratic_count(const MatrixPolynomial& p, double a, double b, const Tolerance& tol) {
  if (p.degree() != 2) throw InputError("hyperbolic_quadratic_count needs a quadratic");
  if (std::isnan(a) || std::isnan(b) || !(a < b)) throw std::invalid_argument("interval endpoints must satisfy a < b");
  const int n = static_cast<int>(p.size());
  if (ldlt_inertia(p.coeff(2), tol).n_minus != n) throw InputError("leading coefficient is not negative definite");
  if (ldlt_inertia(p.coeff(0), tol).n_plus != n) throw InputError("constant coefficient is not positive definite");
  const double m = hyperbolic_radius(p);
  const DefiniteCheck check = definite_poly_check(p, {-m, 0.0, m}, tol);
  if (!check.definite) {
    throw InputError("quadratic is not hyperbolic: P(-M), P(0), P(M) fail to alternate in sign (M = " +
                     std::to_string(m) + ")");
  }

  // Eigenvalues strictly below t and at most t. On (-inf, 0) the curves of
  // P(t) cross from negative to positive exactly n times, on (0, inf) back.
  auto below = [&](double t) {
    if (t == -INFINITY) return 0;
    if (t == INFINITY) return 2 * n;
    if (t == 0.0) return n;
    const Inertia3 in = ldlt_inertia(poly_eval(p, t), tol);
    return t < 0 ? in.n_plus : n + in.n_minus;
  };
  auto at_most = [&](double t) {
    if (t == -INFINITY) return 0;
    if (t == INFINITY) return 2 * n;
    if (t == 0.0) return n;
    const Inertia3 in = ldlt_inertia(poly_eval(p, t), tol);
    return t < 0 ? n - in.n_minus : 2 * n - in.n_plus;
  };
  return below(b) - at_most(a);
}

EndpointLower poly_endpoint_lower(const MatrixPolynomial& p, const Tolerance& tol) {
  const Inertia3 i0 = ldlt_inertia(p.trailing(), tol);
  const Inertia3 ik = ldlt_inertia(p.leading(), tol);
  EndpointLower out;
  out.positive_lower = std::abs(i0.n_plus - ik.n_plus);
  out.negative_lower = p.degree() % 2 == 0 ? std::abs(i0.n_plus - ik.n_plus) : std::abs(i0.n_plus - ik.n_minus);
  return out;
}

Trace trace_eigenfunctions(const HermitianFunctionSlice& f, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("trace grid is empty");
  Trace out;
  out.grid = grid;
  for (double t : grid) {
    try {
      out.curves.push_back(symmetric_eigenvalues(f(t)));
    } catch (const NumericalError& e) {
      throw NumericalError(std::string(e.what()) + " at t = " + std::to_string(t));
    }
  }
  return out;
}

std::string trace_to_csv(const Trace& t) {
  std::ostringstream os;
  const std::size_t n = t.curves.empty() ? 0 : t.curves.front().size();
  os << 't';
  for (std::size_t j = 1; j <= n; ++j) os << ",lambda_" << j;
  os << '\n';
  char buf[64];
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", t.grid[i]);
    os << buf;
    for (double v : t.curves[i]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << ',' << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sylvester
