#include "sylvester/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "sylvester/errors.hpp"
#include "sylvester/oracle.hpp"

namespace sylvester {

namespace {

CountRange range_of(const Bound& b) { return {b.lower, b.upper}; }

void require_ordered(double a, double b) {
  if (std::isnan(a) || std::isnan(b) || !(a < b)) {
    throw std::invalid_argument("interval endpoints must satisfy a < b (got a = " + std::to_string(a) +
                                ", b = " + std::to_string(b) + ")");
  }
}

int default_k(const Inertia3& ib) { return ib.size() - std::max(ib.n_plus, ib.n_minus); }

std::vector<int> parity_range(int base, int k, int n) {
  std::vector<int> out;
  for (int h = 0; h <= k; ++h) {
    const int c = base + 2 * h;
    if (c >= 0 && c <= n) out.push_back(c);
  }
  return out;
}

// Intersect the parity candidates with the inertia-only range and tighten the
// range to the candidates' span.
void apply_parity(IntervalReport& r, int base, int k, int n) {
  std::vector<int> set;
  for (int c : parity_range(base, k, n)) {
    if (r.count_open_mobius.contains(c)) set.push_back(c);
  }
  if (set.empty()) {
    r.notes.emplace_back("parity: no candidate inside the inertia range (numerically inconsistent inertias)");
    r.parity_set = std::move(set);
    return;
  }
  r.count_open_interval.lower = std::max(r.count_open_interval.lower, set.front());
  r.count_open_interval.upper = std::min(r.count_open_interval.upper, set.back());
  r.parity_set = std::move(set);
}

void fill_common(IntervalReport& r, const BoundsReport& rep) {
  r.count_open_mobius = range_of(rep.n_plus);
  r.count_open_interval = r.count_open_mobius;
  r.count_complex = range_of(rep.n_complex);
}

}  // namespace

Pencil mobius_pair(const Pencil& p, double a, double b) {
  require_ordered(a, b);
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("mobius_pair needs finite endpoints");
  return {p.at(a), HermitianMatrix::combine(b, p.b(), -1.0, p.a())};
}

IntervalReport interval_bounds_from_inertia(const Inertia3& at_a, const Inertia3& at_b, const Inertia3& ib,
                                            double a, double b, int normal_rank) {
  require_ordered(a, b);
  const int n = at_a.size();
  const Inertia3 d = at_b.negated();  // bB - A
  const BoundsReport rep = pencil_bounds(at_a, d, n);

  IntervalReport r;
  r.a = a;
  r.b = b;
  fill_common(r, rep);
  r.count_at_a = range_of(rep.n_zero);
  r.count_at_b = range_of(rep.n_infinite);
  r.count_outside_or_infinite = range_of(rep.n_minus);
  r.closed_interval_lower =
      std::max(std::abs(at_a.n_plus - at_b.n_plus), std::abs(at_a.n_minus - at_b.n_minus));
  r.inertia_a = at_a;
  r.inertia_b = d;
  r.normal_rank = normal_rank;
  r.a_is_eigenvalue = at_a.n_zero > n - normal_rank;
  r.b_is_eigenvalue = at_b.n_zero > n - normal_rank;
  if (r.a_is_eigenvalue) r.notes.emplace_back("a is an eigenvalue: n0(A - aB) exceeds n - r");
  if (r.b_is_eigenvalue) r.notes.emplace_back("b is an eigenvalue: n0(A - bB) exceeds n - r");

  const int k = default_k(ib);
  if (r.a_is_eigenvalue || r.b_is_eigenvalue) {
    r.notes.emplace_back("parity: skipped, an endpoint is an eigenvalue");
  } else if (n < 2 * k) {
    r.notes.emplace_back("parity: skipped, B is too far from definite (n < 2k, k = " + std::to_string(k) + ")");
  } else {
    apply_parity(r, std::abs(at_a.n_plus - at_b.n_plus), k, n);
  }
  return r;
}

IntervalReport interval_bounds(const Pencil& p, double a, double b, const Tolerance& tol, std::uint64_t seed) {
  require_ordered(a, b);
  if (std::isinf(b) && std::isinf(a)) throw std::invalid_argument("at most one endpoint may be infinite");
  if (std::isinf(b)) return half_line_bounds(p, a, Side::above, tol, seed);
  if (std::isinf(a)) return half_line_bounds(p, b, Side::below, tol, seed);
  return interval_bounds_from_inertia(ldlt_inertia(p.at(a), tol), ldlt_inertia(p.at(b), tol),
                                      ldlt_inertia(p.b(), tol), a, b, normal_rank(p, seed, tol));
}

IntervalReport half_line_bounds(const Pencil& p, double t, Side side, const Tolerance& tol, std::uint64_t seed) {
  if (!std::isfinite(t)) throw std::invalid_argument("half-line split point must be finite");
  const int n = static_cast<int>(p.size());
  const Inertia3 is = ldlt_inertia(p.at(t), tol);
  const Inertia3 ib = ldlt_inertia(p.b(), tol);
  const int r = normal_rank(p, seed, tol);
  const BoundsReport rep = pencil_bounds(is, ib, n);

  IntervalReport out;
  fill_common(out, rep);
  out.normal_rank = r;
  const bool t_eig = is.n_zero > n - r;
  const bool inf_eig = ib.n_zero > n - r;
  const bool b_regular = ib.n_zero == 0;

  // At +-inf, A - sB has the inertia of -B (s -> +inf) or B (s -> -inf).
  int base = 0;
  if (side == Side::above) {
    out.a = t;
    out.b = INFINITY;
    out.count_open_interval = out.count_open_mobius = range_of(rep.n_plus);
    out.count_at_a = range_of(rep.n_zero);
    out.count_at_b = range_of(rep.n_infinite);
    out.count_outside_or_infinite = range_of(rep.n_minus);
    out.inertia_a = is;
    out.inertia_b = ib;
    out.a_is_eigenvalue = t_eig;
    out.b_is_eigenvalue = inf_eig;
    base = std::abs(is.n_plus - ib.n_minus);
    if (b_regular) out.closed_interval_lower = std::max(base, std::abs(is.n_minus - ib.n_plus));
  } else {
    out.a = -INFINITY;
    out.b = t;
    out.count_open_interval = out.count_open_mobius = range_of(rep.n_minus);
    out.count_at_a = range_of(rep.n_infinite);
    out.count_at_b = range_of(rep.n_zero);
    out.count_outside_or_infinite = range_of(rep.n_plus);
    out.inertia_a = ib;
    out.inertia_b = is.negated();
    out.a_is_eigenvalue = inf_eig;
    out.b_is_eigenvalue = t_eig;
    base = std::abs(ib.n_plus - is.n_plus);
    if (b_regular) out.closed_interval_lower = std::max(base, std::abs(ib.n_minus - is.n_minus));
  }
  if (!b_regular) {
    out.closed_interval_lower = out.count_open_mobius.lower;
    out.notes.emplace_back("B is singular: closed-interval bound falls back to the open-interval lower bound");
  }
  out.notes.emplace_back("outside count excludes infinity, which is reported as the count at the infinite end");
  if (t_eig) out.notes.emplace_back("t is an eigenvalue: n0(A - tB) exceeds n - r");

  const int k = default_k(ib);
  if (t_eig || !b_regular) {
    out.notes.emplace_back("parity: skipped, t or infinity is an eigenvalue");
  } else if (n < 2 * k) {
    out.notes.emplace_back("parity: skipped, B is too far from definite (n < 2k, k = " + std::to_string(k) + ")");
  } else {
    apply_parity(out, base, k, n);
  }
  return out;
}

BoundsReport near_definite_bounds(const Inertia3& ia, const Inertia3& ib, int n) {
  BoundsReport rep = pencil_bounds(ia, ib, n);
  const int k = n - ib.n_plus;
  if (n - k < std::abs(ia.n_minus - ia.n_plus)) {
    rep.notes.emplace_back("near-definite: hypothesis n - k >= |n-(A) - n+(A)| fails (k = " + std::to_string(k) +
                           "); general bounds returned");
    return rep;
  }
  auto set = [n](Bound& b, int lower, const char* lower_src, int upper, const char* upper_src) {
    b = Bound{std::max(lower, 0), std::min(upper, n), lower < 0 ? "trivial: 0" : lower_src,
              upper > n ? "trivial: n" : upper_src};
  };
  set(rep.n_plus, ia.n_plus - k, "n+(A) - k", ia.n_plus + k, "n+(A) + k");
  set(rep.n_minus, ia.n_minus - k, "n-(A) - k", ia.n_minus + k, "n-(A) + k");
  set(rep.n_real, n - 2 * k, "n - 2k", n, "n");
  rep.notes.emplace_back("near-definite: k = " + std::to_string(k));
  return rep;
}

ParityResult parity_counts(const Pencil& p, double a, double b, const Tolerance& tol, std::optional<int> k,
                           std::uint64_t seed) {
  require_ordered(a, b);
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("parity_counts needs finite endpoints");
  const int n = static_cast<int>(p.size());
  const int r = normal_rank(p, seed, tol);
  const Inertia3 at_a = ldlt_inertia(p.at(a), tol);
  const Inertia3 at_b = ldlt_inertia(p.at(b), tol);
  if (at_a.n_zero > n - r) throw InputError("a = " + std::to_string(a) + " is an eigenvalue of the pencil");
  if (at_b.n_zero > n - r) throw InputError("b = " + std::to_string(b) + " is an eigenvalue of the pencil");

  ParityResult out;
  const int computed = default_k(ldlt_inertia(p.b(), tol));
  out.k = k.value_or(computed);
  out.k_overridden = k.has_value() && *k != computed;
  if (out.k < 0 || n < 2 * out.k) {
    throw InputError("parity law needs n >= 2k (n = " + std::to_string(n) + ", k = " + std::to_string(out.k) + ")");
  }
  out.base = std::abs(at_a.n_plus - at_b.n_plus);
  out.counts = parity_range(out.base, out.k, n);
  return out;
}

CountRange geometric_interval_bounds(const Pencil& p, double a, double b, const Tolerance& tol,
                                     std::optional<int> k, std::uint64_t seed) {
  const ParityResult pr = parity_counts(p, a, b, tol, k, seed);
  return {pr.base, std::min(pr.base + 2 * pr.k, static_cast<int>(p.size()))};
}

std::vector<IntervalReport> slice_spectrum(const Pencil& p, const std::vector<double>& grid, const Tolerance& tol,
                                           std::uint64_t seed) {
  if (grid.size() < 2) throw std::invalid_argument("slice grid needs at least two points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw std::invalid_argument("slice grid points must be finite");
    if (i > 0 && !(grid[i - 1] < grid[i])) throw std::invalid_argument("slice grid must be strictly ascending");
  }
  const Inertia3 ib = ldlt_inertia(p.b(), tol);
  const int r = normal_rank(p, seed, tol);
  std::vector<Inertia3> at;
  at.reserve(grid.size());
  for (double t : grid) at.push_back(ldlt_inertia(p.at(t), tol));

  std::vector<IntervalReport> out;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    out.push_back(interval_bounds_from_inertia(at[i], at[i + 1], ib, grid[i], grid[i + 1], r));
  }
  return out;
}

std::string slices_to_csv(const std::vector<IntervalReport>& reports) {
  std::ostringstream os;
  os << "a,b,lower,upper,parity_set\n";
  char buf[64];
  for (const auto& r : reports) {
    std::snprintf(buf, sizeof buf, "%.17g", r.a);
    os << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", r.b);
    os << buf << ',' << r.count_open_interval.lower << ',' << r.count_open_interval.upper << ',';
    if (r.parity_set) {
      for (std::size_t i = 0; i < r.parity_set->size(); ++i) os << (i ? ";" : "") << (*r.parity_set)[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sylvester
