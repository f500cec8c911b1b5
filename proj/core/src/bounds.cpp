#include "sylvester/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sylvester {

namespace {

void require_inertia(const Inertia3& in, int n, const char* which) {
  if (n < 1 || !in.valid_for(n)) {
    throw std::invalid_argument(std::string("inertia of ") + which + " (" + std::to_string(in.n_plus) +
                                "," + std::to_string(in.n_zero) + "," + std::to_string(in.n_minus) +
                                ") is inconsistent with n = " + std::to_string(n));
  }
}

Bound clamped(int lower, std::string lower_source, int upper, std::string upper_source, int n) {
  Bound b{lower, upper, std::move(lower_source), std::move(upper_source)};
  if (b.lower < 0) {
    b.lower = 0;
    b.lower_source = "trivial: 0";
  }
  if (b.upper > n) {
    b.upper = n;
    b.upper_source = "trivial: n";
  }
  return b;
}

void tighten_upper(Bound& b, int value, const char* source) {
  if (value < b.upper) {
    b.upper = std::max(value, 0);
    b.upper_source = source;
  }
}

void tighten_lower(Bound& b, int value, const char* source) {
  if (value > b.lower) {
    b.lower = value;
    b.lower_source = source;
  }
}

// Finite real count: the larger of |s(B)|, the sum of the unclamped real-entry
// lower bounds and the sum of the clamped ones (each is a valid lower bound).
void fill_real(BoundsReport& r, int signature_lower, int raw_sum_lower, int upper) {
  Bound& real = r.n_real;
  real = Bound{signature_lower, upper, "|s(B)|", "n - n0(B)"};
  tighten_lower(real, raw_sum_lower, "N_pp + N_pm - 2n + delta");
  tighten_lower(real, r.n_plus.lower + r.n_zero.lower + r.n_minus.lower, "sum of real-entry lower bounds");
  tighten_upper(real, r.n_plus.upper + r.n_zero.upper + r.n_minus.upper, "sum of real-entry upper bounds");
  real = clamped(real.lower, real.lower_source, real.upper, real.upper_source, r.n);
}

void add_definite_notes(BoundsReport& r) {
  const int n = r.n;
  if (r.inertia_b.n_plus == n || r.inertia_b.n_minus == n) r.notes.emplace_back("definite: exact (B definite)");
  if (r.inertia_a.n_plus == n || r.inertia_a.n_minus == n) r.notes.emplace_back("definite: exact (A definite)");
}

}  // namespace

InertiaCombinations InertiaCombinations::of(const Inertia3& ia, const Inertia3& ib) {
  InertiaCombinations c;
  c.n_pp = ia.n_plus + ib.n_plus;
  c.n_mm = ia.n_minus + ib.n_minus;
  c.n_pm = ia.n_plus + ib.n_minus;
  c.n_mp = ia.n_minus + ib.n_plus;
  c.delta = ia.n_zero - ib.n_zero;
  c.N_pp = std::max(c.n_pp, c.n_mm);
  c.N_pm = std::max(c.n_pm, c.n_mp);
  return c;
}

bool BoundsReport::contains(const Inertia5& q) const {
  return n_plus.contains(q.n_plus) && n_zero.contains(q.n_zero) && n_minus.contains(q.n_minus) &&
         n_complex.contains(q.n_complex) && n_infinite.contains(q.n_infinite) && n_real.contains(q.n_real());
}

RawBounds raw_pencil_bounds(const Inertia3& ia, const Inertia3& ib, int n) {
  require_inertia(ia, n, "A");
  require_inertia(ib, n, "B");
  const auto c = InertiaCombinations::of(ia, ib);
  const int abs_delta = std::abs(c.delta);

  RawBounds raw{};
  raw.plus_lower = c.N_pp - n;
  raw.plus_upper = 2 * n - abs_delta - c.N_pm;
  raw.zero_lower = c.delta;
  raw.zero_upper = 3 * n - c.N_pp - c.N_pm - ib.n_zero;
  raw.minus_lower = c.N_pm - n;
  raw.minus_upper = 2 * n - abs_delta - c.N_pp;
  raw.complex_lower = 0;
  raw.complex_upper = 2 * std::min({ia.n_plus, ia.n_minus, ib.n_plus, ib.n_minus});
  raw.infinite_lower = -c.delta;
  raw.infinite_upper = 3 * n - c.N_pp - c.N_pm - ia.n_zero;
  raw.real_lower_signature = std::abs(ib.signature());
  raw.real_lower_sum = c.N_pp + c.N_pm - 2 * n + c.delta;
  raw.real_upper = n - ib.n_zero;
  return raw;
}

BoundsReport pencil_bounds(const Inertia3& ia, const Inertia3& ib, int n) {
  const RawBounds raw = raw_pencil_bounds(ia, ib, n);

  BoundsReport r;
  r.n = n;
  r.inertia_a = ia;
  r.inertia_b = ib;
  r.aux = InertiaCombinations::of(ia, ib);
  r.n_plus = clamped(raw.plus_lower, "N_pp - n", raw.plus_upper, "2n - |delta| - N_pm", n);
  r.n_zero = clamped(raw.zero_lower, "delta", raw.zero_upper, "3n - N_pp - N_pm - n0(B)", n);
  r.n_minus = clamped(raw.minus_lower, "N_pm - n", raw.minus_upper, "2n - |delta| - N_pp", n);
  r.n_complex = clamped(raw.complex_lower, "0", raw.complex_upper, "2 min(n+(A), n-(A), n+(B), n-(B))", n);
  r.n_infinite = clamped(raw.infinite_lower, "-delta", raw.infinite_upper, "3n - N_pp - N_pm - n0(A)", n);
  fill_real(r, raw.real_lower_signature, raw.real_lower_sum, raw.real_upper);
  add_definite_notes(r);
  return r;
}

BoundsReport pencil_bounds_with_rank(const Inertia3& ia, const Inertia3& ib, int n, int r) {
  BoundsReport rep = pencil_bounds(ia, ib, n);
  const int min_rank = std::max(n - ia.n_zero, n - ib.n_zero);
  if (r < min_rank || r > n) {
    throw std::invalid_argument("normal rank " + std::to_string(r) + " outside feasible range [" +
                                std::to_string(min_rank) + ", " + std::to_string(n) + "]");
  }
  const auto& c = rep.aux;
  const int zeros = ia.n_zero + ib.n_zero;

  tighten_upper(rep.n_plus, 3 * n - r - zeros - c.N_pm, "3n - r - n0(A) - n0(B) - N_pm");
  tighten_lower(rep.n_zero, ia.n_zero - n + r, "n0(A) - n + r");
  tighten_upper(rep.n_minus, 3 * n - r - zeros - c.N_pp, "3n - r - n0(A) - n0(B) - N_pp");
  tighten_lower(rep.n_infinite, ib.n_zero - n + r, "n0(B) - n + r");
  for (Bound* b : {&rep.n_plus, &rep.n_zero, &rep.n_minus, &rep.n_complex, &rep.n_infinite}) {
    tighten_upper(*b, r, "r");
  }

  const RawBounds raw = raw_pencil_bounds(ia, ib, n);
  fill_real(rep, raw.real_lower_signature, raw.real_lower_sum, std::min(raw.real_upper, r));
  if (rep.n_real.upper == r && r < raw.real_upper) rep.n_real.upper_source = "r";
  rep.rank_used = r;
  return rep;
}

int real_lower_sharp(const Inertia3& ia, const Inertia3& ib) {
  return std::abs(ib.n_plus - ia.n_minus) + std::abs(ia.n_minus - ib.n_minus);
}

}  // namespace sylvester
