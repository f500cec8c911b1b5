// Constructions attaining the lower bounds with equality.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sylvester/bounds.hpp"

namespace sylvester {

namespace {

struct DiagonalPair {
  std::vector<double> a;
  std::vector<double> b;
};

void append(std::vector<double>& d, int count, double value) { d.insert(d.end(), static_cast<std::size_t>(count), value); }

Pencil to_pencil(const DiagonalPair& p) {
  const auto n = static_cast<Index>(p.a.size());
  RealMatrix a = RealMatrix::Zero(n, n);
  RealMatrix b = RealMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    a(i, i) = p.a[static_cast<std::size_t>(i)];
    b(i, i) = p.b[static_cast<std::size_t>(i)];
  }
  return {HermitianMatrix(std::move(a)), HermitianMatrix(std::move(b))};
}

// A-zB, zB-A, B-zA and zA-B share their positive eigenvalue count, so the
// layout is built for a normalized pair with n_pp >= n_mm and
// n+(A) >= n-(B) and then mapped back.
DiagonalPair positive_layout(Inertia3 ia, Inertia3 ib) {
  const bool negate = ia.n_plus + ib.n_plus < ia.n_minus + ib.n_minus;
  if (negate) {
    ia = ia.negated();
    ib = ib.negated();
  }
  const bool swap = ia.n_plus < ib.n_minus;
  if (swap) std::swap(ia, ib);

  DiagonalPair p;
  append(p.a, ia.n_plus, 1.0);
  append(p.a, ia.n_minus, -1.0);
  append(p.a, ia.n_zero, 0.0);
  append(p.b, ib.n_minus, -1.0);
  append(p.b, ib.n_zero, 0.0);
  append(p.b, ib.n_plus, 1.0);

  if (swap) std::swap(p.a, p.b);
  if (negate) {
    for (double& v : p.a) v = -v;
    for (double& v : p.b) v = -v;
  }
  return p;
}

DiagonalPair zero_layout(const Inertia3& ia, const Inertia3& ib) {
  DiagonalPair p;
  append(p.a, ia.n_zero, 0.0);
  append(p.a, ia.n_plus, 1.0);
  append(p.a, ia.n_minus, -1.0);
  append(p.b, ib.n_zero, 0.0);
  append(p.b, ib.n_plus, 1.0);
  append(p.b, ib.n_minus, -1.0);
  return p;
}

RealMatrix block_sum(Index n, const RealMatrix& head, const std::vector<double>& tail) {
  RealMatrix m = RealMatrix::Zero(n, n);
  const Index h = head.rows();
  m.topLeftCorner(h, h) = head;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const auto k = h + static_cast<Index>(i);
    m(k, k) = tail[i];
  }
  return m;
}

// 2, 3, 4, ... times sign, so filler eigenvalues never collide with ±1 or ±i.
std::vector<double> filler(int count, double sign) {
  std::vector<double> d;
  for (int i = 0; i < count; ++i) d.push_back(sign * (2.0 + i));
  return d;
}

}  // namespace

RealMatrix swap_blocks(Index p) {
  RealMatrix r = RealMatrix::Zero(2 * p, 2 * p);
  for (Index i = 0; i < p; ++i) r(2 * i, 2 * i + 1) = r(2 * i + 1, 2 * i) = 1.0;
  return r;
}

RealMatrix sign_blocks(Index p) {
  RealMatrix t = RealMatrix::Zero(2 * p, 2 * p);
  for (Index i = 0; i < p; ++i) {
    t(2 * i, 2 * i) = 1.0;
    t(2 * i + 1, 2 * i + 1) = -1.0;
  }
  return t;
}

std::string to_string(WitnessTarget t) {
  switch (t) {
    case WitnessTarget::plus_lower: return "plus_lower";
    case WitnessTarget::minus_lower: return "minus_lower";
    case WitnessTarget::zero_lower: return "zero_lower";
    case WitnessTarget::infinite_lower: return "infinite_lower";
    case WitnessTarget::complex_lower: return "complex_lower";
    case WitnessTarget::real_lower: return "real_lower";
  }
  return "unknown";
}

WitnessTarget witness_target_from_string(const std::string& s) {
  for (auto t : {WitnessTarget::plus_lower, WitnessTarget::minus_lower, WitnessTarget::zero_lower,
                 WitnessTarget::infinite_lower, WitnessTarget::complex_lower, WitnessTarget::real_lower}) {
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown witness target '" + s + "'");
}

int target_lower_bound(const Inertia3& ia, const Inertia3& ib, WitnessTarget target) {
  const int n = ia.size();
  const RawBounds raw = raw_pencil_bounds(ia, ib, n);
  switch (target) {
    case WitnessTarget::plus_lower: return raw.plus_lower;
    case WitnessTarget::minus_lower: return raw.minus_lower;
    case WitnessTarget::zero_lower: return raw.zero_lower;
    case WitnessTarget::infinite_lower: return raw.infinite_lower;
    case WitnessTarget::complex_lower: return raw.complex_lower;
    case WitnessTarget::real_lower: return raw.real_lower_signature;
  }
  throw std::invalid_argument("unknown witness target");
}

Pencil witness_pair(const Inertia3& ia, const Inertia3& ib, WitnessTarget target) {
  const int n = ia.size();
  const int bound = target_lower_bound(ia, ib, target);
  if (bound < 0 || bound > n) {
    throw std::invalid_argument("lower bound for " + to_string(target) + " is trivial (" + std::to_string(bound) +
                                "); nothing to witness");
  }

  switch (target) {
    case WitnessTarget::plus_lower:
    case WitnessTarget::complex_lower:
      return to_pencil(positive_layout(ia, ib));
    case WitnessTarget::minus_lower: {
      // n-(A, B) = n+(A, -B).
      DiagonalPair p = positive_layout(ia, ib.negated());
      for (double& v : p.b) v = -v;
      return to_pencil(p);
    }
    case WitnessTarget::zero_lower:
      return to_pencil(zero_layout(ia, ib));
    case WitnessTarget::infinite_lower: {
      // Swapping A and B exchanges zero and infinite eigenvalues.
      DiagonalPair p = zero_layout(ib, ia);
      std::swap(p.a, p.b);
      return to_pencil(p);
    }
    case WitnessTarget::real_lower: {
      const int p = std::min(ib.n_plus, ib.n_minus);
      const int s = ib.signature();
      const double sign = s > 0 ? 1.0 : -1.0;
      std::vector<double> a_tail = filler(std::abs(s), 1.0);
      const std::vector<double> d2 = filler(ib.n_zero, -1.0);
      a_tail.insert(a_tail.end(), d2.begin(), d2.end());
      std::vector<double> b_tail(static_cast<std::size_t>(std::abs(s)), sign);
      b_tail.resize(b_tail.size() + static_cast<std::size_t>(ib.n_zero), 0.0);
      return {HermitianMatrix(block_sum(n, swap_blocks(p), a_tail)),
              HermitianMatrix(block_sum(n, sign_blocks(p), b_tail))};
    }
  }
  throw std::invalid_argument("unknown witness target");
}

Pencil sharp_real_witness(const Inertia3& ia, const Inertia3& ib) {
  const int n = ia.size();
  if (!ib.valid_for(n) || !ia.valid_for(n)) throw std::invalid_argument("inconsistent inertia triples");
  if (ia.n_zero != 0 || ib.n_zero != 0) {
    throw std::invalid_argument("sharp real witness needs n0(A) = n0(B) = 0");
  }
  const int p = std::min({ia.n_plus, ia.n_minus, ib.n_plus, ib.n_minus});
  std::vector<double> a_tail = filler(ia.n_plus - p, 1.0);
  const std::vector<double> neg = filler(ia.n_minus - p, -1.0);
  a_tail.insert(a_tail.end(), neg.begin(), neg.end());
  std::vector<double> b_tail(static_cast<std::size_t>(ib.n_plus - p), 1.0);
  b_tail.resize(b_tail.size() + static_cast<std::size_t>(ib.n_minus - p), -1.0);
  return {HermitianMatrix(block_sum(n, swap_blocks(p), a_tail)),
          HermitianMatrix(block_sum(n, sign_blocks(p), b_tail))};
}

}  // namespace sylvester
