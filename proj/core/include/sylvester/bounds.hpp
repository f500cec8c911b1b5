#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylvester/eigcore.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester {

/// Inertia of a pencil: positive, zero, negative, nonreal and infinite
/// eigenvalue counts, each with algebraic multiplicity.
struct Inertia5 {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  int n_complex = 0;
  int n_infinite = 0;

  /// Finite real eigenvalues.
  [[nodiscard]] int n_real() const { return n_plus + n_zero + n_minus; }
  [[nodiscard]] int total() const { return n_real() + n_complex + n_infinite; }

  friend bool operator==(const Inertia5&, const Inertia5&) = default;
};

/// Closed integer range [lower, upper] plus the formula that produced each end.
struct Bound {
  int lower = 0;
  int upper = 0;
  std::string lower_source;
  std::string upper_source;

  [[nodiscard]] bool contains(int v) const { return lower <= v && v <= upper; }
  [[nodiscard]] bool exact() const { return lower == upper; }

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Combinations of the two inertias that every bound is written in.
struct InertiaCombinations {
  int n_pp = 0;  // n+(A) + n+(B)
  int n_mm = 0;  // n-(A) + n-(B)
  int n_pm = 0;  // n+(A) + n-(B)
  int n_mp = 0;  // n-(A) + n+(B)
  int delta = 0;  // n0(A) - n0(B)
  int N_pp = 0;  // max(n_pp, n_mm)
  int N_pm = 0;  // max(n_pm, n_mp)

  static InertiaCombinations of(const Inertia3& ia, const Inertia3& ib);

  friend bool operator==(const InertiaCombinations&, const InertiaCombinations&) = default;
};

struct BoundsReport {
  int n = 0;
  Inertia3 inertia_a;
  Inertia3 inertia_b;
  Bound n_plus;
  Bound n_zero;
  Bound n_minus;
  Bound n_complex;
  Bound n_infinite;
  Bound n_real;
  InertiaCombinations aux;
  std::optional<Tolerance> tolerance_used;
  std::optional<int> rank_used;
  std::vector<std::string> notes;

  /// True when every entry of `q` (and its finite-real sum) is inside its range.
  [[nodiscard]] bool contains(const Inertia5& q) const;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Unclamped values of the inertia bound system, before intersecting with the
/// trivial range [0, n].
struct RawBounds {
  int plus_lower, plus_upper;
  int zero_lower, zero_upper;
  int minus_lower, minus_upper;
  int complex_lower, complex_upper;
  int infinite_lower, infinite_upper;
  int real_lower_signature;  // |s(B)|
  int real_lower_sum;        // N_pp + N_pm - 2n + delta
  int real_upper;            // n - n0(B)
};

RawBounds raw_pencil_bounds(const Inertia3& ia, const Inertia3& ib, int n);

/// Bounds on the pencil inertia from the inertias of A and B alone.
/// Throws std::invalid_argument when a triple does not sum to n.
BoundsReport pencil_bounds(const Inertia3& ia, const Inertia3& ib, int n);

/// As pencil_bounds, intersected with the normal-rank refinements
///   n+ <= 3n - r - n0(A) - n0(B) - N_pm,   n0 >= n0(A) - n + r,
///   n- <= 3n - r - n0(A) - n0(B) - N_pp,   n_inf >= n0(B) - n + r,
/// and with the fact that there are at most r eigenvalues.
/// Requires max(n - n0(A), n - n0(B)) <= r <= n.
BoundsReport pencil_bounds_with_rank(const Inertia3& ia, const Inertia3& ib, int n, int r);

/// |n+(B) - n-(A)| + |n-(A) - n-(B)|: sharp lower bound on the finite real
/// eigenvalue count, valid when neither 0 nor infinity is an eigenvalue.
int real_lower_sharp(const Inertia3& ia, const Inertia3& ib);

enum class WitnessTarget { plus_lower, minus_lower, zero_lower, infinite_lower, complex_lower, real_lower };

std::string to_string(WitnessTarget t);
WitnessTarget witness_target_from_string(const std::string& s);

/// Unclamped lower bound the witness for `target` must attain.
int target_lower_bound(const Inertia3& ia, const Inertia3& ib, WitnessTarget target);

/// Pencil (Â, B̂) with inertia(Â) = ia and inertia(B̂) = ib on which the
/// targeted lower bound holds with equality. The real_lower target only
/// honors ib: Â = R ⊕ D1 ⊕ D2, B̂ = T ⊕ ±I ⊕ 0.
/// Throws std::invalid_argument when the bound is trivial (outside [0, n]).
Pencil witness_pair(const Inertia3& ia, const Inertia3& ib, WitnessTarget target);

/// Pencil with inertia(Â) = ia, inertia(B̂) = ib, and exactly
/// real_lower_sharp(ia, ib) finite real eigenvalues. Requires n0(A) = n0(B) = 0.
Pencil sharp_real_witness(const Inertia3& ia, const Inertia3& ib);

/// The 2p x 2p blocks R = ⊕[[0,1],[1,0]] and T = ⊕[[1,0],[0,-1]]; R - zT has
/// eigenvalues ±i, each with multiplicity p.
RealMatrix swap_blocks(Index p);
RealMatrix sign_blocks(Index p);

}  // namespace sylvester
