#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylvester/bounds.hpp"
#include "sylvester/eigcore.hpp"
#include "sylvester/matcore.hpp"

namespace sylvester {

struct CountRange {
  int lower = 0;
  int upper = 0;

  [[nodiscard]] bool contains(int v) const { return lower <= v && v <= upper; }
  friend bool operator==(const CountRange&, const CountRange&) = default;
};

/// Eigenvalue counts relative to an interval (a, b). b may be +inf and a may
/// be -inf (half-line reports).
struct IntervalReport {
  double a = 0.0;
  double b = 0.0;
  // Inertia-only range intersected with the parity set when there is one.
  CountRange count_open_interval;
  // The inertia-only range: n+ bounds of the Mobius pair.
  CountRange count_open_mobius;
  CountRange count_at_a;
  CountRange count_at_b;
  CountRange count_outside_or_infinite;
  CountRange count_complex;
  // max(|n+(A-aB) - n+(A-bB)|, |n-(A-aB) - n-(A-bB)|), a lower bound on the
  // closed-interval count
  int closed_interval_lower = 0;
  std::optional<std::vector<int>> parity_set;
  bool a_is_eigenvalue = false;
  bool b_is_eigenvalue = false;
  Inertia3 inertia_a;  // A - aB
  Inertia3 inertia_b;  // bB - A
  int normal_rank = 0;
  std::vector<std::string> notes;

  friend bool operator==(const IntervalReport&, const IntervalReport&) = default;
};

/// (A - aB, bB - A): positive eigenvalues of this pencil are the eigenvalues
/// of (A, B) inside (a, b), zero ones sit at a, infinite ones at b.
Pencil mobius_pair(const Pencil& p, double a, double b);

/// Bounds for every region cut out by a < b (finite), from the inertias of
/// A - aB and bB - A alone. Fills the parity set when B is nearly definite
/// and neither endpoint is an eigenvalue.
IntervalReport interval_bounds(const Pencil& p, double a, double b, const Tolerance& tol = {},
                               std::uint64_t seed = 0);

/// Same, from precomputed inertias (n+/n0/n- of A - aB, A - bB and B).
IntervalReport interval_bounds_from_inertia(const Inertia3& at_a, const Inertia3& at_b, const Inertia3& ib,
                                            double a, double b, int normal_rank);

enum class Side { above, below };

/// Counts in (t, inf) or (-inf, t) from the pencil (A - tB, B).
IntervalReport half_line_bounds(const Pencil& p, double t, Side side, const Tolerance& tol = {},
                                std::uint64_t seed = 0);

/// When B has n - k positive eigenvalues and n - k >= |n-(A) - n+(A)|:
/// n+ in [n+(A) - k, n+(A) + k], n- likewise, n_R in [n - 2k, n].
/// Otherwise returns pencil_bounds with a note.
BoundsReport near_definite_bounds(const Inertia3& ia, const Inertia3& ib, int n);

struct ParityResult {
  std::vector<int> counts;  // ascending, all of one parity
  int base = 0;             // |n+(A - aB) - n+(A - bB)|
  int k = 0;
  bool k_overridden = false;
};

/// {L, L+2, ..., L+2k} ∩ [0, n]. k = n - max(n+(B), n-(B)) unless given.
/// Throws InputError if an endpoint is an eigenvalue or n < 2k.
ParityResult parity_counts(const Pencil& p, double a, double b, const Tolerance& tol = {},
                           std::optional<int> k = std::nullopt, std::uint64_t seed = 0);

/// [L, L + 2k] clamped to n; valid for geometric multiplicities too.
CountRange geometric_interval_bounds(const Pencil& p, double a, double b, const Tolerance& tol = {},
                                     std::optional<int> k = std::nullopt, std::uint64_t seed = 0);

/// One report per consecutive grid pair; each grid point is factored once.
std::vector<IntervalReport> slice_spectrum(const Pencil& p, const std::vector<double>& grid,
                                           const Tolerance& tol = {}, std::uint64_t seed = 0);

/// CSV table: a,b,lower,upper,parity_set (set entries joined by ';').
std::string slices_to_csv(const std::vector<IntervalReport>& reports);

}  // namespace sylvester
