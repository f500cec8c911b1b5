#include <gtest/gtest.h>

#include <algorithm>

#include "families.hpp"
#include "sylvester/errors.hpp"
#include "sylvester/interval.hpp"
#include "sylvester/oracle.hpp"

using namespace sylvester;
using sylvester::fam::Rng;

namespace {

Pencil singular_three_by_three() {
  RealMatrix a(3, 3), b(3, 3);
  a << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  b << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  return {HermitianMatrix(a), HermitianMatrix(b)};
}

// A - tB has inertia (6,0,1) at t = -1/2 and B has inertia (6,0,1).
Pencil shifted_seven(Rng& rng) {
  const auto b = fam::random_with_inertia({6, 0, 1}, rng);
  const auto shifted = fam::random_with_inertia({6, 0, 1}, rng);
  return {shifted - 0.5 * b, b};
}

bool away_from_spectrum(const std::vector<EigenRecord>& rec, double t, double margin = 1e-4) {
  return distance_to_real_spectrum(rec, t) > margin * (1 + std::abs(t));
}

}  // namespace

TEST(MobiusPair, DirectSubstitution) {
  Rng rng(1);
  const auto p = fam::random_pencil(4, rng);
  const auto m01 = mobius_pair(p, 0, 1);
  EXPECT_EQ(m01.a(), p.a());
  EXPECT_EQ(m01.b(), p.b() - p.a());
  const auto m = mobius_pair(p, -1, 1);
  EXPECT_EQ(m.a(), p.a() + p.b());
  EXPECT_EQ(m.b(), p.b() - p.a());
  EXPECT_THROW(mobius_pair(p, 1, 1), std::invalid_argument);
  EXPECT_THROW(mobius_pair(p, 2, 1), std::invalid_argument);
}

TEST(IntervalBounds, DefiniteBIsExact) {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = fam::uniform_int(2, 10, rng);
    const Pencil p(fam::random_shifted(n, rng), fam::random_with_inertia({n, 0, 0}, rng));
    const auto rec = pencil_eigen_records(p);
    const auto [a, b] = fam::random_interval(-4, 4, rng);
    if (!away_from_spectrum(rec, a) || !away_from_spectrum(rec, b)) continue;
    const auto r = interval_bounds(p, a, b);
    const int truth = count_real_in(rec, a, b);
    EXPECT_EQ(r.count_open_interval.lower, truth);
    EXPECT_EQ(r.count_open_interval.upper, truth);
    ASSERT_TRUE(r.parity_set.has_value());
    EXPECT_EQ(*r.parity_set, std::vector<int>{truth});
  }
}

TEST(IntervalBounds, SingularPencilHasNoForcedEigenvalues) {
  const auto p = singular_three_by_three();
  for (auto [a, b] : {std::pair{-1.0, 1.0}, {0.3, 7.0}, {-5.0, -2.0}}) {
    const auto r = interval_bounds(p, a, b);
    EXPECT_EQ(r.count_open_interval.lower, 0);
    EXPECT_EQ(r.closed_interval_lower, 0);
    EXPECT_EQ(r.normal_rank, 2);
  }
}

TEST(IntervalBounds, EndpointEigenvalueFlagged) {
  const Pencil p(HermitianMatrix(RealMatrix(Eigen::Vector3d(1, 2, 3).asDiagonal())), HermitianMatrix::identity(3));
  const auto r = interval_bounds(p, 2.0, 5.0);
  EXPECT_TRUE(r.a_is_eigenvalue);
  EXPECT_FALSE(r.b_is_eigenvalue);
  EXPECT_FALSE(r.parity_set.has_value());
  EXPECT_EQ(r.count_at_a.lower, 1);
  EXPECT_EQ(r.count_open_interval.lower, 1);
  EXPECT_EQ(r.closed_interval_lower, 2);
}

TEST(IntervalBounds, InfiniteEndpointRoutesToHalfLine) {
  Rng rng(3);
  const auto p = fam::random_pencil(5, rng);
  EXPECT_EQ(interval_bounds(p, 0.25, INFINITY), half_line_bounds(p, 0.25, Side::above));
  EXPECT_EQ(interval_bounds(p, -INFINITY, 0.25), half_line_bounds(p, 0.25, Side::below));
  EXPECT_THROW(interval_bounds(p, -INFINITY, INFINITY), std::invalid_argument);
}

TEST(HalfLine, ShiftedSevenAbove) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = shifted_seven(rng);
    ASSERT_EQ(ldlt_inertia(p.at(-0.5)), (Inertia3{6, 0, 1}));
    const auto r = half_line_bounds(p, -0.5, Side::above);
    EXPECT_EQ(r.count_open_mobius.lower, 5);
    ASSERT_TRUE(r.parity_set.has_value());
    EXPECT_EQ(*r.parity_set, (std::vector<int>{5, 7}));
    const int truth = count_real_in(pencil_eigen_records(p), -0.5, INFINITY);
    EXPECT_TRUE(truth == 5 || truth == 7) << truth;
  }
}

TEST(HalfLine, DefiniteBBelowSpectrumCountsEverything) {
  Rng rng(5);
  const Pencil p(fam::random_shifted(6, rng), fam::random_with_inertia({6, 0, 0}, rng));
  const auto r = half_line_bounds(p, -100.0, Side::above);
  EXPECT_EQ(r.count_open_interval.lower, 6);
  EXPECT_EQ(r.count_open_interval.upper, 6);
  const auto below = half_line_bounds(p, -100.0, Side::below);
  EXPECT_EQ(below.count_open_interval.upper, 0);
}

TEST(HalfLine, ZeroShiftMatchesPencilBounds) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = fam::random_pencil(fam::uniform_int(2, 8, rng), rng);
    const auto r = half_line_bounds(p, 0.0, Side::above);
    const auto b = pencil_bounds(ldlt_inertia(p.a()), ldlt_inertia(p.b()), static_cast<int>(p.size()));
    EXPECT_EQ(r.count_open_mobius, (CountRange{b.n_plus.lower, b.n_plus.upper}));
  }
}

TEST(HalfLine, CountsAreValid) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = fam::random_pencil(fam::uniform_int(2, 9, rng), rng);
    const auto rec = pencil_eigen_records(p);
    const double t = fam::uniform_real(-3, 3, rng);
    if (!away_from_spectrum(rec, t)) continue;
    const auto above = half_line_bounds(p, t, Side::above);
    const auto below = half_line_bounds(p, t, Side::below);
    EXPECT_TRUE(above.count_open_interval.contains(count_real_in(rec, t, INFINITY))) << trial;
    EXPECT_TRUE(below.count_open_interval.contains(count_real_in(rec, -INFINITY, t))) << trial;
    EXPECT_LE(above.closed_interval_lower, count_real_in(rec, t, INFINITY, true));
    EXPECT_LE(below.closed_interval_lower, count_real_in(rec, -INFINITY, t, true));
  }
}

TEST(NearDefinite, Examples) {
  const auto exact = near_definite_bounds({2, 1, 3}, {6, 0, 0}, 6);
  EXPECT_TRUE(exact.n_plus.exact());
  EXPECT_EQ(exact.n_plus.lower, 2);
  EXPECT_EQ(exact.n_minus.lower, 3);

  const auto r = near_definite_bounds({5, 0, 2}, {6, 0, 1}, 7);
  EXPECT_EQ(r.n_plus.lower, 4);
  EXPECT_EQ(r.n_plus.upper, 6);
  EXPECT_EQ(r.n_minus.lower, 1);
  EXPECT_EQ(r.n_minus.upper, 3);
  EXPECT_EQ(r.n_real.lower, 5);
  EXPECT_EQ(r.n_real.upper, 7);

  EXPECT_GE(near_definite_bounds({3, 0, 3}, {5, 0, 1}, 6).n_real.lower, 4);
}

TEST(NearDefinite, HypothesisFailureFallsBack) {
  const auto r = near_definite_bounds({6, 0, 0}, {1, 0, 5}, 6);
  EXPECT_EQ(r, [] {
    auto b = pencil_bounds({6, 0, 0}, {1, 0, 5}, 6);
    b.notes.emplace_back("near-definite: hypothesis n - k >= |n-(A) - n+(A)| fails (k = 5); general bounds returned");
    return b;
  }());
}

TEST(NearDefinite, SoundOnRandomPencils) {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = fam::uniform_int(2, 9, rng);
    const int k = fam::uniform_int(0, 2, rng);
    if (2 * k > n) continue;
    const Pencil p(fam::random_shifted(n, rng), fam::random_with_inertia({n - k, 0, k}, rng));
    const auto ia = ldlt_inertia(p.a());
    const auto r = near_definite_bounds(ia, {n - k, 0, k}, n);
    EXPECT_TRUE(r.contains(classify_inertia5(p))) << trial;
  }
}

TEST(Parity, DefiniteBGivesSingleton) {
  Rng rng(9);
  const Pencil p(fam::random_shifted(6, rng), HermitianMatrix::identity(6));
  const auto pr = parity_counts(p, -0.123, 0.456);
  EXPECT_EQ(pr.k, 0);
  EXPECT_EQ(pr.counts, std::vector<int>{pr.base});
  EXPECT_EQ(pr.base, count_real_in(pencil_eigen_records(p), -0.123, 0.456));
}

TEST(Parity, Preconditions) {
  const Pencil p(HermitianMatrix(RealMatrix(Eigen::Vector4d(1, 2, 3, 4).asDiagonal())),
                 HermitianMatrix(RealMatrix(Eigen::Vector4d(1, 1, -1, 1).asDiagonal())));
  EXPECT_THROW(parity_counts(p, 1.0, 5.0), InputError);
  EXPECT_THROW(parity_counts(p, 0.5, 5.0, {}, 3), InputError);
  const auto pr = parity_counts(p, 0.5, 5.0, {}, 2);
  EXPECT_TRUE(pr.k_overridden);
  EXPECT_EQ(pr.k, 2);
  const auto plain = parity_counts(p, 0.5, 5.0);
  EXPECT_FALSE(plain.k_overridden);
  EXPECT_EQ(plain.k, 1);
  EXPECT_THROW(parity_counts(p, 5.0, 0.5), std::invalid_argument);
}

TEST(Parity, ContainsOracleCountNearDefinite) {
  Rng rng(10);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = fam::uniform_int(2, 12, rng);
    const int k = fam::uniform_int(0, n / 2, rng);
    const Pencil p(fam::random_shifted(n, rng), fam::random_with_inertia({n - k, 0, k}, rng));
    const auto rec = pencil_eigen_records(p);
    const auto [a, b] = fam::random_interval(-3, 3, rng);
    if (!away_from_spectrum(rec, a) || !away_from_spectrum(rec, b)) continue;
    const auto pr = parity_counts(p, a, b);
    const int truth = count_real_in(rec, a, b);
    EXPECT_NE(std::find(pr.counts.begin(), pr.counts.end(), truth), pr.counts.end()) << trial;
    EXPECT_EQ((truth - pr.base) % 2, 0);
  }
}

TEST(Geometric, DefiniteAndJordan) {
  Rng rng(11);
  const Pencil p(fam::random_shifted(5, rng), HermitianMatrix::identity(5));
  const auto g = geometric_interval_bounds(p, -0.5, 0.5);
  EXPECT_EQ(g.lower, g.upper);

  const auto j = gen_jordan_pair(6, 1.0);
  const auto gj = geometric_interval_bounds(j, 0.0, 2.0);
  EXPECT_EQ(gj, (CountRange{0, 6}));
  EXPECT_TRUE(gj.contains(1));
  const auto pj = parity_counts(j, 0.0, 2.0);
  EXPECT_NE(std::find(pj.counts.begin(), pj.counts.end(), 6), pj.counts.end());
  EXPECT_THROW(parity_counts(j, 1.0, 2.0), InputError);
}

TEST(Geometric, SimpleSpectrumMatchesParity) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = fam::uniform_int(2, 10, rng);
    const Pencil p(fam::random_shifted(n, rng), fam::random_with_inertia({n - 1, 0, 1}, rng));
    const auto rec = pencil_eigen_records(p);
    const auto [a, b] = fam::random_interval(-3, 3, rng);
    if (!away_from_spectrum(rec, a) || !away_from_spectrum(rec, b)) continue;
    const auto g = geometric_interval_bounds(p, a, b);
    const auto pr = parity_counts(p, a, b);
    EXPECT_EQ(g.lower, pr.counts.front());
    // clamping to n can leave the range one above the largest same-parity count
    EXPECT_LE(pr.counts.back(), g.upper);
    EXPECT_LE(g.upper - pr.counts.back(), 1);
    int geometric = 0;
    for (const auto& r : rec) {
      if (r.is_real() && a < r.value->real() && r.value->real() < b) geometric += r.geometric_mult;
    }
    EXPECT_TRUE(g.contains(geometric));
  }
}

TEST(IntervalProperty, ValidityAgainstOracle) {
  Rng rng(13);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = fam::uniform_int(2, 12, rng);
    const auto p = fam::random_pencil(n, rng);
    const auto rec = pencil_eigen_records(p);
    const auto [a, b] = fam::random_interval(-3, 3, rng);
    if (!away_from_spectrum(rec, a) || !away_from_spectrum(rec, b)) continue;
    ++checked;
    const auto r = interval_bounds(p, a, b);
    const int truth = count_real_in(rec, a, b);
    EXPECT_TRUE(r.count_open_interval.contains(truth)) << trial;
    EXPECT_TRUE(r.count_open_mobius.contains(truth)) << trial;
    EXPECT_LE(r.closed_interval_lower, count_real_in(rec, a, b, true)) << trial;
    if (r.parity_set) {
      EXPECT_NE(std::find(r.parity_set->begin(), r.parity_set->end(), truth), r.parity_set->end()) << trial;
      for (int c : *r.parity_set) {
        EXPECT_EQ((c - r.parity_set->front()) % 2, 0);
        EXPECT_TRUE(r.count_open_interval.contains(c));
      }
    }
    const int outside = count_real_in(rec, -INFINITY, a) + count_real_in(rec, b, INFINITY) + inertia_of(rec).n_infinite;
    EXPECT_TRUE(r.count_outside_or_infinite.contains(outside)) << trial;
    EXPECT_TRUE(r.count_complex.contains(inertia_of(rec).n_complex)) << trial;
  }
  EXPECT_GT(checked, 80);
}

TEST(IntervalProperty, MobiusConsistency) {
  Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = fam::random_pencil(fam::uniform_int(2, 9, rng), rng);
    const auto [a, b] = fam::random_interval(-3, 3, rng);
    const auto m = mobius_pair(p, a, b);
    const auto rep = pencil_bounds(ldlt_inertia(m.a()), ldlt_inertia(m.b()), static_cast<int>(p.size()));
    const auto r = interval_bounds(p, a, b);
    EXPECT_EQ(r.count_open_mobius, (CountRange{rep.n_plus.lower, rep.n_plus.upper}));
    EXPECT_EQ(r.count_at_a, (CountRange{rep.n_zero.lower, rep.n_zero.upper}));
    EXPECT_EQ(r.count_at_b, (CountRange{rep.n_infinite.lower, rep.n_infinite.upper}));
  }
}

TEST(IntervalProperty, RefinementOnlyGainsInformation) {
  Rng rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = fam::random_pencil(fam::uniform_int(2, 10, rng), rng);
    std::vector<double> grid;
    for (int i = 0; i < 6; ++i) grid.push_back(fam::uniform_real(-4, 4, rng));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const auto fine = slice_spectrum(p, grid);
    int summed = 0, summed_closed = 0;
    for (const auto& r : fine) {
      summed += r.count_open_mobius.lower;
      summed_closed += r.closed_interval_lower;
    }
    const auto coarse = interval_bounds(p, grid.front(), grid.back());
    EXPECT_GE(summed, coarse.count_open_mobius.lower) << trial;
    EXPECT_GE(summed_closed, coarse.closed_interval_lower) << trial;
  }
}

TEST(Slice, TwoPointsEqualIntervalBounds) {
  Rng rng(16);
  const auto p = fam::random_pencil(6, rng);
  const auto s = slice_spectrum(p, {-1.0, 2.0});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], interval_bounds(p, -1.0, 2.0));
}

TEST(Slice, SpringLinearization) {
  const auto lin = quadratic_symmetric_linearization(gen_spring_quadratic(7, 0.3));
  EXPECT_EQ(slice_spectrum(lin, {-13, -4})[0].count_open_interval.lower, 4);
  EXPECT_EQ(slice_spectrum(lin, {-15, 0})[0].count_open_interval.lower, 0);
  const auto r = interval_bounds(lin, -13, -4);
  EXPECT_EQ(r.inertia_a, (Inertia3{7, 0, 7}));
  EXPECT_EQ(r.inertia_b, (Inertia3{3, 0, 11}));
}

TEST(Slice, GridValidationAndCsv) {
  Rng rng(17);
  const auto p = fam::random_pencil(3, rng);
  EXPECT_THROW(slice_spectrum(p, {1.0}), std::invalid_argument);
  EXPECT_THROW(slice_spectrum(p, {1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(slice_spectrum(p, {0.0, INFINITY}), std::invalid_argument);

  const Pencil d(HermitianMatrix(RealMatrix(Eigen::Vector3d(1, 2, 3).asDiagonal())), HermitianMatrix::identity(3));
  const auto csv = slices_to_csv(slice_spectrum(d, {0, 1.5, 2.5}));
  EXPECT_EQ(csv, "a,b,lower,upper,parity_set\n0,1.5,1,1,1\n1.5,2.5,1,1,1\n");
}
