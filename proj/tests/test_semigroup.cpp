#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "okounkov/random.hpp"
#include "okounkov/semigroup.hpp"
#include "oracles.hpp"

using namespace okounkov;

namespace {

SupportSet S1(std::initializer_list<std::int64_t> xs) {
  std::vector<LatticePoint> p;
  for (auto x : xs) p.push_back({x});
  return SupportSet(1, p);
}

SupportSet S2(std::vector<LatticePoint> p) { return SupportSet(2, std::move(p)); }

const SupportSet kSimplex2 = S2({{0, 0}, {1, 0}, {0, 1}});

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool in_triangle(const LatticePoint& x, const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const auto d1 = cross(a, b, x), d2 = cross(b, c, x), d3 = cross(c, a, x);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

bool on_segment(const LatticePoint& x, const LatticePoint& a, const LatticePoint& b) {
  if (cross(a, b, x) != 0) return false;
  return std::min(a[0], b[0]) <= x[0] && x[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= x[1] &&
         x[1] <= std::max(a[1], b[1]);
}

// Caratheodory: a planar point is in conv(A) iff it lies in a triangle (or
// segment) spanned by points of A.
std::set<LatticePoint> completion_oracle_2d(const SupportSet& a) {
  std::int64_t lo = INT64_MAX, hi = INT64_MIN;
  for (const auto& p : a) {
    lo = std::min({lo, p[0], p[1]});
    hi = std::max({hi, p[0], p[1]});
  }
  const auto& v = a.points();
  std::set<LatticePoint> out;
  for (std::int64_t x = lo; x <= hi; ++x) {
    for (std::int64_t y = lo; y <= hi; ++y) {
      const LatticePoint q{x, y};
      bool in = false;
      for (std::size_t i = 0; i < v.size() && !in; ++i) {
        if (v[i] == q) in = true;
        for (std::size_t j = i + 1; j < v.size() && !in; ++j) {
          if (on_segment(q, v[i], v[j])) in = true;
          for (std::size_t k = j + 1; k < v.size() && !in; ++k) {
            if (cross(v[i], v[j], v[k]) != 0 && in_triangle(q, v[i], v[j], v[k])) in = true;
          }
        }
      }
      if (in) out.insert(q);
    }
  }
  return out;
}

// Index of the lattice spanned by difference vectors in Z^2: gcd of all 2x2 minors.
std::int64_t index_oracle_2d(const std::vector<SupportSet>& sets) {
  std::vector<LatticePoint> diffs;
  for (const auto& s : sets) {
    for (const auto& p : s) diffs.push_back({p[0] - s.points()[0][0], p[1] - s.points()[0][1]});
  }
  std::int64_t g = 0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    for (std::size_t j = i + 1; j < diffs.size(); ++j) {
      g = std::gcd(g, diffs[i][0] * diffs[j][1] - diffs[i][1] * diffs[j][0]);
    }
  }
  return g;
}

}  // namespace

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset(S1({0, 1}), S1({0, 1})), S1({0, 1, 2}));
  EXPECT_EQ(sumset_power(S1({0, 1, 3}), 2), S1({0, 1, 2, 3, 4, 6}));
  EXPECT_EQ(sumset_power(kSimplex2, 2), S2({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(sumset_power(kSimplex2, 1), kSimplex2);
  EXPECT_THROW(sumset(S1({0}), kSimplex2), InputError);
  EXPECT_THROW(sumset_power(kSimplex2, 0), InputError);
}

TEST(Sumset, MatchesPairwiseOracle) {
  Rng rng(41, 0);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto a = random_support(rng, n, static_cast<std::size_t>(rng.uniform_int(1, 8)), -4, 4);
    const auto b = random_support(rng, n, static_cast<std::size_t>(rng.uniform_int(1, 8)), -4, 4);
    const auto expected = oracle::pairwise_sums(a.points(), b.points());
    const auto got = sumset(a, b);
    EXPECT_EQ(std::set<LatticePoint>(got.begin(), got.end()), expected);
    EXPECT_EQ(got, sumset(b, a));
  }
}

TEST(Completion, Examples) {
  EXPECT_EQ(completion(S1({0, 3})), S1({0, 1, 2, 3}));
  EXPECT_EQ(completion(S2({{0, 0}, {2, 0}, {0, 2}})),
            S2({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}));
  EXPECT_EQ(completion(S2({{0, 0}, {2, 2}})), S2({{0, 0}, {1, 1}, {2, 2}}));
}

TEST(Completion, MatchesTriangleOracleAndIsIdempotent) {
  Rng rng(42, 0);
  for (int i = 0; i < 150; ++i) {
    const auto a = random_support(rng, 2, static_cast<std::size_t>(rng.uniform_int(1, 6)), -3, 4);
    const auto c = completion(a);
    EXPECT_EQ(std::set<LatticePoint>(c.begin(), c.end()), completion_oracle_2d(a));
    EXPECT_TRUE(a.is_subset_of(c));
    EXPECT_EQ(completion(c), c);
  }
}

TEST(Completion, SumOfCompletionsIsCompleteUpToNormality) {
  // compl(A) + compl(B) subset of compl(A + B), with equality of hulls.
  Rng rng(43, 0);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_support(rng, 2, 4, 0, 3);
    const auto b = random_support(rng, 2, 4, 0, 3);
    const auto lhs = sumset(completion(a), completion(b));
    const auto rhs = completion(sumset(a, b));
    EXPECT_TRUE(lhs.is_subset_of(rhs));
    EXPECT_EQ(convex_hull(lhs), convex_hull(rhs));
  }
}

TEST(Cancelation, HoldsOnRandomTriples) {
  Rng rng(44, 0);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 2));
    const auto a = random_support(rng, n, 4, 0, 3);
    const auto c = random_support(rng, n, 4, 0, 3);
    EXPECT_TRUE(check_cancelation(a, a, c));
    EXPECT_TRUE(check_cancelation(a, random_support(rng, n, 4, 0, 3), c));
  }
  // Without completions cancelation fails: {0,2} + {0,1} = {0,1,2} + {0,1}.
  EXPECT_EQ(sumset(S1({0, 2}), S1({0, 1})), sumset(S1({0, 1, 2}), S1({0, 1})));
  EXPECT_TRUE(check_cancelation(S1({0, 2}), S1({0, 1, 2}), S1({0, 1})));
  EXPECT_THROW(check_cancelation(S1({0}), kSimplex2, kSimplex2), InputError);
}

TEST(SmithNormalForm, KnownMatrices) {
  using V = std::vector<std::vector<Integer>>;
  EXPECT_EQ(smith_normal_form(V{{2, 4}, {6, 8}}), (std::vector<Integer>{2, 4}));
  EXPECT_EQ(smith_normal_form(V{{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(V{{1, 1}, {2, 2}}), (std::vector<Integer>{1}));
  EXPECT_EQ(smith_normal_form(V{{0, 0}}), std::vector<Integer>{});
  EXPECT_EQ(smith_normal_form(V{{4, 6, 2}}), (std::vector<Integer>{2}));
}

TEST(LatticeIndex, Examples) {
  EXPECT_TRUE(difference_lattice_index({kSimplex2}).is_one());
  EXPECT_EQ(*difference_lattice_index({S1({0, 2})}).value, 2);
  EXPECT_EQ(*difference_lattice_index({S1({0, 4, 6})}).value, 2);
  EXPECT_FALSE(difference_lattice_index({S2({{0, 0}, {1, 1}})}).finite());
  EXPECT_TRUE(difference_lattice_index({S2({{0, 0}, {1, 1}}), S2({{0, 0}, {1, 0}})}).is_one());
  EXPECT_EQ(*difference_lattice_index({S2({{0, 0}, {2, 0}, {0, 2}})}).value, 4);
  EXPECT_THROW(difference_lattice_index({}), InputError);
}

TEST(LatticeIndex, MatchesMinorGcdOracle) {
  Rng rng(45, 0);
  for (int i = 0; i < 300; ++i) {
    std::vector<SupportSet> sets;
    const int count = static_cast<int>(rng.uniform_int(1, 3));
    for (int j = 0; j < count; ++j) sets.push_back(random_support(rng, 2, 3, -5, 5));
    const auto expected = index_oracle_2d(sets);
    const auto got = difference_lattice_index(sets);
    if (expected == 0) {
      EXPECT_FALSE(got.finite());
    } else {
      ASSERT_TRUE(got.finite());
      EXPECT_EQ(*got.value, expected);
    }
  }
}

TEST(GradedSlice, SumsetSliceIsSuperadditive) {
  const auto s = sumset_slice(S1({0, 1, 3}), 6);
  EXPECT_EQ(s.k_max(), 6u);
  EXPECT_TRUE(s.is_superadditive());
  GradedSemigroupSlice broken{1, {S1({0, 1}), S1({0, 1})}};
  EXPECT_FALSE(broken.is_superadditive());
  EXPECT_THROW(sumset_slice(kSimplex2, 0), InputError);
  EXPECT_THROW(newton_body(GradedSemigroupSlice{2, {}}), InputError);
  EXPECT_THROW(newton_body(GradedSemigroupSlice{2, {S1({0})}}), InputError);
}

TEST(NewtonBody, OfSumsetSliceIsHull) {
  Rng rng(46, 0);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_support(rng, 2, 5, 0, 3);
    const auto body = newton_body(sumset_slice(a, 4));
    EXPECT_EQ(body.polytope, convex_hull(a));
    EXPECT_EQ(body.level_used, 4u);
  }
}

TEST(NewtonBody, NondecreasingInLevel) {
  // S_k = {0..k-1}; the bodies grow toward [0,1].
  GradedSemigroupSlice s{1, {}};
  Rational prev = -1;
  for (std::int64_t k = 1; k <= 8; ++k) {
    std::vector<LatticePoint> pts;
    for (std::int64_t j = 0; j < k; ++j) pts.push_back({j});
    s.levels.push_back(SupportSet(1, pts));
    const auto v = newton_body(s).polytope.volume();
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_EQ(prev, Rational(7, 8));
}

TEST(Density, SimplexExample) {
  const auto r = density_sequence(sumset_slice(kSimplex2, 40));
  EXPECT_TRUE(r.ample);
  EXPECT_EQ(r.entries.back().k, 40u);
  EXPECT_EQ(r.entries.back().ratio, Rational(861, 1600));
  EXPECT_LT(std::abs(r.entries.back().ratio.get_d() - 0.5), 0.04);
  EXPECT_EQ(r.target_volume, Rational(1, 2));
}

TEST(Density, GapExampleIsExactlyThree) {
  const auto r = density_sequence(sumset_slice(S1({0, 1, 3}), 50));
  EXPECT_TRUE(r.ample);
  EXPECT_EQ(r.entries.back().ratio, 3);
  EXPECT_EQ(r.entries[0].ratio, 3);
  EXPECT_EQ(r.entries[1].ratio, 3);
}

TEST(Density, NonAmpleIsFlagged) {
  const auto r = density_sequence(sumset_slice(S1({0, 2}), 30));
  EXPECT_FALSE(r.ample);
  EXPECT_EQ(*r.index.value, 2);
  EXPECT_EQ(r.target_volume, 2);
  EXPECT_EQ(r.entries.back().ratio, Rational(31, 30));
  for (std::size_t i = 1; i < r.entries.size(); ++i) EXPECT_LE(r.entries[i].ratio, r.entries[i - 1].ratio);
}

TEST(Density, ConvergesToVolumeForAmpleSets) {
  Rng rng(47, 0);
  int tested = 0;
  while (tested < 8) {
    const auto a = random_support(rng, 2, 5, 0, 3);
    if (!difference_lattice_index({a}).is_one()) continue;
    ++tested;
    const auto r = density_sequence(sumset_slice(a, 16));
    const double vol = r.target_volume.get_d();
    EXPECT_NEAR(r.entries.back().ratio.get_d(), vol, 0.6 * (vol + 1));
  }
}

TEST(Margin, GapExampleNeedsConstantOne) {
  const auto s = sumset_slice(S1({0, 1, 3}), 12);
  for (const auto& e : interior_margin(s, 1)) {
    EXPECT_EQ(e.missing_count, 0u);
    EXPECT_EQ(e.missing_total, 1u);
    EXPECT_DOUBLE_EQ(e.max_missing_depth, 1.0);
  }
  const auto zero = interior_margin(s, 0);
  EXPECT_EQ(zero[3].missing_count, 1u);
  const auto search = find_margin_constant(s);
  ASSERT_TRUE(search.constant.has_value());
  EXPECT_EQ(*search.constant, 1);
}

TEST(Margin, SaturatedSetsNeedNoMargin) {
  const auto search = find_margin_constant(sumset_slice(kSimplex2, 8));
  ASSERT_TRUE(search.constant.has_value());
  EXPECT_EQ(*search.constant, 0);
  for (const auto& e : search.entries) EXPECT_EQ(e.missing_total, 0u);
}

TEST(Margin, RejectsNonAmpleAndForeignSlices) {
  EXPECT_THROW(interior_margin(sumset_slice(S1({0, 2}), 4), 1), InputError);
  EXPECT_THROW(interior_margin(sumset_slice(S2({{0, 0}, {2, 0}, {0, 2}}), 4), 2), InputError);
  GradedSemigroupSlice s{1, {S1({0, 1}), S1({0, 1})}};
  EXPECT_THROW(interior_margin(s, 1), InputError);
  EXPECT_THROW(interior_margin(sumset_slice(kSimplex2, 2), -1), InputError);
}

TEST(Margin, RandomAmpleSetsHaveFiniteConstant) {
  Rng rng(48, 0);
  int tested = 0;
  while (tested < 10) {
    const auto a = random_support(rng, 2, 4, 0, 3);
    if (!difference_lattice_index({a}).is_one()) continue;
    ++tested;
    const auto search = find_margin_constant(sumset_slice(a, 6));
    EXPECT_TRUE(search.constant.has_value());
  }
}
