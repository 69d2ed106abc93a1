#include <gtest/gtest.h>

#include "okounkov/algebra.hpp"
#include "okounkov/random.hpp"

using namespace okounkov;

namespace {

LaurentPolynomial poly(std::size_t n, std::initializer_list<std::pair<Exponent, int>> terms) {
  LaurentPolynomial p(n);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPolynomial random_poly(Rng& rng, std::size_t n, int max_terms, std::int64_t box) {
  LaurentPolynomial p(n);
  while (p.is_zero()) {
    const int t = static_cast<int>(rng.uniform_int(1, max_terms));
    for (int i = 0; i < t; ++i) {
      p.add_term(random_lattice_point(rng, n, -box, box), make_rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 2)));
    }
  }
  return p;
}

LaurentSubspace random_subspace(Rng& rng, std::size_t n) {
  std::vector<LaurentPolynomial> gens;
  const int g = static_cast<int>(rng.uniform_int(1, 3));
  for (int i = 0; i < g; ++i) gens.push_back(random_poly(rng, n, 3, 1));
  return LaurentSubspace::span(n, gens);
}

bool leq(const MonomialOrder& o, const Exponent& a, const Exponent& b) { return !o.less(b, a); }

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

const SupportSet kSimplex2(2, {{0, 0}, {1, 0}, {0, 1}});

}  // namespace

TEST(MonomialOrder, LexAndGraded) {
  const auto lex = MonomialOrder::lex();
  EXPECT_TRUE(lex.less({0, 5}, {1, 0}));
  EXPECT_TRUE(lex.less({-1, 0}, {0, 0}));
  const auto gr = MonomialOrder::graded_lex({1, 1});
  EXPECT_TRUE(gr.less({1, 0}, {0, 2}));
  EXPECT_TRUE(gr.less({0, 1}, {1, 0}));
  EXPECT_THROW(MonomialOrder::graded_lex({}), InputError);
  EXPECT_THROW(MonomialOrder::graded_lex({1, 0}), InputError);
  EXPECT_THROW(gr.less({1}, {0}), InputError);
}

TEST(MonomialOrder, IsAdditive) {
  Rng rng(51, 0);
  const MonomialOrder orders[] = {MonomialOrder::lex(), MonomialOrder::graded_lex({1, 2, 3})};
  for (const auto& o : orders) {
    for (int i = 0; i < 300; ++i) {
      const auto a = random_lattice_point(rng, 3, -3, 3), b = random_lattice_point(rng, 3, -3, 3);
      const auto c = random_lattice_point(rng, 3, -3, 3);
      EXPECT_EQ(o.less(a, b), o.less(add(a, c), add(b, c)));
      EXPECT_NE(o.less(a, b) || a == b, o.less(b, a));
    }
  }
}

TEST(Polynomial, Arithmetic) {
  const auto f = poly(2, {{{0, 0}, 1}, {{1, 0}, 1}});
  const auto g = poly(2, {{{0, 0}, 1}, {{1, 0}, -1}});
  EXPECT_EQ(f * g, poly(2, {{{0, 0}, 1}, {{2, 0}, -1}}));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f + g, poly(2, {{{0, 0}, 2}}));
  EXPECT_EQ((f * g).support(), SupportSet(2, {{0, 0}, {2, 0}}));
  EXPECT_THROW(LaurentPolynomial(0), InputError);
  EXPECT_THROW(f * LaurentPolynomial(3), InputError);
  EXPECT_THROW(LaurentPolynomial(2).support(), InputError);
  EXPECT_THROW(LaurentPolynomial(2).add_term({1}, 1), InputError);
}

TEST(Valuation, Examples) {
  const auto f = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}});
  EXPECT_EQ(valuation(f, MonomialOrder::lex()), (Exponent{0, 1}));
  EXPECT_EQ(valuation(poly(2, {{{2, 0}, 1}, {{0, 3}, 1}}), MonomialOrder::graded_lex({1, 1})),
            (Exponent{2, 0}));
  EXPECT_EQ(valuation(poly(1, {{{-2}, 5}, {{4}, 1}}), MonomialOrder::lex()), (Exponent{-2}));
  EXPECT_THROW(valuation(LaurentPolynomial(2), MonomialOrder::lex()), InputError);
}

TEST(Valuation, AxiomsOnRandomPairs) {
  Rng rng(52, 0);
  const MonomialOrder orders[] = {MonomialOrder::lex(), MonomialOrder::graded_lex({2, 1})};
  for (const auto& o : orders) {
    for (int i = 0; i < 250; ++i) {
      const auto f = random_poly(rng, 2, 4, 3), g = random_poly(rng, 2, 4, 3);
      const auto vf = valuation(f, o), vg = valuation(g, o);
      EXPECT_EQ(valuation(f * g, o), add(vf, vg));
      const auto s = f + g;
      if (!s.is_zero()) {
        const auto m = o.less(vf, vg) ? vf : vg;
        EXPECT_TRUE(leq(o, m, valuation(s, o)));
      }
      EXPECT_EQ(valuation(Rational(-7, 3) * f, o), vf);
    }
  }
}

TEST(Subspace, SpanAndMembership) {
  const auto l = LaurentSubspace::span(2, {poly(2, {{{0, 0}, 1}}), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}),
                                           poly(2, {{{0, 0}, 2}, {{1, 0}, 3}, {{0, 1}, 3}})});
  EXPECT_EQ(l.dimension(), 2u);
  EXPECT_TRUE(l.contains(poly(2, {{{1, 0}, 5}, {{0, 1}, 5}, {{0, 0}, -1}})));
  EXPECT_FALSE(l.contains(poly(2, {{{1, 0}, 1}})));
  EXPECT_TRUE(l.contains(LaurentPolynomial(2)));
  EXPECT_THROW(LaurentSubspace::span(2, {LaurentPolynomial(2)}), InputError);
  EXPECT_THROW(LaurentSubspace::span(2, {poly(1, {{{0}, 1}})}), InputError);
}

TEST(Subspace, ProductsAndPowers) {
  Rng rng(53, 0);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_subspace(rng, 2), b = random_subspace(rng, 2);
    EXPECT_EQ(product(a, b), product(b, a));
    EXPECT_EQ(power(a, 3), product(product(a, a), a));
    EXPECT_LE(product(a, b).dimension(), a.dimension() * b.dimension());
  }
  EXPECT_THROW(power(monomial_subspace(kSimplex2), 0), InputError);
}

TEST(Subspace, MonomialPowersAreSumsets) {
  Rng rng(54, 0);
  for (int i = 0; i < 20; ++i) {
    const auto a = random_support(rng, 2, 4, -2, 2);
    const auto l = monomial_subspace(a);
    EXPECT_EQ(l.dimension(), a.size());
    EXPECT_EQ(power(l, 3), monomial_subspace(sumset_power(a, 3)));
    const auto s = semigroup_of_subspace(l, MonomialOrder::lex(), 4);
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(s.level(k), sumset_power(a, static_cast<unsigned>(k)));
  }
}

TEST(ValuationImage, CardinalityEqualsDimension) {
  Rng rng(55, 0);
  const MonomialOrder orders[] = {MonomialOrder::lex(), MonomialOrder::graded_lex({1, 1})};
  for (const auto& o : orders) {
    for (int i = 0; i < 100; ++i) {
      const auto l = random_subspace(rng, 2);
      EXPECT_EQ(valuation_image(l, o).exponents.size(), l.dimension());
      for (const auto& f : l.basis()) EXPECT_TRUE(valuation_image(l, o).exponents.contains(valuation(f, o)));
    }
  }
}

TEST(ValuationImage, SemigroupIsSuperadditive) {
  Rng rng(56, 0);
  for (int i = 0; i < 30; ++i) {
    const auto s = semigroup_of_subspace(random_subspace(rng, 2), MonomialOrder::lex(), 4);
    EXPECT_TRUE(s.is_superadditive());
  }
}

TEST(Hilbert, MonomialSimplex) {
  const auto h = hilbert_function(monomial_subspace(kSimplex2), 8);
  for (const auto& p : h) EXPECT_EQ(p.dim, (p.k + 1) * (p.k + 2) / 2);
  const auto t = fit_hilbert_tail(h);
  EXPECT_EQ(t.degree, 2u);
  EXPECT_EQ(t.leading_difference, 1);
  EXPECT_EQ(t.leading_coefficient, Rational(1, 2));
  EXPECT_TRUE(t.stable);
  EXPECT_THROW(hilbert_function(monomial_subspace(kSimplex2), 0), InputError);
}

TEST(Hilbert, NonMonomialLine) {
  const auto l = LaurentSubspace::span(2, {poly(2, {{{0, 0}, 1}}), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}})});
  const auto h = hilbert_function(l, 8);
  for (const auto& p : h) EXPECT_EQ(p.dim, p.k + 1);
  const auto t = fit_hilbert_tail(h);
  EXPECT_EQ(t.degree, 1u);
  EXPECT_EQ(t.leading_difference, 1);
  const auto body = newton_okounkov_body(l, MonomialOrder::lex(), 6);
  EXPECT_EQ(body.polytope.affine_dim(), 1u);
  EXPECT_EQ(body.polytope, convex_hull(std::vector<RationalPoint>{{0, 0}, {0, 1}}));
}

TEST(Hilbert, ShortSequenceIsUnstable) {
  const auto t = fit_hilbert_tail({{1, 3}, {2, 6}});
  EXPECT_FALSE(t.stable);
}

TEST(NewtonOkounkovBody, MonomialSubspaceGivesHull) {
  Rng rng(57, 0);
  for (int i = 0; i < 15; ++i) {
    const auto a = random_support(rng, 2, 4, -2, 2);
    const auto body = newton_okounkov_body(monomial_subspace(a), MonomialOrder::graded_lex({1, 1}), 3);
    EXPECT_EQ(body.polytope, convex_hull(a));
  }
}

TEST(Superadditivity, HoldsOnRandomPairs) {
  Rng rng(58, 0);
  for (int i = 0; i < 25; ++i) {
    const auto a = random_subspace(rng, 2), b = random_subspace(rng, 2);
    EXPECT_TRUE(superadditivity_check(a, b, MonomialOrder::lex(), 4).holds);
  }
  EXPECT_THROW(superadditivity_check(monomial_subspace(kSimplex2), monomial_subspace(SupportSet(1, {{0}})),
                                     MonomialOrder::lex(), 2),
               InputError);
}
