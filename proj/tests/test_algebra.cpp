#include "oracle.hpp"

#include "tandim/suites.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

using namespace tandim;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long long> xs) {
    std::vector<BigInt> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

// Element orders overall and in the centre, number of squares and abelianization size; enough to
// separate groups of order ≤ 16.
std::string signature(const Group& g) {
    std::map<std::size_t, std::size_t> orders, central_orders;
    std::set<Elem> squares;
    for (Elem x = 0; x < g->order(); ++x) {
        std::size_t k = 1;
        for (Elem y = x; y != g->id(); y = g->mul(y, x)) ++k;
        ++orders[k];
        squares.insert(g->mul(x, x));
        bool central = true;
        for (Elem y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
        if (central) ++central_orders[k];
    }
    std::string s = std::to_string(g->order()) + "|";
    for (auto [k, n] : orders) s += std::to_string(k) + ":" + std::to_string(n) + ",";
    s += "|";
    for (auto [k, n] : central_orders) s += std::to_string(k) + ":" + std::to_string(n) + ",";
    return s + "|" + std::to_string(squares.size()) + "|" + std::to_string(abelianization(g).ab->order());
}

}  // namespace

// Values below were computed by the minor-gcd oracle and checked by hand.
TEST(SnfOracle, FrozenFixtures) {
    auto a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    EXPECT_EQ(oracle::invariant_factors(a), bigs({2, 6, 12}));
    auto b = IntMatrix::from_rows({{2, 0}, {0, 3}});
    EXPECT_EQ(oracle::invariant_factors(b), bigs({1, 6}));
    auto c = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
    EXPECT_EQ(oracle::invariant_factors(c), bigs({1, 0}));
    auto d = IntMatrix::from_rows({{4, 6}, {6, 9}, {2, 3}});
    EXPECT_EQ(oracle::determinantal_divisors(d), bigs({1, 0}));
}

TEST(Snf, MatchesOracleOnFrozenFixtures) {
    for (const auto& m : {IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
                          IntMatrix::from_rows({{2, 0}, {0, 3}}), IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}),
                          IntMatrix::from_rows({{0, 0}, {0, 0}})}) {
        auto snf = smith_normal_form(m);
        EXPECT_EQ(snf.invariant_factors, oracle::invariant_factors(m)) << m.str();
        EXPECT_EQ(snf.left * m * snf.right, snf.diagonal);
    }
}

TEST(Snf, SeededMatricesAgreeWithMinorGcds) {
    std::mt19937_64 rng(404);
    for (std::size_t t = 0; t < 200; ++t) {
        auto m = oracle::random_matrix(rng, t);
        auto snf = smith_normal_form(m);
        ASSERT_EQ(snf.invariant_factors, oracle::invariant_factors(m)) << m.str();
        ASSERT_EQ(snf.left * m * snf.right, snf.diagonal);
        ASSERT_EQ(abs_big(oracle::det(snf.left)), 1);
        ASSERT_EQ(abs_big(oracle::det(snf.right)), 1);
        for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i) {
            const auto& x = snf.invariant_factors[i];
            const auto& y = snf.invariant_factors[i + 1];
            if (x != 0) ASSERT_EQ(y % x, 0);
            else ASSERT_EQ(y, 0);
        }
    }
}

TEST(Snf, DeterminantAgreesWithCofactorExpansion) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> v(-7, 7);
    for (int t = 0; t < 50; ++t) {
        IntMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = v(rng);
        EXPECT_EQ(determinant(m), oracle::det(m));
    }
}

TEST(Snf, SolveIntegerFindsExactSolutionsOnly) {
    auto m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto x = solve_integer(m, bigs({4, 9}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), bigs({4, 9}));
    EXPECT_FALSE(solve_integer(m, bigs({1, 0})).has_value());
}

TEST(Modules, RankIgnoresTorsion) {
    ModCategory Z(0);
    EXPECT_EQ(Z.rank(FGModule::standard(2, {4, 6})), 2u);
    ModCategory F2(2);
    EXPECT_EQ(F2.rank(FGModule::vector_space(2, 3)), 3u);
}

TEST(Modules, RankHarnessOverIntegersAndFields) {
    for (long long p : {0LL, 2LL, 3LL}) {
        ModCategory cat(p);
        auto rep = rank_dimension_check(cat, 120, 17 + p);
        EXPECT_TRUE(rep.passed()) << p;
        EXPECT_GE(rep.count(Status::pass), 100u);
    }
}

TEST(Modules, ShortExactSequenceAddsRanks) {
    ModCategory cat(0);
    auto Z = cat.free(1), Z2 = cat.free(2);
    ModuleHom i{Z, Z2, IntMatrix::from_rows({{1}, {0}})};
    ModuleHom q{Z2, Z, IntMatrix::from_rows({{0, 1}})};
    EXPECT_TRUE(ses_rank_check(cat, i, q).passed());
}

TEST(Modules, PullbackIsUniversal) {
    ModCategory cat(0);
    ModuleHom r{cat.free(2), cat.free(1), IntMatrix::from_rows({{1, 1}})};
    ModuleHom f{cat.free(1), cat.free(1), IntMatrix::from_rows({{2}})};
    auto sq = *cat.pullback(r, f);
    EXPECT_EQ(cat.rank(sq.apex), 2u);
    EXPECT_TRUE(commutes(cat, sq));
}

TEST(Groups, CorpusTablesAreGroupsAndOrdersMatchKeys) {
    FinGrp cat;
    auto gs = group_corpus(16);
    EXPECT_EQ(gs.size(), 42u);
    for (const auto& g : gs) {
        EXPECT_FALSE(cat.validate(cat.identity(g)).has_value()) << g->key();
        for (Elem x = 0; x < g->order(); ++x) EXPECT_EQ(g->mul(x, g->inv(x)), g->id());
    }
}

TEST(Groups, CorpusHasEveryIsomorphismClassUpToSixteen) {
    const std::map<std::size_t, std::size_t> classes{{1, 1}, {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},
                                                     {7, 1}, {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5},
                                                     {13, 1}, {14, 2}, {15, 1}, {16, 14}};
    std::map<std::size_t, std::set<std::string>> seen;
    std::size_t total = 0;
    for (const auto& g : group_corpus(16)) {
        EXPECT_TRUE(seen[g->order()].insert(signature(g)).second) << "duplicate class " << g->key();
        ++total;
    }
    for (auto [n, k] : classes) EXPECT_EQ(seen[n].size(), k) << "order " << n;
    EXPECT_EQ(total, 42u);
}

TEST(Groups, AbelianizationOrders) {
    EXPECT_EQ(abelianization(symmetric3()).ab->order(), 2u);
    EXPECT_EQ(abelianization(quaternion8()).ab->order(), 4u);
    EXPECT_EQ(abelianization(dihedral_group(4)).ab->order(), 4u);
    EXPECT_EQ(abelianization(alternating4()).ab->order(), 3u);
    EXPECT_EQ(abelianization(cyclic_group(6)).ab->order(), 6u);
}

TEST(Groups, PullbackOrderFormula) {
    // |A ×_B C| = |A|·|C|·|im r ∩ im f| / (|im r|·|im f|) for subgroups of an abelian target
    FinGrp cat;
    auto Z4 = cyclic_group(4), Z2 = cyclic_group(2);
    auto r = make_hom(Z4, Z2, {0, 1, 0, 1});
    auto sq = *cat.pullback(r, r);
    EXPECT_EQ(sq.apex->order(), 8u);
    EXPECT_TRUE(is_pullback(cat, sq));
}

TEST(Groups, CardinalityHarness) {
    auto rep = dimension_suite("fingrp", "cardinality", 120, 23);
    EXPECT_TRUE(rep.passed());
    EXPECT_GE(rep.count(Status::pass), 100u);
}

TEST(Groups, TableParsingRejectsNonAssociative) {
    EXPECT_THROW(group_from_table({"e", "a"}, {{"e", "a"}, {"a", "a"}}, "e"), UsageError);
}

TEST(Rings, CharacteristicOfSmallRings) {
    EXPECT_EQ(characteristic(*zmod_ring(6)), NatStarInf(6));
    EXPECT_EQ(characteristic(*f4_ring()), NatStarInf(2));
    EXPECT_EQ(characteristic(*even_mod8_ring()), NatStarInf(4));
    EXPECT_EQ(characteristic(*ring_product({zmod_ring(4), zmod_ring(6)})), NatStarInf(12));
    EXPECT_EQ(characteristic(*dual_ring(zmod_ring(5))), NatStarInf(5));
}

TEST(Rings, CharacteristicHarnessOnAllVariants) {
    for (const char* c : {"ring-n", "ring-1", "ring-u"}) {
        auto rep = dimension_suite(c, "characteristic", 130, 29);
        EXPECT_TRUE(rep.passed()) << c;
        EXPECT_GE(rep.count(Status::pass), 100u) << c;
    }
}

TEST(Rings, QuotientZ4ToZ2IsNotARetractionInNonunitalRings) {
    FinRingCat cat(RingVariant::nonunital);
    auto q = make_ring_hom(zmod_ring(4), zmod_ring(2), {0, 1, 0, 1});
    EXPECT_FALSE(classify_morphism(cat, q).is_retraction());
}

TEST(Rings, SectionRetractionWitnessIsValidated) {
    FinRingCat cat(RingVariant::nonunital);
    auto Z2 = zmod_ring(2);
    auto Z2Z2 = ring_product({Z2, Z2});
    auto s = make_ring_hom(Z2, Z2Z2, {0, 2});
    auto r = make_ring_hom(Z2Z2, Z2, {0, 0, 1, 1});
    EXPECT_TRUE(char_section_retraction_check(cat, s, r).passed());
    auto bad = make_ring_hom(Z2Z2, Z2, {0, 1, 0, 1});
    EXPECT_THROW(char_section_retraction_check(cat, s, bad), UsageError);
}

TEST(Rings, UnitalPullbackWithoutUnitIsRefused) {
    FinRingCat cat(RingVariant::unital);
    auto Z2 = zmod_ring(2);
    auto zero = make_ring_hom(Z2, Z2, {0, 0});
    auto id = cat.identity(Z2);
    EXPECT_FALSE(cat.pullback(zero, zero).has_value() && cat.validate_object(cat.pullback(zero, zero)->apex));
    EXPECT_TRUE(cat.pullback(id, id).has_value());
}

TEST(Rings, CharacteristicLawsSuite) {
    auto rep = characteristic_suite();
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}
