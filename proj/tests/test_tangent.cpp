#include "tandim/suites.hpp"

#include <gtest/gtest.h>

using namespace tandim;

namespace {

struct SuiteCase {
    const char* category;
    const char* structure;
};

std::string case_name(const testing::TestParamInfo<SuiteCase>& info) {
    std::string s = std::string(info.param.structure) + "_on_" + info.param.category;
    for (auto& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    return s;
}

class AxiomSuite : public testing::TestWithParam<SuiteCase> {};

}  // namespace

TEST_P(AxiomSuite, PassesAtDepthOne) {
    auto rep = tangent_suite(GetParam().category, GetParam().structure, 1);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_GT(rep.count(Status::pass), 0u);
}

INSTANTIATE_TEST_SUITE_P(Registered, AxiomSuite,
                         testing::Values(SuiteCase{"finset-op", "trivial"}, SuiteCase{"mod", "trivial"},
                                         SuiteCase{"mod-2", "trivial"}, SuiteCase{"fingrp", "trivial"},
                                         SuiteCase{"ring-n", "trivial"}, SuiteCase{"ring-1", "trivial"},
                                         SuiteCase{"mod", "mod-double"}, SuiteCase{"mod-3", "mod-double"},
                                         SuiteCase{"fingrp", "grp-ab"}, SuiteCase{"ring-n", "ring-dual"}),
                         case_name);

TEST(AxiomSuite, UnregisteredPairsAreUsageErrors) {
    EXPECT_THROW(tangent_suite("fingrp", "mod-double", 1), UsageError);
    EXPECT_THROW(tangent_suite("ring-1", "ring-dual", 1), UsageError);
    EXPECT_THROW(tangent_suite("mod", "nonsense", 1), UsageError);
}

TEST(AxiomSuite, ModDoubleSurvivesDepthTwo) {
    auto rep = tangent_suite("mod", "mod-double", 2);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}

TEST(Mutants, EverySingleMapMutantIsCaught) {
    auto rep = mutation_suite();
    EXPECT_EQ(rep.count(Status::pass), mutant_catalogue().size());
    EXPECT_GE(rep.count(Status::pass), 20u);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}

TEST(WeakEquation, HoldsOnEveryRegisteredStructure) {
    auto rep = weak_equation_suite();
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_GE(rep.count(Status::pass), 100u);
}

TEST(WeakEquation, GroupValuesOnS3) {
    FinGrp cat;
    auto e = check_weak_equation(cat, grp_tangent(cat), cardinality_mul_dimension(), symmetric3());
    EXPECT_EQ(e.status, Status::pass);
    EXPECT_NE(e.lhs.find("1728"), std::string::npos) << e.lhs;
}

TEST(StrongDichotomy, Branches) {
    ModCategory cat(2);
    auto dim = rank_dimension(cat, int_rig());
    auto V = cat.free(2), O = cat.free(0);
    EXPECT_EQ(check_strong_dichotomy(StrongDimension<FGModule>{dim, 1}, V).branch, Branch::a_is_1);
    EXPECT_EQ(check_strong_dichotomy(StrongDimension<FGModule>{dim, 2}, V).branch, Branch::a_is_2);
    EXPECT_EQ(check_strong_dichotomy(StrongDimension<FGModule>{dim, 3}, O).branch, Branch::dim_zero);
    auto bad = check_strong_dichotomy(StrongDimension<FGModule>{dim, 3}, V);
    EXPECT_EQ(bad.branch, Branch::violation);
    EXPECT_EQ(bad.value, 4);
}

TEST(StrongDichotomy, NeedsAnIntegerRig) {
    ModCategory cat(2);
    StrongDimension<FGModule> sd{rank_dimension(cat), 2};
    EXPECT_THROW(check_strong_dichotomy(sd, cat.free(1)), UsageError);
}

TEST(StrongDichotomy, KnownStructuresPassAndPlantedCandidateFails) {
    auto rep = strong_dichotomy_suite(true);
    for (const char* f : {"F2", "F3"}) {
        const auto* triv = rep.find(std::string(f) + "/trivial/dichotomy");
        const auto* dbl = rep.find(std::string(f) + "/mod-double/dichotomy");
        ASSERT_NE(triv, nullptr);
        ASSERT_NE(dbl, nullptr);
        EXPECT_EQ(triv->status, Status::pass);
        EXPECT_EQ(dbl->status, Status::pass);
    }
    std::size_t planted = 0;
    for (const auto& e : rep.entries())
        if (e.check.find("fake-triple") != std::string::npos && e.status == Status::fail) ++planted;
    EXPECT_GT(planted, 0u);
    EXPECT_TRUE(strong_dichotomy_suite(false).passed());
}

TEST(Rejection, FreeLineFailsOnEveryObject) {
    auto rep = free_line_rejection(5);
    EXPECT_EQ(rep.count(Status::fail), 6u);
    ASSERT_EQ(rep.entries().size(), 6u);
    EXPECT_EQ(rep.entries()[3].lhs, "5 + 2×3 = 11");
    EXPECT_EQ(rep.entries()[3].rhs, "3×4 = 12");
}

TEST(Rejection, KnownEndofunctorsPassTheNecessaryCondition) {
    EXPECT_TRUE(obstruct_suite("mod", "mod-double", "rank").passed());
    EXPECT_TRUE(obstruct_suite("mod-3", "trivial", "rank").passed());
    EXPECT_FALSE(obstruct_suite("mod", "triple", "rank").passed());
    EXPECT_THROW(obstruct_suite("fingrp", "trivial", "rank"), UsageError);
}

TEST(FinSetOpSearch, OnlyTheTrivialStructureSurvives) {
    for (std::size_t k : {1u, 2u, 3u}) {
        auto s = search_cartesian_tangent_finsetop(k);
        EXPECT_TRUE(s.report.passed()) << k << "\n" << s.report.to_text();
        ASSERT_EQ(s.found.size(), 1u) << k;
        EXPECT_EQ(s.found.front().k, 1u);
        ASSERT_NE(s.report.find("found-exactly-trivial"), nullptr);
    }
}

TEST(FinSetOpSearch, SizeTwoIsEliminatedByUnitality) {
    auto s = search_cartesian_tangent_finsetop(2);
    const auto* e = s.report.find("size-2/eliminated-by-unitality");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, Status::pass);
}

TEST(FinSetOpSearch, LargerFibresAreExcludedByTheDichotomy) {
    auto s = search_cartesian_tangent_finsetop(3);
    const auto* e = s.report.find("size-3/excluded-by-dichotomy");
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->status, Status::pass);
}

TEST(DifferentialBundle, ProductBundleOverS3) {
    FinGrp cat;
    auto ts = grp_tangent(cat);
    auto db = grp_product_bundle(cat, symmetric3(), cyclic_group(2));
    auto rep = check_differential_bundle(cat, ts, db, 1);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    auto eq = check_diffbun_equations(cat, ts, cardinality_mul_dimension(), db);
    EXPECT_TRUE(eq.passed()) << eq.to_text();
}

TEST(DifferentialBundle, WrongLiftIsRejected) {
    FinGrp cat;
    auto ts = grp_tangent(cat);
    auto db = grp_product_bundle(cat, cyclic_group(2), cyclic_group(2));
    db.lambda = cat.compose(ts.zero(db.E), cat.identity(db.E));
    EXPECT_FALSE(check_differential_bundle(cat, ts, db, 1).passed());
}

TEST(DifferentialBundle, AbelianizationRatio) {
    for (const auto& M : {symmetric3(), quaternion8(), alternating4(), cyclic_group(6)})
        for (const auto& A : {cyclic_group(2), cyclic_group(3)}) EXPECT_TRUE(diffbun_ratio_check(M, A).passed());
    EXPECT_THROW(diffbun_ratio_check(cyclic_group(2), symmetric3()), UsageError);
}

TEST(DepthPlan, PowerSizesMatchConstructedObjects) {
    FinGrp gc;
    auto gt = grp_tangent(gc);
    for (const auto& g : {symmetric3(), cyclic_group(3), quaternion8()})
        EXPECT_EQ(grp_tangent_power_size(g, 2), BigInt(gt.T(gt.T(g))->order())) << g->key();
    FinRingCat rc(RingVariant::nonunital);
    auto rt = ring_dual_tangent(rc);
    for (const auto& r : {zmod_ring(3), f4_ring()})
        EXPECT_EQ(ring_dual_power_size(r, 2), BigInt(rt.T(rt.T(r))->order())) << r->key();
}

TEST(DepthPlan, DeepestFeasibleDepthPerObject) {
    auto plan = plan_depths(std::vector<Group>{cyclic_group(2), cyclic_group(4), cyclic_group(16)}, 2,
                            grp_tangent_power_size);
    ASSERT_EQ(plan.items.size(), 3u);
    EXPECT_EQ(plan.items[0].depth, std::optional<std::size_t>(2));
    EXPECT_EQ(plan.items[1].depth, std::optional<std::size_t>(1));
    EXPECT_FALSE(plan.items[2].depth.has_value());
    EXPECT_EQ(plan.items[2].largest, BigInt(1) << 32);
}

TEST(DepthPlan, ShortfallIsReportedAsCoverage) {
    auto rep = tangent_suite("fingrp", "grp-ab", 2);
    EXPECT_TRUE(rep.passed());
    const auto* z4 = rep.find("coverage[Z/4[4]]");
    ASSERT_NE(z4, nullptr);
    EXPECT_EQ(z4->status, Status::not_applicable);
    EXPECT_EQ(z4->witnesses["checked-depth"], 1);
    const auto* z16 = rep.find("coverage[Z/16[16]]");
    ASSERT_NE(z16, nullptr);
    EXPECT_TRUE(z16->witnesses["checked-depth"].is_null());
    EXPECT_EQ(rep.find("coverage[S3[6]]"), nullptr);
}

TEST(Products, BeyondTheIndexRangeIsUndecidable) {
    EXPECT_THROW(product({cyclic_group(2048), cyclic_group(2048), cyclic_group(2048)}), UndecidableError);
    std::vector<Ring> eight(8, zmod_ring(16));
    EXPECT_THROW(ring_product(eight), UndecidableError);
    EXPECT_NO_THROW(product({cyclic_group(2048), cyclic_group(2048)}));
}
