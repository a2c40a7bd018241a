#include "tandim/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace tandim;

namespace {

const std::string root = TANDIM_SOURCE_DIR;

RunConfig cmd(const std::string& command) {
    RunConfig c;
    c.command = command;
    return c;
}

std::string write_temp(const std::string& name, const std::string& body) {
    auto p = std::filesystem::temp_directory_path() / ("tandim_test_" + name);
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST(Cli, VerifyDimReportsSchemaAndConfig) {
    auto c = cmd("verify-dim");
    c.category = "grph-op";
    c.budget = 60;
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.document["schema"], report_schema);
    EXPECT_EQ(r.document["config"]["category"], "grph-op");
    EXPECT_EQ(r.document["config"]["seed"], default_seed);
    EXPECT_GT(r.document["report"]["summary"]["pass"].get<int>(), 0);
}

TEST(Cli, SameSeedGivesIdenticalDocuments) {
    for (const char* category : {"finset-op", "fingrp", "simp-op", "ring-u"}) {
        auto c = cmd("verify-dim");
        c.category = category;
        c.budget = 50;
        c.seed = 99;
        EXPECT_EQ(execute(c).document.dump(), execute(c).document.dump()) << category;
    }
}

TEST(Cli, DifferentSeedsSampleDifferentSquares) {
    auto c = cmd("verify-dim");
    c.category = "finset-op";
    c.budget = 50;
    c.seed = 1;
    auto a = execute(c).document.dump();
    c.seed = 2;
    EXPECT_NE(a, execute(c).document.dump());
}

TEST(Cli, MonoidOverrideOnFinSetOp) {
    auto c = cmd("verify-dim");
    c.category = "finset-op";
    c.budget = 50;
    c.monoid = "nat-max";
    EXPECT_EQ(execute(c).exit_code, 1);
    c.monoid = "nat-add";
    EXPECT_EQ(execute(c).exit_code, 0);
}

TEST(Cli, ObstructionExitsOneWithEquationInSummary) {
    auto c = cmd("obstruct");
    c.category = "mod";
    c.endofunctor = "plus-one-free-rank";
    c.dimension = "rank";
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.summary.find("2 + 2×0 = 2 ≠ 3×1 = 3"), std::string::npos) << r.summary;
}

TEST(Cli, UsageErrorsExitTwo) {
    auto c = cmd("check-tangent");
    c.category = "mod";
    c.structure = "nonsense";
    EXPECT_EQ(execute(c).exit_code, 2);
    EXPECT_EQ(execute(cmd("verify-dim")).exit_code, 2);
    EXPECT_EQ(execute(cmd("frobnicate")).exit_code, 2);
    auto f = cmd("search-finsetop");
    f.format = "yaml";
    EXPECT_EQ(execute(f).exit_code, 2);
    auto b = cmd("betti");
    EXPECT_EQ(execute(b).exit_code, 2);
    b.inputs = {root + "/samples/does-not-exist.json"};
    EXPECT_EQ(execute(b).exit_code, 2);
}

TEST(Cli, MalformedJsonNamesTheLine) {
    auto c = cmd("betti");
    c.inputs = {root + "/tests/data/malformed.json"};
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.summary.find("line 3"), std::string::npos) << r.summary;
}

TEST(Cli, BadFieldNamesThePath) {
    auto c = cmd("betti");
    c.inputs = {root + "/tests/data/bad_facet.json"};
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.summary.find("complex.facets[1][0]"), std::string::npos) << r.summary;
}

TEST(Cli, WrongSchemaIsRejected) {
    auto c = cmd("betti");
    c.inputs = {write_temp("schema.json", R"({"schema": "other/9", "complex": {"labels": ["a"], "facets": [[0]]}})")};
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.summary.find("schema"), std::string::npos);
}

TEST(Cli, BettiSamplesMatchTheirExpectations) {
    auto c = cmd("betti");
    for (const char* s : {"torus", "wedge", "sphere", "balloon"}) c.inputs.push_back(root + "/samples/" + s + ".json");
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 0) << r.document.dump(2);
}

TEST(Cli, BettiMismatchExitsOne) {
    auto c = cmd("betti");
    c.inputs = {write_temp("circle.json",
                           R"({"schema": "tandim.input/1",
                               "complex": {"labels": ["a", "b", "c"], "facets": [["a", "b"], ["b", "c"], ["a", "c"]]},
                               "expect": [1, 0]})")};
    EXPECT_EQ(execute(c).exit_code, 1);
}

TEST(Cli, ComputeSamples) {
    auto c = cmd("compute");
    for (const char* s : {"snf", "rank", "char_z6", "abelianization_s3", "pullback", "pushout"})
        c.inputs.push_back(root + "/samples/" + s + ".json");
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 0) << r.document.dump(2);
    EXPECT_NE(r.document.dump().find("\"6\""), std::string::npos);
}

TEST(Cli, SnfOfSampleMatrix) {
    auto c = cmd("compute");
    c.inputs = {root + "/samples/snf.json"};
    auto r = execute(c);
    ASSERT_EQ(r.exit_code, 0);
    const auto doc = r.document.dump();
    EXPECT_NE(doc.find("2,6,12"), std::string::npos) << doc;
}

TEST(Cli, TextFormatAppendsEntries) {
    auto c = cmd("search-finsetop");
    c.format = "text";
    auto r = execute(c);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(render(r, "text").find("found-exactly-trivial"), std::string::npos);
    EXPECT_EQ(render(r, "json").front(), '{');
}
