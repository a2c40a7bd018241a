#include "oracle.hpp"

#include "tandim/cli.hpp"
#include "tandim/poly.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace tandim;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

struct Criterion {
    std::string name;
    std::function<Outcome()> run;
};

std::string counts(const ViolationReport& r) {
    return "pass " + std::to_string(r.count(Status::pass)) + ", fail " + std::to_string(r.count(Status::fail)) +
           ", n/a " + std::to_string(r.count(Status::not_applicable));
}

Outcome dimension_pairs() {
    std::string detail;
    bool ok = true;
    for (const auto& pair : dimension_pairs_registry()) {
        const auto slash = pair.find('/');
        auto rep = dimension_suite(pair.substr(0, slash), pair.substr(slash + 1), 150, default_seed);
        const bool good = rep.count(Status::fail) == 0 && rep.count(Status::pass) >= 100;
        ok = ok && good;
        if (!good) detail += pair + " [" + counts(rep) + "] ";
    }
    return {ok, ok ? std::to_string(dimension_pairs_registry().size()) + " pairs, each ≥100 squares" : detail};
}

Outcome tangent_axioms() {
    const std::vector<std::pair<std::string, std::string>> suites{
        {"finset-op", "trivial"}, {"mod", "trivial"},   {"mod-2", "mod-double"}, {"mod", "mod-double"},
        {"fingrp", "trivial"},    {"fingrp", "grp-ab"}, {"ring-n", "trivial"},   {"ring-n", "ring-dual"}};
    bool ok = true;
    std::string detail;
    for (const auto& [cat, st] : suites) {
        auto rep = tangent_suite(cat, st, 2);
        std::size_t shallow = 0, unchecked = 0;
        for (const auto& e : rep.entries()) {
            if (e.check.rfind("coverage[", 0) != 0) continue;
            ++shallow;
            if (e.witnesses["checked-depth"].is_null()) ++unchecked;
        }
        if (!rep.passed()) detail += st + "/" + cat + " first failure " + rep.first_failure()->check + "; ";
        if (shallow)
            detail += st + "/" + cat + ": " + std::to_string(shallow) + " objects below depth 2, " +
                      std::to_string(unchecked) + " beyond the " + std::to_string(tangent_size_limit) +
                      "-element limit; ";
        ok = ok && rep.passed() && shallow == 0;
    }
    auto mut = mutation_suite();
    const auto caught = mut.count(Status::pass);
    ok = ok && caught >= 20 && mut.passed();
    return {ok, detail + std::to_string(suites.size()) + " suites with no violations, mutants caught " +
                    std::to_string(caught) + "/" + std::to_string(mutant_catalogue().size())};
}

Outcome weak_equation() {
    auto rep = weak_equation_suite();
    return {rep.passed() && rep.count(Status::pass) > 0, counts(rep)};
}

Outcome strong_dichotomy() {
    auto rep = strong_dichotomy_suite(true);
    bool ok = true;
    for (const char* f : {"F2", "F3"}) {
        for (const auto& [name, a] : std::vector<std::pair<std::string, std::string>>{{"trivial", "1"}, {"mod-double", "2"}}) {
            const auto* e = rep.find(std::string(f) + "/" + name + "/dichotomy");
            ok = ok && e && e->status == Status::pass && e->witnesses["a"] == a;
        }
    }
    std::size_t planted = 0;
    for (const auto& e : rep.entries()) {
        if (e.check.find("fake-triple/dichotomy") == std::string::npos) continue;
        if (e.status != Status::fail || e.lhs.find("= 0") != std::string::npos) ok = false;
        ++planted;
    }
    ok = ok && planted > 0;
    return {ok, "known structures on branches a=1 and a=2, planted candidate violations " + std::to_string(planted)};
}

Outcome free_line() {
    auto rep = free_line_rejection(5);
    return {rep.count(Status::fail) == 6 && rep.entries().size() == 6, counts(rep)};
}

Outcome finsetop_search() {
    auto s = search_cartesian_tangent_finsetop(2);
    const auto* found = s.report.find("found-exactly-trivial");
    const auto* unit = s.report.find("size-2/eliminated-by-unitality");
    const bool ok = s.report.passed() && s.found.size() == 1 && found && found->status == Status::pass && unit &&
                    unit->status == Status::pass;
    return {ok, counts(s.report) + ", survivors " + std::to_string(s.found.size())};
}

Outcome snf_oracle() {
    std::mt19937_64 rng(default_seed);
    const auto start = std::chrono::steady_clock::now();
    std::size_t agree = 0;
    for (std::size_t t = 0; t < 500; ++t) {
        auto m = oracle::random_matrix(rng, t);
        auto snf = smith_normal_form(m);
        if (snf.invariant_factors == oracle::invariant_factors(m) && snf.left * m * snf.right == snf.diagonal &&
            abs_big(oracle::det(snf.left)) == 1 && abs_big(oracle::det(snf.right)) == 1)
            ++agree;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {agree == 500 && secs < 10.0,
            std::to_string(agree) + "/500 agree in " + std::to_string(secs).substr(0, 5) + " s"};
}

Outcome homology_case() {
    auto fixtures = betti_fixture_suite();
    std::size_t witnessed = 0;
    bool ok = fixtures.passed(), equator_gated = false;
    for (const auto& f : simplicial_fixtures()) {
        auto po = pushout_along_retract_inclusion(f.g, f.s, f.r);
        if (!po) continue;
        auto rep = mayer_vietoris_check(*po, 3);
        if (po->witnessed) {
            ok = ok && rep.passed() && rep.count(Status::not_applicable) == 0;
            ++witnessed;
        }
        if (f.name == "equator-in-disk") equator_gated = !po->witnessed && rep.count(Status::not_applicable) == 4;
    }
    ok = ok && witnessed >= 10 && equator_gated;
    return {ok, "betti fixtures " + counts(fixtures) + ", witnessed pushouts " + std::to_string(witnessed) +
                    ", equator " + (equator_gated ? "not applicable" : "NOT gated")};
}

Outcome balloon_case() {
    auto rep = balloon_counterexample();
    const auto* e = rep.find("classical-dimension-equation");
    auto b = betti(balloon_square().balloon, 3);
    const bool ok = e && e->status == Status::fail && e->lhs == "3+1 = 4" && e->rhs == "3+3 = 6" &&
                    b == std::vector<std::size_t>{1, 0, 0, 0};
    return {ok, e ? e->lhs + " against " + e->rhs : "entry missing"};
}

Outcome poly_case() {
    auto rep = poly_counterexample();
    const auto* e = rep.find("degree-equation");
    const bool ok = e && e->status == Status::fail && e->lhs == "3+0 = 3" && e->rhs == "2+2 = 4";
    return {ok, e ? e->lhs + " against " + e->rhs : "entry missing"};
}

Outcome characteristic_case() {
    auto rep = characteristic_suite();
    return {rep.passed(), counts(rep)};
}

Outcome determinism_case() {
    auto dump_all = [] {
        std::string s;
        for (const auto& pair : dimension_pairs_registry()) {
            RunConfig c;
            c.command = "verify-dim";
            c.category = pair.substr(0, pair.find('/'));
            c.budget = 60;
            s += execute(c).document.dump();
        }
        RunConfig t;
        t.command = "check-tangent";
        t.category = "mod";
        t.structure = "mod-double";
        s += execute(t).document.dump();
        RunConfig f;
        f.command = "search-finsetop";
        s += execute(f).document.dump();
        return s;
    };
    const auto a = dump_all(), b = dump_all();
    return {a == b, std::to_string(a.size()) + " bytes per run"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"dimension harness on every registered pair", dimension_pairs},
        {"tangent axioms at depth 2 and mutant detection", tangent_axioms},
        {"weak dimension equation", weak_equation},
        {"strong dichotomy", strong_dichotomy},
        {"free-line endofunctor rejected", free_line},
        {"FinSet^op search finds only the trivial structure", finsetop_search},
        {"Smith normal form against determinantal divisors", snf_oracle},
        {"Betti fixtures and Mayer-Vietoris", homology_case},
        {"balloon counterexample", balloon_case},
        {"polynomial-functor counterexample", poly_case},
        {"characteristic laws", characteristic_case},
        {"byte-identical reports", determinism_case},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].name << ": " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
