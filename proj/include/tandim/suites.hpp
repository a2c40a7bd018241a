#pragma once

/// @file suites.hpp
/// @brief Registries of categories, dimensions and structures, and the seeded verification suites
///        shared by the command-line tool and the acceptance run.

#include "tandim/fingrp.hpp"
#include "tandim/finring.hpp"
#include "tandim/finset_tangent.hpp"
#include "tandim/graph.hpp"
#include "tandim/homology.hpp"
#include "tandim/mod_tangent.hpp"
#include "tandim/poly.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tandim {

inline constexpr std::uint64_t default_seed = 20240611;

inline const std::vector<std::string>& dimension_pairs_registry() {
    static const std::vector<std::string> pairs{"finset-op/cardinality", "grph-op/vertex-count", "fingrp/cardinality",
                                                "ring-n/characteristic", "ring-1/characteristic",
                                                "ring-u/characteristic", "mod/rank", "simp-op/betti"};
    return pairs;
}

inline const std::vector<std::string>& structure_registry() {
    static const std::vector<std::string> s{"trivial", "mod-double", "grp-ab", "ring-dual"};
    return s;
}

inline std::string default_dimension(const std::string& category) {
    if (category == "finset-op" || category == "fingrp") return "cardinality";
    if (category == "grph-op") return "vertex-count";
    if (category.rfind("ring-", 0) == 0) return "characteristic";
    if (category.rfind("mod", 0) == 0) return "rank";
    if (category == "simp-op") return "betti";
    throw UsageError("unknown category '" + category + "'");
}

inline RingVariant ring_variant_of(const std::string& category) {
    if (category == "ring-n") return RingVariant::nonunital;
    if (category == "ring-1") return RingVariant::unital;
    if (category == "ring-u") return RingVariant::unit_preserving;
    throw UsageError("unknown ring category '" + category + "'");
}

/// "mod" is Z-modules, "mod-p" vector spaces over F_p.
inline long long module_modulus(const std::string& category) {
    if (category == "mod") return 0;
    if (category.rfind("mod-", 0) == 0) {
        long long p = 0;
        try {
            p = std::stoll(category.substr(4));
        } catch (const std::exception&) {
            throw UsageError("bad module category '" + category + "'");
        }
        if (p < 2) throw UsageError("bad module category '" + category + "'");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw UsageError("module category '" + category + "' needs a prime");
        return p;
    }
    throw UsageError("unknown module category '" + category + "'");
}

inline std::vector<Group> group_harness_corpus() { return group_corpus(8); }

inline std::vector<Ring> ring_harness_corpus(RingVariant v, std::size_t max_order = 8) {
    FinRingCat cat(v);
    std::vector<Ring> out;
    for (const auto& r : ring_corpus(max_order))
        if (!cat.validate_object(r)) out.push_back(r);
    return out;
}

namespace detail {

template <class C>
ViolationReport sampled_harness(const C& cat, std::vector<typename C::Object> objects,
                                const DimensionFunction<typename C::Object>& dim, std::size_t budget,
                                std::uint64_t seed) {
    HomIndex<C> index(cat, std::move(objects));
    auto squares = sample_admissible_squares(cat, index, budget, seed);
    return verify_dimension_harness(cat, dim, squares);
}

}  // namespace detail

/// Seeded admissible squares for one (category, dimension) pair.
inline ViolationReport dimension_suite(const std::string& category, const std::string& dimension,
                                       std::size_t budget, std::uint64_t seed,
                                       const std::string& monoid = {}) {
    const std::string expect = default_dimension(category);
    if (dimension != expect)
        throw UsageError("dimension '" + dimension + "' is not registered for '" + category + "' (use '" + expect + "')");
    ViolationReport rep;
    if (category == "finset-op") {
        FinSetOp cat;
        rep = detail::sampled_harness(cat, finset_corpus(3),
                                      cardinality_dimension(monoid.empty() ? nat_add() : monoid_by_tag(monoid)),
                                      budget, seed);
    } else if (category == "grph-op") {
        rep = graph_dimension_check(budget, seed);
    } else if (category == "fingrp") {
        FinGrp cat;
        rep = detail::sampled_harness(cat, group_harness_corpus(), cardinality_mul_dimension(), budget, seed);
    } else if (category.rfind("ring-", 0) == 0) {
        auto v = ring_variant_of(category);
        FinRingCat cat(v);
        rep = detail::sampled_harness(cat, ring_harness_corpus(v), char_dimension(v), budget, seed);
    } else if (category.rfind("mod", 0) == 0) {
        ModCategory cat(module_modulus(category));
        rep = rank_dimension_check(cat, budget, seed);
    } else if (category == "simp-op") {
        SimpOp cat;
        rep = detail::sampled_harness(cat, simplicial_corpus(), betti_sequence_dimension(), budget, seed);
    }
    if (!monoid.empty() && category != "finset-op")
        rep.add("monoid-override", Status::not_applicable,
                Json{{"monoid", monoid}, {"reason", "only the FinSet^op cardinality takes a monoid override"}});
    rep.set_subject(category + "/" + dimension + " (seed " + std::to_string(seed) + ", budget " +
                    std::to_string(budget) + ")");
    return rep;
}

/// Largest tangent power an axiom run may build, in elements.
inline constexpr std::uint64_t tangent_size_limit = std::uint64_t{1} << 22;

/// Depth assigned to each corpus object; nullopt when even depth 0 would exceed the size limit.
template <class Obj>
struct DepthPlan {
    struct Item {
        Obj object;
        std::optional<std::size_t> depth;
        BigInt largest;  ///< size of the largest power built at the assigned (or smallest) depth
    };
    std::vector<Item> items;
};

/// A run at depth d builds T^(max(d,1)+2) X; take the deepest d ≤ requested that stays under the limit.
template <class Obj, class PowerSize>
DepthPlan<Obj> plan_depths(const std::vector<Obj>& objects, std::size_t requested, PowerSize&& power_size) {
    DepthPlan<Obj> plan;
    for (const auto& x : objects) {
        typename DepthPlan<Obj>::Item it{x, std::nullopt, 0};
        for (std::size_t d = requested + 1; d-- > 0;) {
            it.largest = power_size(x, std::max<std::size_t>(d, 1) + 2);
            if (it.largest <= tangent_size_limit) {
                it.depth = d;
                break;
            }
        }
        plan.items.push_back(std::move(it));
    }
    return plan;
}

/// |T^k G| = |G|·|Ab G|^(2^k − 1) for G ↦ G × Ab(G).
inline BigInt grp_tangent_power_size(const Group& g, std::size_t k) {
    BigInt ab = abelianization(g).ab->order(), out = g->order();
    for (std::size_t i = 0; i + 1 < (std::size_t{1} << k); ++i) out *= ab;
    return out;
}

/// |T^k R| = |R|^(2^k) for dual numbers.
inline BigInt ring_dual_power_size(const Ring& r, std::size_t k) {
    BigInt out = 1;
    for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) out *= r->order();
    return out;
}

namespace detail {

/// Up to `limit` non-constant maps between distinct corpus objects, in enumeration order.
template <class C>
std::vector<typename C::Morphism> sample_morphisms(const C& cat, const std::vector<typename C::Object>& objs,
                                                   std::size_t limit) {
    std::vector<typename C::Morphism> out;
    for (std::size_t i = 0; i < objs.size() && out.size() < limit; ++i)
        for (std::size_t j = 0; j < objs.size() && out.size() < limit; ++j) {
            if (i == j) continue;
            auto hs = cat.homs(objs[i], objs[j]);
            if (!hs) continue;
            for (auto& h : *hs) {
                std::set<Elem> img(h.map->begin(), h.map->end());
                if (img.size() > 1) {
                    out.push_back(h);
                    break;
                }
            }
        }
    return out;
}

/// Runs each depth bucket of the plan, morphisms with the deepest one, and records every object
/// checked below the requested depth as a not-applicable coverage entry.
template <class C, class Obj>
ViolationReport planned_axioms(const C& cat, const TangentStructure<C>& ts, const DepthPlan<Obj>& plan,
                               std::size_t requested) {
    ViolationReport rep;
    std::map<std::size_t, std::vector<Obj>, std::greater<>> buckets;
    for (const auto& it : plan.items)
        if (it.depth) buckets[*it.depth].push_back(it.object);
    bool first = true;
    for (const auto& [d, objs] : buckets) {
        auto morphs = first ? sample_morphisms(cat, objs, 6) : std::vector<typename C::Morphism>{};
        rep.merge(check_tangent_axioms(cat, ts, objs, morphs, d), "depth-" + std::to_string(d));
        first = false;
    }
    for (const auto& it : plan.items) {
        if (it.depth && *it.depth == requested) continue;
        rep.add("coverage[" + cat.describe(it.object) + "]", Status::not_applicable,
                Json{{"requested-depth", requested},
                     {"checked-depth", it.depth ? Json(*it.depth) : Json(nullptr)},
                     {"largest-power", it.largest.str()},
                     {"limit", tangent_size_limit}});
    }
    return rep;
}

}  // namespace detail

inline std::vector<FGModule> module_tangent_corpus(long long p) {
    if (p == 0) return mod_corpus();
    std::vector<FGModule> out;
    for (std::size_t n = 0; n <= 3; ++n) out.push_back(FGModule::vector_space(p, n));
    return out;
}

inline std::vector<ModuleHom> module_tangent_morphisms(long long p) {
    if (p == 0) return mod_corpus_morphisms();
    auto V = [p](std::size_t n) { return FGModule::vector_space(p, n); };
    return {ModuleHom{V(1), V(2), IntMatrix::from_rows({{1}, {1}})},
            ModuleHom{V(2), V(1), IntMatrix::from_rows({{1, p - 1}})},
            ModuleHom{V(2), V(3), IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}})},
            ModuleHom{V(3), V(3), IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})}};
}

/// The axiom suite and universality for a registered structure on its corpus.
inline ViolationReport tangent_suite(const std::string& category, const std::string& structure, std::size_t depth) {
    ViolationReport rep;
    if (structure == "trivial") {
        if (category == "finset-op") {
            FinSetOp cat;
            rep = check_tangent_axioms(cat, trivial_tangent(cat), finset_corpus(3), detail::finsetop_test_morphisms(),
                                       depth);
        } else if (category.rfind("mod", 0) == 0) {
            ModCategory cat(module_modulus(category));
            rep = check_tangent_axioms(cat, trivial_tangent(cat), module_tangent_corpus(cat.modulus()),
                                       module_tangent_morphisms(cat.modulus()), depth);
        } else if (category == "fingrp") {
            FinGrp cat;
            auto objs = group_corpus(16);
            rep = check_tangent_axioms(cat, trivial_tangent(cat), objs, detail::sample_morphisms(cat, objs, 12), depth);
        } else if (category.rfind("ring-", 0) == 0) {
            FinRingCat cat(ring_variant_of(category));
            auto objs = ring_harness_corpus(cat.variant(), 16);
            rep = check_tangent_axioms(cat, trivial_tangent(cat), objs, detail::sample_morphisms(cat, objs, 12), depth);
        } else {
            throw UsageError("structure 'trivial' is not registered on '" + category + "'");
        }
    } else if (structure == "mod-double") {
        if (category.rfind("mod", 0) != 0) throw UsageError("structure 'mod-double' lives on mod or mod-<p>");
        ModCategory cat(module_modulus(category));
        rep = check_tangent_axioms(cat, mod_double(cat), module_tangent_corpus(cat.modulus()),
                                   module_tangent_morphisms(cat.modulus()), depth);
    } else if (structure == "grp-ab") {
        if (category != "fingrp") throw UsageError("structure 'grp-ab' lives on fingrp");
        FinGrp cat;
        auto plan = plan_depths(group_corpus(16), depth, grp_tangent_power_size);
        rep = detail::planned_axioms(cat, grp_tangent(cat), plan, depth);
    } else if (structure == "ring-dual") {
        if (category != "ring-n") throw UsageError("structure 'ring-dual' lives on ring-n");
        FinRingCat cat(RingVariant::nonunital);
        auto plan = plan_depths(ring_corpus(16), depth, ring_dual_power_size);
        rep = detail::planned_axioms(cat, ring_dual_tangent(cat), plan, depth);
    } else {
        throw UsageError("unknown structure '" + structure + "'");
    }
    rep.set_subject(structure + " on " + category + " (depth " + std::to_string(depth) + ")");
    return rep;
}

/// dim(T²X) + 2·dim(X) = 3·dim(TX) in each dimension's monoid, over each structure's corpus.
inline ViolationReport weak_equation_suite() {
    ViolationReport rep("weak dimension equation");
    {
        FinSetOp cat;
        auto ts = trivial_tangent(cat);
        for (const auto& x : finset_corpus(3)) rep.add(check_weak_equation(cat, ts, cardinality_dimension(), x));
    }
    for (long long p : {0LL, 2LL, 3LL}) {
        ModCategory cat(p);
        auto dim = rank_dimension(cat);
        auto triv = trivial_tangent(cat);
        auto dbl = mod_double(cat);
        for (const auto& x : module_tangent_corpus(p)) {
            rep.add(check_weak_equation(cat, triv, dim, x));
            rep.add(check_weak_equation(cat, dbl, dim, x));
        }
    }
    {
        FinGrp cat;
        auto ts = grp_tangent(cat);
        auto dim = cardinality_mul_dimension();
        for (const auto& g : group_corpus(16)) rep.add(check_weak_equation(cat, ts, dim, g));
    }
    {
        FinRingCat cat(RingVariant::nonunital);
        auto ts = ring_dual_tangent(cat);
        auto dim = char_dimension();
        for (const auto& r : ring_corpus(16)) rep.add(check_weak_equation(cat, ts, dim, r));
    }
    return rep;
}

/// Strong dichotomy over F_2 and F_3, including the planted V ↦ V³ candidate.
inline ViolationReport strong_dichotomy_suite(bool include_planted = true) {
    ViolationReport rep("strong dimension dichotomy");
    for (long long p : {2LL, 3LL}) rep.merge(finvect_classification_check(p, 3, include_planted), "F" + std::to_string(p));
    return rep;
}

/// The weak equation against V ↦ V ⊕ Z on Z^n, n ≤ max_n.
inline ViolationReport free_line_rejection(std::size_t max_n = 5) {
    ModCategory cat(0);
    std::vector<FGModule> objs;
    for (std::size_t n = 0; n <= max_n; ++n) objs.push_back(cat.free(n));
    return reject_endofunctor_by_dimension(cat, endofunctor_of(mod_plus_free(cat)), rank_dimension(cat), objs);
}

/// Registered module endofunctors by tag.
inline FunctorData<ModCategory, ModCategory> mod_endofunctor(const ModCategory& cat, const std::string& name) {
    if (name == "plus-one-free-rank") return endofunctor_of(mod_plus_free(cat));
    if (name == "mod-double") return endofunctor_of(mod_double(cat));
    if (name == "trivial") return endofunctor_of(trivial_tangent(cat));
    if (name == "triple") return mod_triple_functor();
    throw UsageError("unknown endofunctor '" + name + "'");
}

inline ViolationReport obstruct_suite(const std::string& category, const std::string& endofunctor,
                                      const std::string& dimension) {
    if (category.rfind("mod", 0) != 0) throw UsageError("obstruct: endofunctors are registered on mod only");
    if (dimension != "rank") throw UsageError("obstruct: dimension '" + dimension + "' is not registered on mod");
    ModCategory cat(module_modulus(category));
    std::vector<FGModule> objs;
    for (std::size_t n = 0; n <= 5; ++n) objs.push_back(cat.free(n));
    return reject_endofunctor_by_dimension(cat, mod_endofunctor(cat, endofunctor), rank_dimension(cat), objs);
}

/// Characteristic laws on the ring corpus.
inline ViolationReport characteristic_suite() {
    ViolationReport rep("characteristic laws");
    auto rings = ring_corpus(16);
    std::size_t products = 0, product_fail = 0;
    for (const auto& a : rings)
        for (const auto& b : rings) {
            auto ab = ring_product({a, b});
            ++products;
            if (!(characteristic(*ab) == lcm(characteristic(*a), characteristic(*b)))) {
                ++product_fail;
                rep.add("char-of-product[" + a->key() + "," + b->key() + "]", Status::fail, Json::object(),
                        to_string(DimValue(characteristic(*ab))),
                        to_string(DimValue(lcm(characteristic(*a), characteristic(*b)))));
            }
        }
    rep.expect("char-of-product", product_fail == 0, Json{{"pairs", products}});

    FinRingCat cat(RingVariant::nonunital);
    HomIndex<FinRingCat> index(cat, ring_corpus(8));
    std::size_t pairs = 0;
    for (const auto& k : index.classified())
        if (k.cls.as_section) {
            ++pairs;
            auto r = char_section_retraction_check(cat, k.cls.as_section->s, k.cls.as_section->r);
            if (!r.passed()) rep.merge(r, "section[" + cat.describe(k.f) + "]");
        }
    rep.expect("char-divides-along-sections", rep.passed(), Json{{"pairs", pairs}});

    auto ts = ring_dual_tangent(cat);
    std::size_t checked = 0, bad = 0;
    for (const auto& r : rings) {
        auto c0 = characteristic(*r), c1 = characteristic(*ts.T(r)), c2 = characteristic(*ts.T2(r));
        ++checked;
        if (!(c1 == c0) || !(c2 == c1)) {
            ++bad;
            rep.add("dual-preserves-char[" + r->key() + "]", Status::fail, Json::object(),
                    to_string(DimValue(c0)) + "," + to_string(DimValue(c1)) + "," + to_string(DimValue(c2)));
        }
    }
    rep.expect("dual-char-factor-1", bad == 0, Json{{"rings", checked}});
    return rep;
}

/// Betti numbers of the named fixtures.
inline ViolationReport betti_fixture_suite() {
    ViolationReport rep("betti fixtures");
    struct Fx {
        std::string name;
        SimplicialComplex k;
        std::vector<std::size_t> want;
    };
    std::vector<Fx> fx{{"point", cx::point(), {1, 0, 0}},
                       {"circle", cx::cycle(3), {1, 1, 0}},
                       {"sphere", cx::tetra_boundary(), {1, 0, 1}},
                       {"wedge-of-two-circles", cx::wedge_circles(), {1, 2, 0}},
                       {"torus", cx::torus(), {1, 2, 1}}};
    for (const auto& f : fx) {
        auto b = betti(f.k, 2);
        std::string got, want;
        for (std::size_t i = 0; i < 3; ++i) {
            got += (i ? "," : "") + std::to_string(b[i]);
            want += (i ? "," : "") + std::to_string(f.want[i]);
        }
        rep.expect("betti[" + f.name + "]", b == f.want, Json{{"vertices", f.k.vertex_count()}}, got, want);
    }
    return rep;
}

inline ViolationReport mayer_vietoris_suite(std::size_t nmax = 3) {
    ViolationReport rep("pushouts along retract inclusions");
    for (const auto& f : simplicial_fixtures()) {
        auto po = pushout_along_retract_inclusion(f.g, f.s, f.r);
        if (!po) {
            rep.add(f.name, Status::not_applicable, Json{{"reason", "gluing is not faithful"}});
            continue;
        }
        rep.merge(mayer_vietoris_check(*po, nmax), f.name);
    }
    return rep;
}

/// Single-map mutations of the registered structures; each mutant's report should fail.
struct Mutant {
    std::string name;
    std::function<ViolationReport()> run;
};

inline std::vector<Mutant> mutant_catalogue() {
    std::vector<Mutant> out;

    auto mod_mutant = [&out](const std::string& label, const std::string& family,
                             std::function<ModuleHom(const ModCategory&, const FGModule&)> fn) {
        out.push_back({"mod-double~" + label, [label, family, fn] {
                           ModCategory cat(0);
                           auto ts = with_family(mod_double(cat), family,
                                                 [&cat, fn](const FGModule& v) { return fn(cat, v); }, label);
                           std::vector<FGModule> objs{cat.free(1), cat.free(2), FGModule::standard(0, {6})};
                           return check_tangent_axioms(cat, ts, objs, mod_corpus_morphisms(), 1);
                       }});
    };
    auto dbl = [](const FGModule& v) { return direct_sum(v, v); };
    auto blocks = [](std::size_t b, const std::vector<std::pair<std::size_t, std::size_t>>& ones, std::size_t cols,
                     std::size_t n, long long scale = 1) {
        IntMatrix m(b * n, cols * n);
        for (auto [r, c] : ones)
            for (std::size_t i = 0; i < n; ++i) m(r * n + i, c * n + i) = scale;
        return m;
    };
    mod_mutant("p=second", "p", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{dbl(v), v, blocks(1, {{0, 1}}, 2, v.gens())};
    });
    mod_mutant("p=sum", "p", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{dbl(v), v, blocks(1, {{0, 0}, {0, 1}}, 2, v.gens())};
    });
    mod_mutant("zero=diagonal", "zero", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{v, dbl(v), blocks(2, {{0, 0}, {1, 0}}, 1, v.gens())};
    });
    mod_mutant("zero=null", "zero", [dbl](const ModCategory& c, const FGModule& v) { return c.zero_map(v, dbl(v)); });
    mod_mutant("plus=first", "plus", [](const ModCategory& c, const FGModule& v) {
        return pullback_power(c, mod_double(c).p(v)).pi0;
    });
    mod_mutant("plus=raw-sum", "plus", [](const ModCategory& c, const FGModule& v) {
        auto P = pullback_power(c, mod_double(c).p(v));
        return c.add(P.pi0, P.pi1);
    });
    mod_mutant("lift=base-only", "lift", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{dbl(v), dbl(dbl(v)), blocks(4, {{0, 0}}, 2, v.gens())};
    });
    mod_mutant("lift=twice", "lift", [dbl, blocks](const ModCategory&, const FGModule& v) {
        auto m = blocks(4, {{0, 0}}, 2, v.gens());
        for (std::size_t i = 0; i < v.gens(); ++i) m(3 * v.gens() + i, v.gens() + i) = 2;
        return ModuleHom{dbl(v), dbl(dbl(v)), m};
    });
    mod_mutant("lift=spread", "lift", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{dbl(v), dbl(dbl(v)), blocks(4, {{0, 0}, {1, 1}, {3, 1}}, 2, v.gens())};
    });
    mod_mutant("flip=identity", "flip", [dbl](const ModCategory& c, const FGModule& v) { return c.identity(dbl(dbl(v))); });
    mod_mutant("flip=swap-halves", "flip", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{dbl(dbl(v)), dbl(dbl(v)), blocks(4, {{1, 0}, {0, 1}, {3, 2}, {2, 3}}, 4, v.gens())};
    });
    mod_mutant("flip=swap-outer", "flip", [dbl, blocks](const ModCategory&, const FGModule& v) {
        return ModuleHom{dbl(dbl(v)), dbl(dbl(v)), blocks(4, {{0, 0}, {1, 1}, {3, 2}, {2, 3}}, 4, v.gens())};
    });

    auto grp_mutant = [&out](const std::string& label, const std::string& family,
                             std::function<GroupHom(const FinGrp&, const Group&)> fn) {
        out.push_back({"grp-ab~" + label, [label, family, fn] {
                           FinGrp cat;
                           auto ts = with_family(grp_tangent(cat), family,
                                                 [&cat, fn](const Group& g) { return fn(cat, g); }, label);
                           std::vector<Group> objs{cyclic_group(2), cyclic_group(3), symmetric3()};
                           return check_tangent_axioms(cat, ts, objs, {}, 1);
                       }});
    };
    grp_mutant("flip=identity", "flip", [](const FinGrp& c, const Group& g) {
        return c.identity(grp_tangent(c).T2(g));
    });
    grp_mutant("lift=zero-section", "lift", [](const FinGrp& c, const Group& g) {
        auto ts = grp_tangent(c);
        return ts.zero(ts.T(g));
    });
    grp_mutant("zero=graph-of-projection", "zero", [](const FinGrp& c, const Group& g) {
        auto ab = abelianization(g);
        auto TG = grp_ab_object(g);
        std::vector<Elem> t(g->order());
        for (Elem x = 0; x < g->order(); ++x) t[x] = static_cast<Elem>(x * ab.ab->order() + ab.proj(x));
        (void)c;
        return make_hom(g, TG, std::move(t));
    });
    grp_mutant("plus=first", "plus", [](const FinGrp& c, const Group& g) {
        return pullback_power(c, grp_tangent(c).p(g)).pi0;
    });

    auto ring_mutant = [&out](const std::string& label, const std::string& family,
                              std::function<RingHom(const FinRingCat&, const Ring&)> fn) {
        out.push_back({"ring-dual~" + label, [label, family, fn] {
                           FinRingCat cat(RingVariant::nonunital);
                           auto ts = with_family(ring_dual_tangent(cat), family,
                                                 [&cat, fn](const Ring& r) { return fn(cat, r); }, label);
                           std::vector<Ring> objs{zmod_ring(2), zmod_ring(3)};
                           return check_tangent_axioms(cat, ts, objs, {}, 1);
                       }});
    };
    ring_mutant("flip=identity", "flip", [](const FinRingCat& c, const Ring& r) {
        return c.identity(ring_dual_tangent(c).T2(r));
    });
    ring_mutant("lift=zero-section", "lift", [](const FinRingCat& c, const Ring& r) {
        auto ts = ring_dual_tangent(c);
        return ts.zero(ts.T(r));
    });
    ring_mutant("plus=second", "plus", [](const FinRingCat& c, const Ring& r) {
        return pullback_power(c, ring_dual_tangent(c).p(r)).pi1;
    });

    auto triv_mutant = [&out](const std::string& label, const std::string& family,
                              std::function<ModuleHom(const ModCategory&, const FGModule&)> fn) {
        out.push_back({"trivial~" + label, [label, family, fn] {
                           ModCategory cat(0);
                           auto ts = with_family(trivial_tangent(cat), family,
                                                 [&cat, fn](const FGModule& v) { return fn(cat, v); }, label);
                           std::vector<FGModule> objs{cat.free(1), cat.free(2)};
                           return check_tangent_axioms(cat, ts, objs, mod_corpus_morphisms(), 1);
                       }});
    };
    triv_mutant("p=double", "p", [](const ModCategory&, const FGModule& v) {
        return ModuleHom{v, v, BigInt(2) * IntMatrix::identity(v.gens())};
    });
    triv_mutant("flip=negate", "flip", [](const ModCategory&, const FGModule& v) {
        return ModuleHom{v, v, BigInt(-1) * IntMatrix::identity(v.gens())};
    });
    triv_mutant("lift=null", "lift", [](const ModCategory& c, const FGModule& v) { return c.zero_map(v, v); });
    return out;
}

inline ViolationReport mutation_suite() {
    ViolationReport rep("single-map mutants");
    for (const auto& m : mutant_catalogue()) {
        ViolationReport r;
        std::string first;
        try {
            r = m.run();
            if (auto f = r.first_failure()) first = f->check;
        } catch (const std::exception& e) {
            first = std::string("exception: ") + e.what();
        }
        rep.expect("caught[" + m.name + "]", !first.empty(), Json{{"first-failure", first}});
    }
    return rep;
}

}  // namespace tandim
