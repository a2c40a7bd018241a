#pragma once

/// @file mod_tangent.hpp
/// @brief Tangent structures on modules: V ↦ V×V, the identity structure, the V ↦ V×Z candidate,
///        and the F_p classification check.

#include "tandim/modrank.hpp"
#include "tandim/tangent.hpp"

#include <string>
#include <vector>

namespace tandim {

namespace detail {

/// Rows [k·n, (k+1)·n) of an identity-like selector: blocks × n by n, identity in block k.
inline IntMatrix unit_block(std::size_t blocks, std::size_t k, std::size_t n) {
    IntMatrix m(blocks * n, n);
    for (std::size_t i = 0; i < n; ++i) m(k * n + i, i) = 1;
    return m;
}

/// Matrix sending block j of the source to block perm[j] of the target.
inline IntMatrix block_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
    const std::size_t b = perm.size();
    IntMatrix m(b * n, b * n);
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < n; ++i) m(perm[j] * n + i, j * n + i) = 1;
    return m;
}

}  // namespace detail

/// T(V) = V ⊕ V, T(f) = f ⊕ f; p = π0, 0 = ⟨1, 0⟩, + adds the second coordinates,
/// ℓ(v,a) = (v,0,0,a), c swaps the middle coordinates of T²V = (v,a,b,c).
inline TangentStructure<ModCategory> mod_double(const ModCategory& c) {
    TangentStructure<ModCategory> ts;
    ts.name = "mod-double";
    ts.T = [](const FGModule& v) { return direct_sum(v, v); };
    ts.Tm = [](const ModuleHom& f) {
        return ModuleHom{direct_sum(f.dom, f.dom), direct_sum(f.cod, f.cod), block_diag(f.mat, f.mat)};
    };
    ts.p = [](const FGModule& v) {
        return ModuleHom{direct_sum(v, v), v, detail::unit_block(2, 0, v.gens()).transpose()};
    };
    ts.zero = [](const FGModule& v) {
        return ModuleHom{v, direct_sum(v, v), detail::unit_block(2, 0, v.gens())};
    };
    ts.plus = [&c, p = ts.p, zero = ts.zero](const FGModule& v) {
        auto P = pullback_power(c, p(v));
        auto base = c.compose(zero(v), c.compose(p(v), P.pi0));
        return c.sub(c.add(P.pi0, P.pi1), base);
    };
    ts.lift = [](const FGModule& v) {
        const std::size_t n = v.gens();
        IntMatrix m(4 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
            m(3 * n + i, n + i) = 1;
        }
        auto TV = direct_sum(v, v);
        return ModuleHom{TV, direct_sum(TV, TV), m};
    };
    ts.flip = [](const FGModule& v) {
        auto TV = direct_sum(v, v);
        auto TTV = direct_sum(TV, TV);
        return ModuleHom{TTV, TTV, detail::block_permutation({0, 2, 1, 3}, v.gens())};
    };
    return ts;
}

/// The candidate T(V) = V ⊕ Z with projection, inclusion, fibre addition and ℓ(v,a) = (v,0,a).
inline TangentStructure<ModCategory> mod_plus_free(const ModCategory& c) {
    TangentStructure<ModCategory> ts;
    ts.name = "plus-one-free-rank";
    auto line = c.free(1);
    ts.T = [line](const FGModule& v) { return direct_sum(v, line); };
    ts.Tm = [line](const ModuleHom& f) {
        return ModuleHom{direct_sum(f.dom, line), direct_sum(f.cod, line),
                         block_diag(f.mat, IntMatrix::identity(1))};
    };
    ts.p = [line](const FGModule& v) {
        IntMatrix m(v.gens(), v.gens() + 1);
        for (std::size_t i = 0; i < v.gens(); ++i) m(i, i) = 1;
        return ModuleHom{direct_sum(v, line), v, m};
    };
    ts.zero = [line](const FGModule& v) {
        IntMatrix m(v.gens() + 1, v.gens());
        for (std::size_t i = 0; i < v.gens(); ++i) m(i, i) = 1;
        return ModuleHom{v, direct_sum(v, line), m};
    };
    ts.plus = [&c, p = ts.p, zero = ts.zero](const FGModule& v) {
        auto P = pullback_power(c, p(v));
        return c.sub(c.add(P.pi0, P.pi1), c.compose(zero(v), c.compose(p(v), P.pi0)));
    };
    ts.lift = [line](const FGModule& v) {
        const std::size_t n = v.gens();
        IntMatrix m(n + 2, n + 1);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        m(n + 1, n) = 1;
        auto TV = direct_sum(v, line);
        return ModuleHom{TV, direct_sum(TV, line), m};
    };
    ts.flip = [&c, line](const FGModule& v) { return c.identity(direct_sum(direct_sum(v, line), line)); };
    return ts;
}

inline FunctorData<ModCategory, ModCategory> endofunctor_of(const TangentStructure<ModCategory>& ts) {
    return FunctorData<ModCategory, ModCategory>{ts.name, ts.T, ts.Tm};
}

/// V ↦ V ⊕ V ⊕ V; only its object and morphism maps are used.
inline FunctorData<ModCategory, ModCategory> mod_triple_functor() {
    return FunctorData<ModCategory, ModCategory>{
        "triple",
        [](const FGModule& v) { return direct_sum(direct_sum(v, v), v); },
        [](const ModuleHom& f) {
            return ModuleHom{direct_sum(direct_sum(f.dom, f.dom), f.dom),
                             direct_sum(direct_sum(f.cod, f.cod), f.cod),
                             block_diag(block_diag(f.mat, f.mat), f.mat)};
        }};
}

inline std::vector<FGModule> mod_corpus() {
    return {FGModule::free(0),           FGModule::free(1),
            FGModule::free(2),           FGModule::standard(0, {6}),
            FGModule::standard(1, {4}),  FGModule::vector_space(2, 2),
            FGModule::vector_space(3, 1)};
}

inline std::vector<ModuleHom> mod_corpus_morphisms() {
    auto Z = FGModule::free(1), Z2 = FGModule::free(2), Z6 = FGModule::standard(0, {6}),
         ZZ4 = FGModule::standard(1, {4}), F22 = FGModule::vector_space(2, 2),
         F3 = FGModule::vector_space(3, 1), O = FGModule::free(0);
    auto M = [](std::vector<std::vector<long long>> rows, std::size_t cols = 0) {
        return IntMatrix::from_rows(rows, cols);
    };
    return {ModuleHom{Z, Z2, M({{1}, {2}})},
            ModuleHom{Z2, Z, M({{3, -1}})},
            ModuleHom{Z, Z6, M({{1}})},
            ModuleHom{Z6, Z6, M({{5}})},
            ModuleHom{ZZ4, Z6, M({{2, 3}})},
            ModuleHom{F22, Z6, M({{3, 0}})},
            ModuleHom{Z6, F3, M({{1}})},
            ModuleHom{Z2, ZZ4, M({{1, 0}, {1, 1}})},
            ModuleHom{O, Z, IntMatrix(1, 0)},
            ModuleHom{Z2, F22, M({{1, 1}, {0, 1}})}};
}

/// Cartesian candidates over F_p: multiplicativity, the dichotomy and Dim T(F) ∈ {1,2}; the two
/// known structures are also run through the full axiom suite.
inline ViolationReport finvect_classification_check(long long p, std::size_t max_dim,
                                                    bool include_fake = true) {
    ModCategory cat(p);
    ViolationReport rep("Cartesian tangent candidates over F_" + std::to_string(p));
    auto rig_dim = rank_dimension(cat, int_rig());
    auto F = cat.free(1);

    struct Candidate {
        std::string name;
        std::function<FGModule(const FGModule&)> T;
        std::optional<TangentStructure<ModCategory>> ts;
    };
    std::vector<Candidate> cands;
    auto triv = trivial_tangent(cat);
    auto dbl = mod_double(cat);
    cands.push_back({"trivial", triv.T, triv});
    cands.push_back({"mod-double", dbl.T, dbl});
    if (include_fake) cands.push_back({"fake-triple", mod_triple_functor().on_object, std::nullopt});

    std::vector<FGModule> objs;
    for (std::size_t n = 0; n <= max_dim; ++n) objs.push_back(cat.free(n));

    for (const auto& cand : cands) {
        BigInt a = cat.rank(cand.T(F));
        bool mult = true;
        for (std::size_t n = 0; n <= max_dim; ++n)
            mult = mult && BigInt(cat.rank(cand.T(cat.free(n)))) == a * n;
        rep.expect(cand.name + "/multiplicative", mult, Json{{"a", a.str()}});
        StrongDimension<FGModule> sd{rig_dim, a};
        bool clean = true;
        Json branches = Json::array();
        for (const auto& X : objs) {
            auto res = check_strong_dichotomy(sd, X);
            branches.push_back(branch_name(res.branch));
            if (res.branch == Branch::violation) {
                clean = false;
                rep.add(cand.name + "/dichotomy[dim " + std::to_string(cat.rank(X)) + "]", Status::fail,
                        Json{{"a", a.str()}, {"branch", "violation"}},
                        "(a-1)(a-2)·dim = " + res.value.str(), "0");
            }
        }
        if (clean)
            rep.add(cand.name + "/dichotomy", Status::pass,
                    Json{{"a", a.str()}, {"branches", branches}});
        rep.expect(cand.name + "/dim-TF-in-{1,2}", a == 1 || a == 2, Json{{"a", a.str()}});
        if (cand.ts) {
            std::vector<ModuleHom> morphs{
                ModuleHom{cat.free(1), cat.free(2), IntMatrix::from_rows({{1}, {1}})},
                ModuleHom{cat.free(2), cat.free(1), IntMatrix::from_rows({{1, p - 1}})}};
            auto ax = check_tangent_axioms(cat, *cand.ts, objs, morphs, 1);
            rep.expect(cand.name + "/axioms", ax.passed(),
                       Json{{"checks", ax.entries().size()}, {"failures", ax.count(Status::fail)}});
        }
    }
    return rep;
}

}  // namespace tandim
