#pragma once

/// @file finset_tangent.hpp
/// @brief Exhaustive search for Cartesian tangent structures on FinSet^op.

#include "tandim/finset.hpp"
#include "tandim/tangent.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tandim {

/// Structure maps of a Cartesian candidate, all given on the singleton. With K = T(*):
/// p picks `base` in K, plus sends i ∈ K to copy plus_copy[i] of plus_at[i] in K ⊔_base K,
/// lift is K×K → K and flip is K×K → K×K (indices i·k + j), read as functions in FinSet.
struct CartesianCandidate {
    std::size_t k = 1;
    std::size_t base = 0;
    std::vector<std::size_t> plus_copy;
    std::vector<std::size_t> plus_at;
    std::vector<std::size_t> lift;
    std::vector<std::size_t> flip;

    std::string describe_plus() const {
        std::string s;
        for (std::size_t i = 0; i < k; ++i) {
            if (i) s += ",";
            s += std::to_string(i) + "->";
            if (plus_at[i] == base) s += "base";
            else s += (plus_copy[i] == 0 ? "left" : "right") + std::string("(") + std::to_string(plus_at[i]) + ")";
        }
        return s;
    }

    Json to_json() const {
        return Json{{"size", k}, {"p", base}, {"plus", describe_plus()}, {"lift", lift}, {"flip", flip}};
    }
};

/// X × K as a set; for k = 1 the labels of X are kept.
inline FinSetObj tagged_power(const FinSetObj& x, std::size_t k) {
    if (k == 1) return x;
    std::vector<std::string> l;
    for (const auto& s : x.labels())
        for (std::size_t i = 0; i < k; ++i) l.push_back(s + "@" + std::to_string(i));
    return FinSetObj(std::move(l));
}

/// Extends the singleton data coproduct-wise: T(X) = X × K.
inline TangentStructure<FinSetOp> cartesian_structure(std::shared_ptr<const FinSetOp> op, CartesianCandidate cand) {
    using M = FinSetOp::Morphism;
    const std::size_t k = cand.k;
    TangentStructure<FinSetOp> ts;
    ts.name = k == 1 ? "cartesian-1" : "cartesian-" + std::to_string(k) + "[" + cand.to_json().dump() + "]";
    ts.T = [k](const FinSetObj& x) { return tagged_power(x, k); };
    ts.Tm = [k](const M& f) {
        std::vector<std::size_t> t(f.m.dom.size() * k);
        for (std::size_t y = 0; y < f.m.dom.size(); ++y)
            for (std::size_t i = 0; i < k; ++i) t[y * k + i] = f.m.table[y] * k + i;
        return M{FinFn{tagged_power(f.m.dom, k), tagged_power(f.m.cod, k), std::move(t)}};
    };
    ts.p = [k, b = cand.base](const FinSetObj& x) {
        std::vector<std::size_t> t(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) t[i] = i * k + b;
        return M{FinFn{x, tagged_power(x, k), std::move(t)}};
    };
    ts.zero = [k](const FinSetObj& x) {
        std::vector<std::size_t> t(x.size() * k);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = i / k;
        return M{FinFn{tagged_power(x, k), x, std::move(t)}};
    };
    ts.plus = [op, cand, p = ts.p](const FinSetObj& x) {
        const std::size_t k = cand.k;
        auto P = pullback_power(*op, p(x));
        std::vector<std::size_t> t(x.size() * k);
        for (std::size_t e = 0; e < x.size(); ++e)
            for (std::size_t i = 0; i < k; ++i) {
                const auto& leg = cand.plus_copy[i] == 0 ? P.pi0.m : P.pi1.m;
                t[e * k + i] = leg.table[e * k + cand.plus_at[i]];
            }
        return M{FinFn{tagged_power(x, k), P.apex, std::move(t)}};
    };
    ts.lift = [k, l = cand.lift](const FinSetObj& x) {
        auto Tx = tagged_power(x, k);
        std::vector<std::size_t> t(x.size() * k * k);
        for (std::size_t e = 0; e < x.size(); ++e)
            for (std::size_t ij = 0; ij < k * k; ++ij) t[e * k * k + ij] = e * k + l[ij];
        return M{FinFn{tagged_power(Tx, k), Tx, std::move(t)}};
    };
    ts.flip = [k, c = cand.flip](const FinSetObj& x) {
        auto TTx = tagged_power(tagged_power(x, k), k);
        std::vector<std::size_t> t(x.size() * k * k);
        for (std::size_t e = 0; e < x.size(); ++e)
            for (std::size_t ij = 0; ij < k * k; ++ij) t[e * k * k + ij] = e * k * k + c[ij];
        return M{FinFn{TTx, TTx, std::move(t)}};
    };
    return ts;
}

struct FinSetOpSearch {
    std::vector<CartesianCandidate> found;
    std::vector<TangentStructure<FinSetOp>> structures;
    ViolationReport report;
    std::shared_ptr<const FinSetOp> category;
};

namespace detail {

/// Advances a mixed-radix counter with every digit < radix; false after the last value.
inline bool next_tuple(std::vector<std::size_t>& v, std::size_t radix) {
    for (auto& d : v) {
        if (++d < radix) return true;
        d = 0;
    }
    return false;
}

inline std::vector<FinSetOp::Morphism> finsetop_test_morphisms() {
    auto S = [](std::size_t n) { return FinSetObj::range(n); };
    return {{FinFn{S(1), S(2), {1}}},       {FinFn{S(2), S(1), {0, 0}}},     {FinFn{S(3), S(2), {0, 1, 1}}},
            {FinFn{S(2), S(3), {2, 0}}},    {FinFn{S(0), S(1), {}}},         {FinFn{S(2), S(2), {1, 0}}}};
}

/// Structure-map-for-structure-map comparison on the given objects and morphisms.
inline bool same_structure(const FinSetOp& op, const TangentStructure<FinSetOp>& a, const TangentStructure<FinSetOp>& b,
                           const std::vector<FinSetObj>& objs, const std::vector<FinSetOp::Morphism>& morphs) {
    for (const auto& x : objs) {
        if (!(a.T(x) == b.T(x))) return false;
        if (!op.equal(a.p(x), b.p(x)) || !op.equal(a.zero(x), b.zero(x)) || !op.equal(a.plus(x), b.plus(x)) ||
            !op.equal(a.lift(x), b.lift(x)) || !op.equal(a.flip(x), b.flip(x)))
            return false;
    }
    for (const auto& f : morphs)
        if (!op.equal(a.Tm(f), b.Tm(f))) return false;
    return true;
}

}  // namespace detail

/// Candidates T(*) of size 1..max_card: sizes failing the strong dichotomy for cardinality are
/// dropped first; the rest are enumerated in two stages (p, 0, + against the additive bundle laws,
/// then ℓ and c against the full suite), with all checks on sets of size ≤ 3.
inline FinSetOpSearch search_cartesian_tangent_finsetop(std::size_t max_card) {
    if (max_card < 1) throw UsageError("search_cartesian_tangent_finsetop: max_card must be at least 1");
    FinSetOpSearch out;
    auto op = std::make_shared<const FinSetOp>();
    out.category = op;
    out.report = ViolationReport("Cartesian tangent structures on FinSet^op, |T(*)| <= " + std::to_string(max_card));
    auto& rep = out.report;

    const auto objs = finset_corpus(3);
    const auto morphs = detail::finsetop_test_morphisms();
    const auto point = FinSetObj::range(1);
    auto card = cardinality_dimension(int_rig());

    for (std::size_t k = 1; k <= max_card; ++k) {
        const std::string tag = "size-" + std::to_string(k);
        auto dich = check_strong_dichotomy(StrongDimension<FinSetObj>{card, BigInt(k)}, point);
        if (dich.branch == Branch::violation) {
            rep.add(tag + "/excluded-by-dichotomy", Status::pass,
                    Json{{"branch", branch_name(dich.branch)}, {"(a-1)(a-2)|*|", dich.value.str()}});
            continue;
        }

        // Stage 1: p, 0, + against the additive bundle laws.
        std::vector<CartesianCandidate> bundles;
        std::size_t tried = 0;
        Json unit_left = Json::array(), unit_right = Json::array(), other_fail = Json::array();
        for (std::size_t b = 0; b < k; ++b) {
            const std::size_t fibre = 2 * k - 1;
            std::vector<std::size_t> code(k, 0);
            do {
                CartesianCandidate cand;
                cand.k = k;
                cand.base = b;
                for (std::size_t i = 0; i < k; ++i) {
                    std::size_t c = code[i];
                    if (c < k) {
                        cand.plus_copy.push_back(0);
                        cand.plus_at.push_back(c);
                    } else {
                        std::size_t j = c - k;
                        if (j >= b) ++j;
                        cand.plus_copy.push_back(1);
                        cand.plus_at.push_back(j);
                    }
                }
                cand.lift.assign(k * k, 0);
                cand.flip.resize(k * k);
                for (std::size_t i = 0; i < k * k; ++i) cand.flip[i] = i;
                ++tried;
                auto ts = cartesian_structure(op, cand);
                TangentChecker<FinSetOp> chk(*op, ts);
                bool ok = true, left = true, right = true;
                for (const auto& x : objs) {
                    auto r = check_additive_bundle(*op, chk.bundle(x), op->describe(x));
                    for (const auto& e : r.entries()) {
                        if (e.status != Status::fail) continue;
                        ok = false;
                        if (e.check == "unit-left") left = false;
                        else if (e.check == "unit-right") right = false;
                    }
                }
                if (ok) bundles.push_back(cand);
                if (left) unit_left.push_back(cand.describe_plus());
                if (right) unit_right.push_back(cand.describe_plus());
                if (!ok && left && right) other_fail.push_back(cand.describe_plus());
            } while (detail::next_tuple(code, fibre));
        }
        rep.add(tag + "/bundle-stage", Status::pass,
                Json{{"candidates", tried},
                     {"survivors", bundles.size()},
                     {"unit-left-holds", unit_left},
                     {"unit-right-holds", unit_right},
                     {"failing-elsewhere", other_fail}});
        if (bundles.empty()) {
            bool disjoint = true;
            for (const auto& l : unit_left)
                for (const auto& r : unit_right) disjoint = disjoint && l != r;
            rep.expect(tag + "/eliminated-by-unitality", disjoint && other_fail.empty(),
                       Json{{"unit-left-holds", unit_left}, {"unit-right-holds", unit_right}});
            continue;
        }

        // Stage 2: ℓ and c against the full axiom suite.
        std::size_t full = 0;
        for (const auto& bcand : bundles) {
            std::vector<std::size_t> lam(k * k, 0);
            do {
                std::vector<std::size_t> kap(k * k, 0);
                do {
                    CartesianCandidate cand = bcand;
                    cand.lift = lam;
                    cand.flip = kap;
                    ++full;
                    auto ts = cartesian_structure(op, cand);
                    auto ax = check_tangent_axioms(*op, ts, objs, morphs, 1);
                    if (ax.passed()) {
                        out.found.push_back(cand);
                        out.structures.push_back(ts);
                    }
                } while (detail::next_tuple(kap, k * k));
            } while (detail::next_tuple(lam, k));
        }
        rep.add(tag + "/axiom-stage", Status::pass, Json{{"candidates", full}});
    }

    Json found = Json::array();
    for (const auto& c : out.found) found.push_back(c.to_json());
    bool only_trivial = out.found.size() == 1 && out.found[0].k == 1 &&
                        detail::same_structure(*op, out.structures[0], trivial_tangent(*op), objs, morphs);
    rep.expect("found-exactly-trivial", only_trivial, Json{{"found", found}});
    return out;
}

}  // namespace tandim
