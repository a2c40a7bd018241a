#pragma once

/// @file poly.hpp
/// @brief Sums of monomials y^{E_1} + ... + y^{E_k} and the degree counterexample.

#include "tandim/finset.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

struct PolyFunctor {
    std::vector<FinSetObj> exponents;  ///< one exponent set per position

    std::size_t positions() const { return exponents.size(); }

    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& e : exponents) d = std::max(d, e.size());
        return d;
    }

    std::string str() const {
        if (exponents.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            s += (i ? " + " : "") + std::string("y^") + exponents[i].str();
        return s;
    }
};

/// Positions map forward, directions map backward: dirs[i]: cod.exponents[pos[i]] → dom.exponents[i].
struct PolyMap {
    PolyFunctor dom;
    PolyFunctor cod;
    std::vector<std::size_t> pos;
    std::vector<FinFn> dirs;
};

inline PolyMap poly_map(const PolyFunctor& dom, const PolyFunctor& cod, std::vector<std::size_t> pos) {
    PolyMap m{dom, cod, std::move(pos), {}};
    for (std::size_t i = 0; i < dom.positions(); ++i) {
        const auto& src = cod.exponents.at(m.pos[i]);
        if (src.size() > 0 && dom.exponents[i].size() == 0)
            throw UsageError("poly_map: no direction map into an empty exponent set");
        m.dirs.push_back(FinFn{src, dom.exponents[i], std::vector<std::size_t>(src.size(), 0)});
    }
    return m;
}

struct PolySquare {
    PolyFunctor apex;
    PolyMap r;
    PolyMap f;
};

/// Pullback of positions, pushout of exponents.
inline PolySquare poly_pullback(const PolyMap& r, const PolyMap& f) {
    FinSet sets;
    PolyFunctor apex;
    for (std::size_t i = 0; i < r.dom.positions(); ++i)
        for (std::size_t j = 0; j < f.dom.positions(); ++j) {
            if (r.pos[i] != f.pos[j]) continue;
            auto co = sets.pushout(f.dirs[j], r.dirs[i]);
            apex.exponents.push_back(co->apex);
        }
    return PolySquare{apex, r, f};
}

/// Degree equation deg(apex) + deg(B) = deg(A) + deg(C) on one square.
inline CheckEntry poly_degree_entry(const std::string& name, const PolySquare& sq) {
    std::size_t dP = sq.apex.degree(), dB = sq.r.cod.degree(), dA = sq.r.dom.degree(),
                dC = sq.f.dom.degree();
    CheckEntry e;
    e.check = name;
    e.status = dP + dB == dA + dC ? Status::pass : Status::fail;
    e.lhs = std::to_string(dP) + "+" + std::to_string(dB) + " = " + std::to_string(dP + dB);
    e.rhs = std::to_string(dA) + "+" + std::to_string(dC) + " = " + std::to_string(dA + dC);
    e.witnesses = {{"apex", sq.apex.str()},
                   {"A", sq.r.dom.str()},
                   {"B", sq.r.cod.str()},
                   {"C", sq.f.dom.str()}};
    return e;
}

/// Whether a map of polynomials has a right inverse: each target position needs a preimage whose
/// direction map has a left inverse.
inline bool poly_map_has_section(const PolyMap& m) {
    for (std::size_t j = 0; j < m.cod.positions(); ++j) {
        bool found = false;
        for (std::size_t i = 0; i < m.dom.positions() && !found; ++i) {
            if (m.pos[i] != j) continue;
            const auto& d = m.dirs[i];
            found = d.injective() && (d.dom.size() > 0 || d.cod.size() == 0);
        }
        if (!found) return false;
    }
    return true;
}

inline PolyFunctor poly_of(std::vector<std::vector<std::string>> exps) {
    PolyFunctor p;
    for (auto& e : exps) p.exponents.emplace_back(std::move(e));
    return p;
}

/// The four-corner square y^{1,2,3}+y^{a,b,c} / y^{3}+y^{a,b} / y^{1,2}+y^{c} / y^∅+y^∅.
inline ViolationReport poly_counterexample() {
    ViolationReport rep("degree on monomial sums");
    auto A = poly_of({{"3"}, {"a", "b"}});
    auto C = poly_of({{"1", "2"}, {"c"}});
    auto B = poly_of({{}, {}});
    auto r = poly_map(A, B, {0, 1});
    auto f = poly_map(C, B, {0, 1});
    auto sq = poly_pullback(r, f);

    std::vector<std::set<std::string>> got, want{{"1", "2", "3"}, {"a", "b", "c"}};
    for (const auto& e : sq.apex.exponents) got.emplace_back(e.labels().begin(), e.labels().end());
    rep.expect("apex-exponents", got == want, Json{{"apex", sq.apex.str()}});

    bool r_split = poly_map_has_section(r), f_split = poly_map_has_section(f);
    rep.add("legs-split", r_split && f_split ? Status::pass : Status::not_applicable,
            Json{{"r-has-section", r_split},
                 {"f-has-section", f_split},
                 {"note", "a direction map from the empty set into a nonempty set has no left inverse"}});
    rep.add(poly_degree_entry("degree-equation", sq));
    return rep;
}

}  // namespace tandim
