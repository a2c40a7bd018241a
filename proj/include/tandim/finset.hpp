#pragma once

/// @file finset.hpp
/// @brief Finite sets and functions, pushouts by union-find, and the cardinality dimension on FinSet^op.

#include "tandim/category.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

class FinSetObj {
public:
    FinSetObj() = default;
    explicit FinSetObj(std::vector<std::string> labels) : labels_(std::move(labels)) {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw UsageError("FinSetObj: duplicate labels");
    }

    static FinSetObj range(std::size_t n) {
        std::vector<std::string> l;
        for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i));
        return FinSetObj(std::move(l));
    }

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<std::size_t> index_of(const std::string& l) const {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    friend bool operator==(const FinSetObj&, const FinSetObj&) = default;

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < labels_.size(); ++i) s += (i ? "," : "") + labels_[i];
        return s + "}";
    }

private:
    std::vector<std::string> labels_;
};

struct FinFn {
    FinSetObj dom;
    FinSetObj cod;
    std::vector<std::size_t> table;

    std::size_t operator()(std::size_t x) const { return table[x]; }

    bool injective() const {
        std::set<std::size_t> img(table.begin(), table.end());
        return img.size() == table.size();
    }
    bool surjective() const {
        std::set<std::size_t> img(table.begin(), table.end());
        return img.size() == cod.size();
    }

    std::string str() const {
        std::string s = dom.str() + "->" + cod.str() + ":[";
        for (std::size_t i = 0; i < table.size(); ++i)
            s += (i ? "," : "") + dom.label(i) + "↦" + cod.label(table[i]);
        return s + "]";
    }
};

inline FinFn make_fn(const FinSetObj& dom, const FinSetObj& cod, std::vector<std::size_t> t) {
    if (t.size() != dom.size()) throw UsageError("FinFn: table size differs from domain size");
    for (auto v : t)
        if (v >= cod.size()) throw UsageError("FinFn: image outside codomain");
    return FinFn{dom, cod, std::move(t)};
}

/// Union-find with smallest-index representatives.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

/// Quotient of C ⊔ B by g(a) ~ s(a). Classes are ordered by their smallest member, C before B;
/// a class is labelled by its smallest C member, otherwise by its B member (primed on clashes).
struct GluedSets {
    FinSetObj apex;
    std::vector<std::size_t> from_b;
    std::vector<std::size_t> from_c;
    std::vector<std::size_t> class_rep;  ///< smallest member per class, index into C ⊔ B
};

inline GluedSets glue_sets(const FinSetObj& B, const FinSetObj& Cset,
                           const std::vector<std::pair<std::size_t, std::size_t>>& identify) {
    const std::size_t nc = Cset.size(), nb = B.size();
    UnionFind uf(nc + nb);
    for (auto [b, c] : identify) uf.unite(c, nc + b);
    std::map<std::size_t, std::size_t> cls;
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < nc + nb; ++x) {
        auto root = uf.find(x);
        if (!cls.count(root)) {
            cls[root] = reps.size();
            reps.push_back(x);
        }
    }
    std::vector<std::string> labels;
    std::set<std::string> used;
    for (auto rep : reps) {
        std::string l = rep < nc ? Cset.label(rep) : B.label(rep - nc);
        while (used.count(l)) l += "'";
        used.insert(l);
        labels.push_back(l);
    }
    GluedSets out{FinSetObj(std::move(labels)), {}, {}, reps};
    for (std::size_t b = 0; b < nb; ++b) out.from_b.push_back(cls[uf.find(nc + b)]);
    for (std::size_t c = 0; c < nc; ++c) out.from_c.push_back(cls[uf.find(c)]);
    return out;
}

class FinSet {
public:
    using Object = FinSetObj;
    using Morphism = FinFn;

    std::string name() const { return "FinSet"; }

    FinFn identity(const FinSetObj& x) const {
        std::vector<std::size_t> t(x.size());
        std::iota(t.begin(), t.end(), 0);
        return FinFn{x, x, std::move(t)};
    }
    FinFn compose(const FinFn& g, const FinFn& f) const {
        if (!(f.cod == g.dom)) throw UsageError("FinSet: composing non-composable functions");
        std::vector<std::size_t> t(f.table.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
        return FinFn{f.dom, g.cod, std::move(t)};
    }
    bool equal(const FinFn& f, const FinFn& g) const {
        return f.dom == g.dom && f.cod == g.cod && f.table == g.table;
    }
    bool same_object(const FinSetObj& x, const FinSetObj& y) const { return x == y; }
    FinSetObj domain(const FinFn& f) const { return f.dom; }
    FinSetObj codomain(const FinFn& f) const { return f.cod; }
    std::string describe(const FinSetObj& x) const { return x.str(); }
    std::string describe(const FinFn& f) const { return f.str(); }

    /// Apex = pairs (a,c) with r(a) = f(c), lexicographic.
    std::optional<Square<FinSet>> pullback(const FinFn& r, const FinFn& f) const {
        if (!(r.cod == f.cod)) throw UsageError("FinSet::pullback: not a cospan");
        std::vector<std::string> labels;
        std::vector<std::size_t> p0, p1;
        for (std::size_t a = 0; a < r.dom.size(); ++a)
            for (std::size_t c = 0; c < f.dom.size(); ++c)
                if (r.table[a] == f.table[c]) {
                    labels.push_back("(" + r.dom.label(a) + "," + f.dom.label(c) + ")");
                    p0.push_back(a);
                    p1.push_back(c);
                }
        FinSetObj P(std::move(labels));
        return Square<FinSet>{r, f, P, FinFn{P, r.dom, p0}, FinFn{P, f.dom, p1}};
    }

    FinFn pair(const Square<FinSet>& sq, const FinFn& u, const FinFn& v) const {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
        for (std::size_t k = 0; k < sq.apex.size(); ++k) idx[{sq.pi0.table[k], sq.pi1.table[k]}] = k;
        std::vector<std::size_t> t(u.dom.size());
        for (std::size_t x = 0; x < t.size(); ++x) {
            auto it = idx.find({u.table[x], v.table[x]});
            if (it == idx.end()) throw UsageError("FinSet::pair: legs do not form a cone");
            t[x] = it->second;
        }
        return FinFn{u.dom, sq.apex, std::move(t)};
    }

    std::optional<Cocone<FinSet>> pushout(const FinFn& s, const FinFn& g) const {
        if (!(s.dom == g.dom)) throw UsageError("FinSet::pushout: not a span");
        std::vector<std::pair<std::size_t, std::size_t>> ident;
        for (std::size_t a = 0; a < s.dom.size(); ++a) ident.emplace_back(s.table[a], g.table[a]);
        auto glued = glue_sets(s.cod, g.cod, ident);
        return Cocone<FinSet>{s, g, glued.apex, FinFn{s.cod, glued.apex, glued.from_b},
                              FinFn{g.cod, glued.apex, glued.from_c}};
    }

    FinFn copair(const Cocone<FinSet>& co, const FinFn& u, const FinFn& v) const {
        std::vector<std::optional<std::size_t>> t(co.apex.size());
        auto put = [&](std::size_t cls, std::size_t val) {
            if (t[cls] && *t[cls] != val) throw UsageError("FinSet::copair: legs do not form a cocone");
            t[cls] = val;
        };
        for (std::size_t b = 0; b < co.in0.table.size(); ++b) put(co.in0.table[b], u.table[b]);
        for (std::size_t c = 0; c < co.in1.table.size(); ++c) put(co.in1.table[c], v.table[c]);
        std::vector<std::size_t> out;
        for (auto& x : t) {
            if (!x) throw UsageError("FinSet::copair: legs not jointly surjective");
            out.push_back(*x);
        }
        return FinFn{co.apex, u.cod, std::move(out)};
    }

    std::optional<FinFn> inverse(const FinFn& f) const {
        if (f.dom.size() != f.cod.size() || !f.injective()) return std::nullopt;
        std::vector<std::size_t> t(f.cod.size());
        for (std::size_t i = 0; i < f.table.size(); ++i) t[f.table[i]] = i;
        return FinFn{f.cod, f.dom, std::move(t)};
    }

    std::optional<std::vector<FinFn>> homs(const FinSetObj& x, const FinSetObj& y) const {
        const std::size_t n = x.size(), m = y.size();
        double count = 1;
        for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(m);
        if (count > hom_limit) return std::nullopt;
        std::vector<FinFn> out;
        if (n > 0 && m == 0) return out;
        std::vector<std::size_t> t(n, 0);
        while (true) {
            out.push_back(FinFn{x, y, t});
            std::size_t i = 0;
            while (i < n && ++t[i] == m) t[i++] = 0;
            if (i == n) break;
        }
        return out;
    }

    std::optional<std::string> validate(const FinFn& f) const {
        if (f.table.size() != f.dom.size()) return "table size differs from domain";
        for (auto v : f.table)
            if (v >= f.cod.size()) return "image outside codomain";
        return std::nullopt;
    }

    std::vector<FinSetObj> test_objects() const {
        return {FinSetObj::range(0), FinSetObj::range(1), FinSetObj::range(2)};
    }

    double hom_limit = 200000;
};

using FinSetOp = Opposite<FinSet>;

/// Pushout of s: A→B (expected injective) and f: A→C, as in the cardinality argument.
struct SetPushout {
    Cocone<FinSet> cocone;
    bool s_injective = true;
    bool cardinality_formula_holds = true;  ///< |P| = |C| + |B| - |A|; only asserted when s is injective
};

inline SetPushout set_pushout(const FinFn& f, const FinFn& s) {
    FinSet cat;
    auto co = *cat.pushout(s, f);
    SetPushout out{co, s.injective(), true};
    if (out.s_injective)
        out.cardinality_formula_holds =
            co.apex.size() + s.dom.size() == f.cod.size() + s.cod.size();
    return out;
}

inline DimensionFunction<FinSetObj> cardinality_dimension(MonoidSpec m = nat_add()) {
    DimensionFunction<FinSetObj> d;
    d.name = "cardinality";
    const bool integer = m.carrier == Carrier::integer;
    d.monoid = std::move(m);
    d.evaluate = [integer](const FinSetObj& x) -> DimValue {
        if (integer) return BigInt(x.size());
        return NatInf(x.size());
    };
    return d;
}

inline std::vector<FinSetObj> finset_corpus(std::size_t max_size = 3) {
    std::vector<FinSetObj> out;
    for (std::size_t n = 0; n <= max_size; ++n) out.push_back(FinSetObj::range(n));
    return out;
}

}  // namespace tandim
