#pragma once

/// @file fingrp.hpp
/// @brief Finite groups with element-indexed, function-backed multiplication; homomorphisms,
///        abelianization, pullbacks, the multiplicative cardinality dimension.

#include "tandim/category.hpp"
#include "tandim/tangent.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tandim {

using Elem = std::uint32_t;

/// order·factor, refusing results that element indices cannot address.
inline std::size_t checked_order(std::size_t order, std::size_t factor, const std::string& what) {
    constexpr std::size_t cap = std::numeric_limits<Elem>::max();
    if (factor != 0 && order > cap / factor)
        throw UndecidableError(what + ": order exceeds the 2^32 element index range");
    return order * factor;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t h) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = d[h & 15];
    return s;
}

/// Long structural keys are replaced by a digest so nested constructions stay cheap to compare.
inline std::string compact_key(const std::string& k, std::size_t order) {
    if (k.size() <= 96) return k;
    return "G" + std::to_string(order) + "#" + hex64(fnv1a(k));
}

class GroupImpl {
public:
    virtual ~GroupImpl() = default;
    virtual std::size_t order() const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem inv(Elem a) const = 0;
    virtual Elem id() const = 0;
    virtual std::string label(Elem a) const = 0;

    const std::string& key() const { return key_; }
    const std::vector<Elem>& generators() const {
        std::call_once(gens_once_, [this] { gens_ = compute_generators(); });
        return gens_;
    }
    bool abelian() const {
        const auto& g = generators();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j)
                if (mul(g[i], g[j]) != mul(g[j], g[i])) return false;
        return true;
    }

protected:
    virtual std::vector<Elem> compute_generators() const { return greedy_generators(); }

    /// Smallest element outside the current closure, repeatedly.
    std::vector<Elem> greedy_generators() const {
        std::vector<Elem> gens;
        std::vector<char> in(order(), 0);
        in[id()] = 1;
        std::vector<Elem> members{id()};
        for (Elem x = 0; x < order(); ++x) {
            if (in[x]) continue;
            gens.push_back(x);
            std::deque<Elem> q(members.begin(), members.end());
            while (!q.empty()) {
                Elem y = q.front();
                q.pop_front();
                for (Elem g : gens) {
                    Elem z = mul(y, g);
                    if (!in[z]) {
                        in[z] = 1;
                        members.push_back(z);
                        q.push_back(z);
                    }
                }
            }
        }
        return gens;
    }

    std::string key_;

private:
    mutable std::once_flag gens_once_;
    mutable std::vector<Elem> gens_;
};

using Group = std::shared_ptr<const GroupImpl>;

class TableGroup : public GroupImpl {
public:
    TableGroup(std::string key, std::vector<std::string> labels, std::vector<Elem> table, Elem identity)
        : labels_(std::move(labels)), table_(std::move(table)), id_(identity) {
        key_ = std::move(key);
        const std::size_t n = labels_.size();
        inv_.assign(n, 0);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (table_[a * n + b] == id_) inv_[a] = b;
    }
    std::size_t order() const override { return labels_.size(); }
    Elem mul(Elem a, Elem b) const override { return table_[a * labels_.size() + b]; }
    Elem inv(Elem a) const override { return inv_[a]; }
    Elem id() const override { return id_; }
    std::string label(Elem a) const override { return labels_[a]; }

private:
    std::vector<std::string> labels_;
    std::vector<Elem> table_;
    std::vector<Elem> inv_;
    Elem id_;
};

/// Mixed-radix product; the first factor is the most significant digit.
class ProductGroup : public GroupImpl {
public:
    explicit ProductGroup(std::vector<Group> factors) : factors_(std::move(factors)) {
        order_ = 1;
        std::string k = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            order_ = checked_order(order_, factors_[i]->order(), "group product");
            k += (i ? "x" : "") + factors_[i]->key();
        }
        k += ")";
        key_ = compact_key(k, order_);
        strides_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * factors_[i]->order();
        Elem e = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) e += factors_[i]->id() * strides_[i];
        id_ = e;
    }

    std::size_t order() const override { return order_; }
    Elem digit(Elem x, std::size_t i) const {
        return static_cast<Elem>((x / strides_[i]) % factors_[i]->order());
    }
    Elem encode(const std::vector<Elem>& d) const {
        Elem x = 0;
        for (std::size_t i = 0; i < d.size(); ++i) x += d[i] * static_cast<Elem>(strides_[i]);
        return x;
    }
    Elem mul(Elem a, Elem b) const override {
        Elem x = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            x += factors_[i]->mul(digit(a, i), digit(b, i)) * static_cast<Elem>(strides_[i]);
        return x;
    }
    Elem inv(Elem a) const override {
        Elem x = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            x += factors_[i]->inv(digit(a, i)) * static_cast<Elem>(strides_[i]);
        return x;
    }
    Elem id() const override { return id_; }
    std::string label(Elem a) const override {
        std::string s = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i)
            s += (i ? "," : "") + factors_[i]->label(digit(a, i));
        return s + ")";
    }
    const std::vector<Group>& factors() const { return factors_; }
    std::size_t stride(std::size_t i) const { return strides_[i]; }

protected:
    std::vector<Elem> compute_generators() const override {
        std::vector<Elem> gens;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            for (Elem g : factors_[i]->generators()) {
                std::vector<Elem> d(factors_.size());
                for (std::size_t j = 0; j < d.size(); ++j) d[j] = factors_[j]->id();
                d[i] = g;
                gens.push_back(encode(d));
            }
        return gens;
    }

private:
    std::vector<Group> factors_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
    Elem id_ = 0;
};

/// Subgroup given by a sorted list of ambient elements.
class SubgroupImpl : public GroupImpl {
public:
    SubgroupImpl(Group ambient, std::vector<Elem> elems, std::string key)
        : ambient_(std::move(ambient)), elems_(std::move(elems)) {
        key_ = compact_key(std::move(key), elems_.size());
        id_ = index_of(ambient_->id());
    }
    std::size_t order() const override { return elems_.size(); }
    Elem index_of(Elem ambient_elem) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), ambient_elem);
        if (it == elems_.end() || *it != ambient_elem) throw UsageError("subgroup: element not in subgroup");
        return static_cast<Elem>(it - elems_.begin());
    }
    std::optional<Elem> find(Elem ambient_elem) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), ambient_elem);
        if (it == elems_.end() || *it != ambient_elem) return std::nullopt;
        return static_cast<Elem>(it - elems_.begin());
    }
    Elem mul(Elem a, Elem b) const override { return index_of(ambient_->mul(elems_[a], elems_[b])); }
    Elem inv(Elem a) const override { return index_of(ambient_->inv(elems_[a])); }
    Elem id() const override { return id_; }
    std::string label(Elem a) const override { return ambient_->label(elems_[a]); }
    const Group& ambient() const { return ambient_; }
    const std::vector<Elem>& elements() const { return elems_; }

private:
    Group ambient_;
    std::vector<Elem> elems_;
    Elem id_ = 0;
};

/// G/N for a normal subgroup N, elements are cosets ordered by smallest representative.
class QuotientImpl : public GroupImpl {
public:
    QuotientImpl(Group ambient, const std::vector<Elem>& normal, std::string key)
        : ambient_(std::move(ambient)) {
        const std::size_t n = ambient_->order();
        coset_.assign(n, static_cast<Elem>(-1));
        for (Elem x = 0; x < n; ++x) {
            if (coset_[x] != static_cast<Elem>(-1)) continue;
            Elem c = static_cast<Elem>(reps_.size());
            reps_.push_back(x);
            for (Elem k : normal) coset_[ambient_->mul(x, k)] = c;
        }
        key_ = compact_key(std::move(key), reps_.size());
    }
    std::size_t order() const override { return reps_.size(); }
    Elem mul(Elem a, Elem b) const override { return coset_[ambient_->mul(reps_[a], reps_[b])]; }
    Elem inv(Elem a) const override { return coset_[ambient_->inv(reps_[a])]; }
    Elem id() const override { return coset_[ambient_->id()]; }
    std::string label(Elem a) const override { return "[" + ambient_->label(reps_[a]) + "]"; }
    Elem project(Elem x) const { return coset_[x]; }
    Elem representative(Elem c) const { return reps_[c]; }
    const Group& ambient() const { return ambient_; }

protected:
    std::vector<Elem> compute_generators() const override {
        std::set<Elem> g;
        for (Elem x : ambient_->generators()) {
            Elem c = coset_[x];
            if (c != id()) g.insert(c);
        }
        return {g.begin(), g.end()};
    }

private:
    Group ambient_;
    std::vector<Elem> coset_;
    std::vector<Elem> reps_;
};

inline Group product(std::vector<Group> factors) {
    return std::make_shared<const ProductGroup>(std::move(factors));
}

inline const ProductGroup* as_product(const Group& g) { return dynamic_cast<const ProductGroup*>(g.get()); }

/// Builds a Cayley table from an element count and a multiplication rule, with law checks.
template <class Mul>
Group make_group(std::string key, std::vector<std::string> labels, Mul&& mulfn, Elem identity) {
    const std::size_t n = labels.size();
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t[a * n + b] = mulfn(a, b);
    return std::make_shared<const TableGroup>(std::move(key), std::move(labels), std::move(t), identity);
}

/// Exhaustive associativity, identity and inverse checks on an explicit table.
inline std::optional<std::string> validate_group_table(std::size_t n, const std::vector<Elem>& t, Elem e) {
    if (t.size() != n * n) return "table has wrong size";
    if (e >= n && n > 0) return "identity outside the element list";
    for (Elem x : t)
        if (x >= n) return "table entry outside the element list";
    for (Elem a = 0; a < n; ++a)
        if (t[e * n + a] != a || t[a * n + e] != a) return "identity law fails";
    for (Elem a = 0; a < n; ++a) {
        bool has = false;
        for (Elem b = 0; b < n && !has; ++b) has = t[a * n + b] == e && t[b * n + a] == e;
        if (!has) return "element without inverse";
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return "associativity fails";
    return std::nullopt;
}

inline Group cyclic_group(std::size_t n) {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(std::to_string(i));
    return make_group("Z/" + std::to_string(n), l,
                      [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); }, 0);
}

/// Z/n ⋊ Z/m with x a x⁻¹ = a^r; elements a^i x^j at index j·n + i.
inline Group semidirect_group(const std::string& key, std::size_t n, std::size_t m, std::size_t r) {
    std::vector<std::size_t> rp(m, 1);
    for (std::size_t j = 1; j < m; ++j) rp[j] = rp[j - 1] * r % n;
    if (rp[m - 1] * r % n != 1 % n) throw UsageError("semidirect_group: r^m is not 1 mod n");
    std::vector<std::string> l;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) l.push_back("a" + std::to_string(i) + "x" + std::to_string(j));
    return make_group(key, l, [=](Elem u, Elem v) {
        std::size_t i = u % n, j = u / n, k = v % n, l2 = v / n;
        return static_cast<Elem>(((j + l2) % m) * n + (i + rp[j] * k) % n);
    }, 0);
}

inline Group dihedral_group(std::size_t n) {
    return semidirect_group("D" + std::to_string(n), n, 2, n - 1);
}

/// ⟨a, x | a^{2n}, x² = a^n, x a x⁻¹ = a⁻¹⟩, order 4n; elements a^i x^j at j·2n + i.
inline Group dicyclic_group(const std::string& key, std::size_t n) {
    const std::size_t N = 2 * n;
    std::vector<std::string> l;
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < N; ++i) l.push_back("a" + std::to_string(i) + "x" + std::to_string(j));
    return make_group(key, l, [=](Elem u, Elem v) {
        std::size_t i = u % N, j = u / N, k = v % N, l2 = v / N;
        std::size_t e = j ? (i + N - k) % N : (i + k) % N;
        std::size_t jj = j + l2;
        if (jj == 2) {
            e = (e + n) % N;
            jj = 0;
        }
        return static_cast<Elem>(jj * N + e);
    }, 0);
}

/// Closure of permutation generators on {0..d-1}; elements sorted lexicographically.
inline Group permutation_group(const std::string& key, std::size_t d,
                               const std::vector<std::vector<std::size_t>>& gens) {
    using Perm = std::vector<std::size_t>;
    Perm idp(d);
    std::iota(idp.begin(), idp.end(), 0);
    std::set<Perm> seen{idp};
    std::deque<Perm> q{idp};
    while (!q.empty()) {
        Perm p = q.front();
        q.pop_front();
        for (const auto& g : gens) {
            Perm r(d);
            for (std::size_t i = 0; i < d; ++i) r[i] = g[p[i]];
            if (seen.insert(r).second) q.push_back(r);
        }
    }
    std::vector<Perm> elems(seen.begin(), seen.end());
    std::map<Perm, Elem> idx;
    std::vector<std::string> labels;
    for (Elem i = 0; i < elems.size(); ++i) {
        idx[elems[i]] = i;
        std::string s;
        for (auto v : elems[i]) s += std::to_string(v);
        labels.push_back(s);
    }
    return make_group(key, labels, [&](Elem a, Elem b) {
        Perm r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = elems[a][elems[b][i]];
        return idx.at(r);
    }, idx.at(idp));
}

inline Group symmetric3() { return permutation_group("S3", 3, {{1, 0, 2}, {1, 2, 0}}); }
inline Group alternating4() { return permutation_group("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }
inline Group quaternion8() { return dicyclic_group("Q8", 2); }

struct GroupHom {
    Group dom;
    Group cod;
    std::shared_ptr<const std::vector<Elem>> map;

    Elem operator()(Elem x) const { return (*map)[x]; }
};

inline GroupHom make_hom(Group dom, Group cod, std::vector<Elem> table) {
    return GroupHom{std::move(dom), std::move(cod), std::make_shared<const std::vector<Elem>>(std::move(table))};
}

/// Extends generator images to a homomorphism by breadth-first search, or fails.
inline std::optional<std::vector<Elem>> extend_hom(const GroupImpl& dom, const GroupImpl& cod,
                                                   const std::vector<Elem>& gens,
                                                   const std::vector<Elem>& images) {
    const Elem unset = static_cast<Elem>(-1);
    std::vector<Elem> t(dom.order(), unset);
    t[dom.id()] = cod.id();
    std::deque<Elem> q{dom.id()};
    while (!q.empty()) {
        Elem x = q.front();
        q.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Elem y = dom.mul(x, gens[k]);
            Elem img = cod.mul(t[x], images[k]);
            if (t[y] == unset) {
                t[y] = img;
                q.push_back(y);
            } else if (t[y] != img) {
                return std::nullopt;
            }
        }
    }
    return t;
}

struct Abelianization {
    Group ab;
    GroupHom proj;
    std::vector<Elem> section;  ///< a representative in G for each element of Ab(G)
};

inline std::vector<Elem> commutator_subgroup(const GroupImpl& g) {
    const auto& gens = g.generators();
    std::vector<Elem> comms;
    for (Elem s : gens)
        for (Elem t : gens) {
            Elem c = g.mul(g.mul(s, t), g.mul(g.inv(s), g.inv(t)));
            if (c != g.id()) comms.push_back(c);
        }
    std::vector<char> in(g.order(), 0);
    in[g.id()] = 1;
    std::vector<Elem> members{g.id()};
    std::deque<Elem> q{g.id()};
    while (!q.empty()) {
        Elem k = q.front();
        q.pop_front();
        auto visit = [&](Elem z) {
            if (!in[z]) {
                in[z] = 1;
                members.push_back(z);
                q.push_back(z);
            }
        };
        for (Elem c : comms) visit(g.mul(k, c));
        for (Elem s : gens) visit(g.mul(g.mul(s, k), g.inv(s)));
    }
    std::sort(members.begin(), members.end());
    return members;
}

namespace detail {

inline std::mutex& ab_mutex() {
    static std::mutex m;
    return m;
}
inline std::map<std::string, Abelianization>& ab_cache() {
    static std::map<std::string, Abelianization> c;
    return c;
}

}  // namespace detail

/// Quotient by the commutator subgroup. Abelian groups are returned unchanged and products are
/// handled factorwise, so Ab(Ab G) is literally Ab G.
inline Abelianization abelianization(const Group& g) {
    {
        std::lock_guard<std::mutex> lock(detail::ab_mutex());
        auto it = detail::ab_cache().find(g->key());
        if (it != detail::ab_cache().end()) return it->second;
    }
    Abelianization out;
    const std::size_t n = g->order();
    if (g->abelian()) {
        std::vector<Elem> idt(n);
        std::iota(idt.begin(), idt.end(), 0);
        out = Abelianization{g, make_hom(g, g, idt), idt};
    } else if (auto pg = as_product(g)) {
        std::vector<Abelianization> parts;
        std::vector<Group> abs;
        for (const auto& f : pg->factors()) {
            parts.push_back(abelianization(f));
            abs.push_back(parts.back().ab);
        }
        auto ab = product(abs);
        auto pab = as_product(ab);
        std::vector<Elem> proj(n), sec(ab->order());
        std::vector<Elem> d(parts.size());
        for (Elem x = 0; x < n; ++x) {
            for (std::size_t i = 0; i < parts.size(); ++i) d[i] = (*parts[i].proj.map)[pg->digit(x, i)];
            proj[x] = pab->encode(d);
        }
        for (Elem a = 0; a < ab->order(); ++a) {
            for (std::size_t i = 0; i < parts.size(); ++i) d[i] = parts[i].section[pab->digit(a, i)];
            sec[a] = pg->encode(d);
        }
        out = Abelianization{ab, make_hom(g, ab, std::move(proj)), std::move(sec)};
    } else {
        auto comm = commutator_subgroup(*g);
        auto q = std::make_shared<const QuotientImpl>(g, comm, "Ab(" + g->key() + ")");
        std::vector<Elem> proj(n), sec(q->order());
        for (Elem x = 0; x < n; ++x) proj[x] = q->project(x);
        for (Elem c = 0; c < q->order(); ++c) sec[c] = q->representative(c);
        out = Abelianization{q, make_hom(g, q, std::move(proj)), std::move(sec)};
    }
    std::lock_guard<std::mutex> lock(detail::ab_mutex());
    detail::ab_cache().emplace(g->key(), out);
    return out;
}

/// Ab(f): Ab(G) → Ab(H).
inline GroupHom abelianize(const GroupHom& f) {
    auto A = abelianization(f.dom), B = abelianization(f.cod);
    std::vector<Elem> t(A.ab->order());
    for (Elem a = 0; a < t.size(); ++a) t[a] = (*B.proj.map)[f(A.section[a])];
    return make_hom(A.ab, B.ab, std::move(t));
}

class FinGrp {
public:
    using Object = Group;
    using Morphism = GroupHom;

    std::string name() const { return "FinGrp"; }

    GroupHom identity(const Group& g) const {
        std::vector<Elem> t(g->order());
        std::iota(t.begin(), t.end(), 0);
        return make_hom(g, g, std::move(t));
    }
    GroupHom compose(const GroupHom& g, const GroupHom& f) const {
        if (!same_object(f.cod, g.dom)) throw UsageError("FinGrp: composing non-composable maps");
        std::vector<Elem> t(f.map->size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = (*g.map)[(*f.map)[i]];
        return make_hom(f.dom, g.cod, std::move(t));
    }
    bool equal(const GroupHom& f, const GroupHom& g) const {
        return same_object(f.dom, g.dom) && same_object(f.cod, g.cod) &&
               (f.map == g.map || *f.map == *g.map);
    }
    bool same_object(const Group& x, const Group& y) const {
        return x == y || (x->order() == y->order() && x->key() == y->key());
    }
    Group domain(const GroupHom& f) const { return f.dom; }
    Group codomain(const GroupHom& f) const { return f.cod; }
    std::string describe(const Group& g) const { return g->key() + "[" + std::to_string(g->order()) + "]"; }
    std::string describe(const GroupHom& f) const {
        std::string s = f.dom->key() + "->" + f.cod->key();
        if (f.map->size() <= 16) {
            s += ":[";
            for (std::size_t i = 0; i < f.map->size(); ++i) s += (i ? "," : "") + f.cod->label((*f.map)[i]);
            s += "]";
        } else {
            std::string raw;
            for (Elem x : *f.map) raw += std::to_string(x) + ",";
            s += "#" + hex64(fnv1a(raw));
        }
        return s;
    }

    std::optional<std::string> validate(const GroupHom& f) const {
        if (f.map->size() != f.dom->order()) return "table size differs from domain order";
        for (Elem x : *f.map)
            if (x >= f.cod->order()) return "image outside codomain";
        if ((*f.map)[f.dom->id()] != f.cod->id()) return "identity not preserved";
        for (Elem g : f.dom->generators())
            for (Elem x = 0; x < f.dom->order(); ++x)
                if (f(f.dom->mul(x, g)) != f.cod->mul(f(x), f(g))) return "multiplication not preserved";
        return std::nullopt;
    }

    /// Subgroup {(a,c) : r(a) = f(c)} of A × C.
    std::optional<Square<FinGrp>> pullback(const GroupHom& r, const GroupHom& f) const {
        if (!same_object(r.cod, f.cod)) throw UsageError("FinGrp::pullback: not a cospan");
        auto amb = product({r.dom, f.dom});
        const std::size_t nc = f.dom->order();
        std::vector<std::vector<Elem>> fibre(f.cod->order());
        for (Elem c = 0; c < nc; ++c) fibre[f(c)].push_back(c);
        std::vector<Elem> elems, p0, p1;
        for (Elem a = 0; a < r.dom->order(); ++a)
            for (Elem c : fibre[r(a)]) {
                elems.push_back(static_cast<Elem>(a * nc + c));
                p0.push_back(a);
                p1.push_back(c);
            }
        std::string raw = describe(r) + "|" + describe(f);
        auto P = std::make_shared<const SubgroupImpl>(amb, std::move(elems),
                                                      "PB(" + hex64(fnv1a(raw)) + ")");
        Group Pg = P;
        return Square<FinGrp>{r, f, Pg, make_hom(Pg, r.dom, std::move(p0)),
                              make_hom(Pg, f.dom, std::move(p1))};
    }

    GroupHom pair(const Square<FinGrp>& sq, const GroupHom& u, const GroupHom& v) const {
        const std::size_t n = u.dom->order();
        std::vector<Elem> t(n);
        auto sub = dynamic_cast<const SubgroupImpl*>(sq.apex.get());
        const std::size_t nc = sq.pi1.cod->order();
        if (sub && sub->ambient()->order() == sq.pi0.cod->order() * nc &&
            same_object(sub->ambient(), product({sq.pi0.cod, sq.pi1.cod}))) {
            for (Elem x = 0; x < n; ++x) {
                auto k = sub->find(static_cast<Elem>(u(x) * nc + v(x)));
                if (!k) throw UsageError("FinGrp::pair: legs do not form a cone");
                t[x] = *k;
            }
        } else {
            std::unordered_map<std::uint64_t, Elem> idx;
            for (Elem k = 0; k < sq.apex->order(); ++k)
                idx.emplace(static_cast<std::uint64_t>(sq.pi0(k)) * nc + sq.pi1(k), k);
            for (Elem x = 0; x < n; ++x) {
                auto it = idx.find(static_cast<std::uint64_t>(u(x)) * nc + v(x));
                if (it == idx.end()) throw UsageError("FinGrp::pair: legs do not form a cone");
                t[x] = it->second;
            }
        }
        return make_hom(u.dom, sq.apex, std::move(t));
    }

    std::optional<GroupHom> inverse(const GroupHom& f) const {
        if (f.dom->order() != f.cod->order()) return std::nullopt;
        const Elem unset = static_cast<Elem>(-1);
        std::vector<Elem> t(f.cod->order(), unset);
        for (Elem x = 0; x < f.dom->order(); ++x) {
            if (t[f(x)] != unset) return std::nullopt;
            t[f(x)] = x;
        }
        return make_hom(f.cod, f.dom, std::move(t));
    }

    std::optional<std::vector<GroupHom>> homs(const Group& x, const Group& y) const {
        const auto& gens = x->generators();
        double count = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) count *= static_cast<double>(y->order());
        if (count > hom_limit) return std::nullopt;
        std::vector<GroupHom> out;
        std::vector<Elem> img(gens.size(), 0);
        while (true) {
            if (auto t = extend_hom(*x, *y, gens, img)) out.push_back(make_hom(x, y, std::move(*t)));
            std::size_t i = 0;
            while (i < img.size() && ++img[i] == y->order()) img[i++] = 0;
            if (i == img.size()) break;
        }
        return out;
    }

    double hom_limit = 500000;
};

inline DimensionFunction<Group> cardinality_mul_dimension() {
    DimensionFunction<Group> d;
    d.name = "cardinality";
    d.monoid = nat_mul();
    d.evaluate = [](const Group& g) -> DimValue { return NatInf(g->order()); };
    return d;
}

inline Square<FinGrp> group_pullback(const GroupHom& f, const GroupHom& g) {
    return *FinGrp{}.pullback(f, g);
}

/// Projection π0: G × H → G.
inline GroupHom product_projection(const Group& prod, std::size_t i) {
    auto pg = as_product(prod);
    std::vector<Elem> t(prod->order());
    for (Elem x = 0; x < t.size(); ++x) t[x] = pg->digit(x, i);
    return make_hom(prod, pg->factors()[i], std::move(t));
}

/// (Z/2 × Z/2) ⋊ Z/4 with the generator swapping the two factors; elements (u, j) at j·4 + u.
inline Group klein_by_z4_group() {
    std::vector<std::string> l;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t u = 0; u < 4; ++u) l.push_back("v" + std::to_string(u) + "x" + std::to_string(j));
    auto swap = [](std::size_t u) { return ((u & 1) << 1) | (u >> 1); };
    return make_group("(Z2xZ2):Z4", l, [=](Elem a, Elem b) {
        std::size_t u = a % 4, j = a / 4, v = b % 4, k = b / 4;
        if (j % 2) v = swap(v);
        return static_cast<Elem>(((j + k) % 4) * 4 + (u ^ v));
    }, 0);
}

/// i^k X^x Z^z with X² = Z² = 1 and ZX = −XZ; index k·4 + x·2 + z.
inline Group pauli_group() {
    std::vector<std::string> l;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t xz = 0; xz < 4; ++xz)
            l.push_back("i" + std::to_string(k) + "X" + std::to_string(xz >> 1) + "Z" + std::to_string(xz & 1));
    return make_group("Pauli", l, [](Elem a, Elem b) {
        std::size_t k1 = a / 4, x1 = (a >> 1) & 1, z1 = a & 1;
        std::size_t k2 = b / 4, x2 = (b >> 1) & 1, z2 = b & 1;
        std::size_t k = (k1 + k2 + 2 * (z1 & x2)) % 4;
        return static_cast<Elem>(k * 4 + ((x1 ^ x2) << 1) + (z1 ^ z2));
    }, 0);
}

/// Groups of order ≤ 16 used by the suites.
inline std::vector<Group> group_corpus(std::size_t max_order = 16) {
    std::vector<Group> out;
    auto add = [&](Group g) {
        if (g->order() <= max_order) out.push_back(std::move(g));
    };
    for (std::size_t n = 1; n <= 16; ++n) add(cyclic_group(n));
    auto Z = [](std::size_t n) { return cyclic_group(n); };
    add(product({Z(2), Z(2)}));
    add(product({Z(2), Z(4)}));
    add(product({Z(2), Z(2), Z(2)}));
    add(product({Z(3), Z(3)}));
    add(product({Z(2), Z(6)}));
    add(product({Z(2), Z(8)}));
    add(product({Z(4), Z(4)}));
    add(product({Z(2), Z(2), Z(4)}));
    add(product({Z(2), Z(2), Z(2), Z(2)}));
    add(symmetric3());
    add(dihedral_group(4));
    add(quaternion8());
    add(dihedral_group(5));
    add(alternating4());
    add(dihedral_group(6));
    add(dicyclic_group("Dic3", 3));
    add(dihedral_group(7));
    add(dihedral_group(8));
    add(dicyclic_group("Q16", 4));
    add(semidirect_group("SD16", 8, 2, 3));
    add(semidirect_group("M16", 8, 2, 5));
    add(semidirect_group("Z4:Z4", 4, 4, 3));
    add(product({Z(2), dihedral_group(4)}));
    add(product({Z(2), quaternion8()}));
    add(klein_by_z4_group());
    add(pauli_group());
    return out;
}

/// Group from the JSON Cayley format, validated exhaustively.
inline Group group_from_table(const std::vector<std::string>& labels,
                              const std::vector<std::vector<std::string>>& rows, const std::string& id) {
    const std::size_t n = labels.size();
    std::map<std::string, Elem> idx;
    for (Elem i = 0; i < n; ++i) idx[labels[i]] = i;
    if (idx.size() != n) throw UsageError("group: duplicate element labels");
    if (rows.size() != n) throw UsageError("group: table needs one row per element");
    std::vector<Elem> t;
    std::string raw;
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n) throw UsageError("group: table row " + std::to_string(a) + " has wrong length");
        for (const auto& s : rows[a]) {
            auto it = idx.find(s);
            if (it == idx.end()) throw UsageError("group: unknown label '" + s + "' in table row " + std::to_string(a));
            t.push_back(it->second);
            raw += s + ",";
        }
    }
    auto it = idx.find(id);
    if (it == idx.end()) throw UsageError("group: identity label not an element");
    if (auto err = validate_group_table(n, t, it->second)) throw UsageError("group: " + *err);
    return std::make_shared<const TableGroup>("cayley#" + hex64(fnv1a(raw)), labels, std::move(t), it->second);
}

/// T(G) = G × Ab(G).
inline Group grp_ab_object(const Group& g) { return product({g, abelianization(g).ab}); }

/// p(g,a) = g, 0(g) = (g,e), + multiplies the Ab coordinates, ℓ(g,a) = ((g,e),(e,a)),
/// c((g,a),(b,d)) = ((g,b),(a,d)).
inline TangentStructure<FinGrp> grp_tangent(const FinGrp& c) {
    TangentStructure<FinGrp> ts;
    ts.name = "grp-ab";
    ts.T = grp_ab_object;
    ts.Tm = [](const GroupHom& f) {
        auto af = abelianize(f);
        const Elem na = static_cast<Elem>(af.dom->order()), nb = static_cast<Elem>(af.cod->order());
        std::vector<Elem> t(f.dom->order() * na);
        for (Elem x = 0; x < f.dom->order(); ++x)
            for (Elem a = 0; a < na; ++a) t[x * na + a] = f(x) * nb + af(a);
        return make_hom(product({f.dom, af.dom}), product({f.cod, af.cod}), std::move(t));
    };
    ts.p = [](const Group& g) {
        auto TG = grp_ab_object(g);
        return product_projection(TG, 0);
    };
    ts.zero = [](const Group& g) {
        auto A = abelianization(g).ab;
        const Elem na = static_cast<Elem>(A->order());
        std::vector<Elem> t(g->order());
        for (Elem x = 0; x < t.size(); ++x) t[x] = x * na + A->id();
        return make_hom(g, grp_ab_object(g), std::move(t));
    };
    ts.plus = [&c, p = ts.p](const Group& g) {
        auto A = abelianization(g).ab;
        const Elem na = static_cast<Elem>(A->order());
        auto P = pullback_power(c, p(g));
        std::vector<Elem> t(P.apex->order());
        for (Elem k = 0; k < t.size(); ++k) {
            Elem x = P.pi0(k), y = P.pi1(k);
            t[k] = (x / na) * na + A->mul(x % na, y % na);
        }
        return make_hom(P.apex, P.pi0.cod, std::move(t));
    };
    ts.lift = [](const Group& g) {
        auto A = abelianization(g).ab;
        const Elem na = static_cast<Elem>(A->order()), e = A->id();
        auto TG = grp_ab_object(g);
        std::vector<Elem> t(TG->order());
        for (Elem x = 0; x < t.size(); ++x)
            t[x] = ((x / na) * na + e) * na * na + e * na + x % na;
        return make_hom(TG, grp_ab_object(TG), std::move(t));
    };
    ts.flip = [](const Group& g) {
        auto A = abelianization(g).ab;
        const Elem na = static_cast<Elem>(A->order());
        auto TTG = grp_ab_object(grp_ab_object(g));
        std::vector<Elem> t(TTG->order());
        for (Elem k = 0; k < t.size(); ++k) {
            Elem x = k / (na * na), r = k % (na * na);
            Elem gg = x / na, a = x % na, b = r / na, d = r % na;
            t[k] = (gg * na + b) * na * na + a * na + d;
        }
        return make_hom(TTG, TTG, std::move(t));
    };
    return ts;
}

/// G ↦ G × G; only the object and morphism maps are used.
inline FunctorData<FinGrp, FinGrp> grp_square_functor() {
    return FunctorData<FinGrp, FinGrp>{
        "square",
        [](const Group& g) { return product({g, g}); },
        [](const GroupHom& f) {
            const Elem n = static_cast<Elem>(f.dom->order()), m = static_cast<Elem>(f.cod->order());
            std::vector<Elem> t(n * n);
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y) t[x * n + y] = f(x) * m + f(y);
            return make_hom(product({f.dom, f.dom}), product({f.cod, f.cod}), std::move(t));
        }};
}

/// E = M × A over M with fibrewise multiplication in A and λ(m,a) = ((m,e),(e,a)).
inline DifferentialBundle<FinGrp> grp_product_bundle(const FinGrp& c, const Group& M, const Group& A) {
    if (!A->abelian()) throw UsageError("grp_product_bundle: fibre must be abelian");
    auto E = product({M, A});
    const Elem na = static_cast<Elem>(A->order());
    auto q = product_projection(E, 0);
    std::vector<Elem> z(M->order());
    for (Elem m = 0; m < z.size(); ++m) z[m] = m * na + A->id();
    auto P = pullback_power(c, q);
    std::vector<Elem> s(P.apex->order());
    for (Elem k = 0; k < s.size(); ++k) s[k] = (P.pi0(k) / na) * na + A->mul(P.pi0(k) % na, P.pi1(k) % na);
    auto TE = grp_ab_object(E);
    auto AbM = abelianization(M).ab;
    const Elem nab = static_cast<Elem>(AbM->order() * na);
    std::vector<Elem> l(E->order());
    for (Elem x = 0; x < l.size(); ++x) l[x] = ((x / na) * na + A->id()) * nab + AbM->id() * na + x % na;
    return DifferentialBundle<FinGrp>{E, M, q, make_hom(M, E, std::move(z)), make_hom(P.apex, E, std::move(s)),
                                      make_hom(E, TE, std::move(l))};
}

/// #Ab(E)·#M = #Ab(M)·#E for E = M × A.
inline ViolationReport diffbun_ratio_check(const Group& M, const Group& A) {
    if (!A->abelian()) throw UsageError("diffbun_ratio_check: fibre must be abelian");
    ViolationReport rep("abelianization ratio for " + M->key() + " x " + A->key());
    auto E = product({M, A});
    BigInt abE = abelianization(E).ab->order(), abM = abelianization(M).ab->order();
    BigInt lhs = abE * M->order(), rhs = abM * E->order();
    rep.expect("ratio", lhs == rhs, Json{{"M", M->key()}, {"A", A->key()}},
               abE.str() + "*" + std::to_string(M->order()) + " = " + lhs.str(),
               abM.str() + "*" + std::to_string(E->order()) + " = " + rhs.str());
    return rep;
}

}  // namespace tandim
