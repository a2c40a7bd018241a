#pragma once

/// @file homology.hpp
/// @brief Simplicial complexes, rational Betti numbers, pushouts along retract inclusions, double
///        mapping cylinders, the balloon square and the Betti-sequence dimension.

#include "tandim/category.hpp"
#include "tandim/finset.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

using Rational = boost::multiprecision::cpp_rational;
using Simplex = std::vector<std::size_t>;  ///< sorted vertex indices

/// Rank over Q by fraction Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational k = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

class SimplicialComplex {
public:
    SimplicialComplex() : d_(std::make_shared<Data>()) { d_->key = "{}"; }

    /// Facets are index sets; faces are generated, non-maximal facets dropped, isolated vertices kept.
    SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> facets) : d_(std::make_shared<Data>()) {
        FinSetObj check(labels);
        d_->labels = std::move(labels);
        const std::size_t n = d_->labels.size();
        std::set<Simplex> fs;
        std::vector<char> used(n, 0);
        for (auto f : facets) {
            if (f.empty()) throw UsageError("SimplicialComplex: empty facet");
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            if (f.size() > 12) throw UsageError("SimplicialComplex: facet too large");
            for (auto v : f) {
                if (v >= n) throw UsageError("SimplicialComplex: facet vertex out of range");
                used[v] = 1;
            }
            fs.insert(f);
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!used[v]) fs.insert(Simplex{v});
        std::vector<Simplex> maximal;
        for (const auto& f : fs) {
            bool contained = false;
            for (const auto& g : fs)
                if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    contained = true;
                    break;
                }
            if (!contained) maximal.push_back(f);
        }
        d_->facets = maximal;
        std::vector<std::set<Simplex>> bydim;
        for (const auto& f : maximal) {
            const std::size_t k = f.size();
            if (bydim.size() < k) bydim.resize(k);
            for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
                Simplex s;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask >> i & 1) s.push_back(f[i]);
                bydim[s.size() - 1].insert(s);
            }
        }
        for (auto& layer : bydim) {
            d_->simplices.emplace_back(layer.begin(), layer.end());
            std::map<Simplex, std::size_t> idx;
            for (std::size_t i = 0; i < d_->simplices.back().size(); ++i) idx[d_->simplices.back()[i]] = i;
            d_->index.push_back(std::move(idx));
        }
        std::string k = "V[";
        for (std::size_t i = 0; i < n; ++i) k += (i ? "," : "") + d_->labels[i];
        k += "]F[";
        for (const auto& f : d_->facets) {
            k += "(";
            for (std::size_t i = 0; i < f.size(); ++i) k += (i ? "," : "") + std::to_string(f[i]);
            k += ")";
        }
        d_->key = k + "]";
    }

    static SimplicialComplex from_labels(std::vector<std::string> labels,
                                         const std::vector<std::vector<std::string>>& facets) {
        FinSetObj vs(labels);
        std::vector<Simplex> fs;
        for (const auto& f : facets) {
            Simplex s;
            for (const auto& l : f) {
                auto i = vs.index_of(l);
                if (!i) throw UsageError("SimplicialComplex: unknown vertex '" + l + "' in facet");
                s.push_back(*i);
            }
            fs.push_back(s);
        }
        return SimplicialComplex(std::move(labels), std::move(fs));
    }

    std::size_t vertex_count() const { return d_->labels.size(); }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const std::vector<Simplex>& facets() const { return d_->facets; }
    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(d_->simplices.size()) - 1; }
    const std::vector<Simplex>& simplices(std::size_t k) const {
        static const std::vector<Simplex> none;
        return k < d_->simplices.size() ? d_->simplices[k] : none;
    }
    std::optional<std::size_t> index_of(const Simplex& s) const {
        if (s.empty() || s.size() > d_->index.size()) return std::nullopt;
        auto it = d_->index[s.size() - 1].find(s);
        if (it == d_->index[s.size() - 1].end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    const std::string& key() const { return d_->key; }
    FinSetObj vertices() const { return FinSetObj(d_->labels); }

private:
    struct Data {
        std::vector<std::string> labels;
        std::vector<Simplex> facets;
        std::vector<std::vector<Simplex>> simplices;
        std::vector<std::map<Simplex, std::size_t>> index;
        std::string key;
    };
    std::shared_ptr<Data> d_;
};

struct SimplicialMap {
    SimplicialComplex dom;
    SimplicialComplex cod;
    std::vector<std::size_t> vmap;

    std::size_t operator()(std::size_t v) const { return vmap[v]; }

    Simplex image(const Simplex& s) const {
        Simplex out;
        for (auto v : s) out.push_back(vmap[v]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

/// ∂_k: C_k → C_{k-1} with rows indexed by (k-1)-simplices.
inline std::vector<std::vector<Rational>> boundary_matrix(const SimplicialComplex& K, std::size_t k) {
    const auto& hi = K.simplices(k);
    const auto& lo = K.simplices(k - 1);
    std::vector<std::vector<Rational>> m(lo.size(), std::vector<Rational>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j)
        for (std::size_t i = 0; i < hi[j].size(); ++i) {
            Simplex face = hi[j];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            m[*K.index_of(face)][j] = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

/// B_0..B_nmax over Q.
inline std::vector<std::size_t> betti(const SimplicialComplex& K, std::size_t nmax) {
    std::vector<std::size_t> ranks(nmax + 2, 0);
    for (std::size_t k = 1; k <= nmax + 1; ++k)
        if (!K.simplices(k).empty()) ranks[k] = rational_rank(boundary_matrix(K, k));
    std::vector<std::size_t> b(nmax + 1, 0);
    for (std::size_t n = 0; n <= nmax; ++n) b[n] = K.simplices(n).size() - ranks[n] - ranks[n + 1];
    return b;
}

inline std::vector<std::size_t> betti(const SimplicialComplex& K) {
    return betti(K, static_cast<std::size_t>(std::max(K.dimension(), 0)));
}

/// Σ(-1)^n B_n and Σ(-1)^n #n-simplices.
inline std::pair<long long, long long> euler_characteristics(const SimplicialComplex& K) {
    long long chi_b = 0, chi_s = 0;
    auto b = betti(K);
    for (std::size_t n = 0; n < b.size(); ++n) chi_b += (n % 2 ? -1 : 1) * static_cast<long long>(b[n]);
    for (int n = 0; n <= K.dimension(); ++n)
        chi_s += (n % 2 ? -1 : 1) * static_cast<long long>(K.simplices(static_cast<std::size_t>(n)).size());
    return {chi_b, chi_s};
}

/// Max facet size minus one; 0 for the empty complex.
inline NatInf classical_dim(const SimplicialComplex& K) {
    return NatInf(static_cast<long long>(std::max(K.dimension(), 0)));
}

/// Simplicial complexes and vertex maps. Pushouts are answered only when the gluing is faithful
/// (no simplex collapses and no two cells merge), so the apex has the homotopy type of the
/// topological pushout.
class Simp {
public:
    using Object = SimplicialComplex;
    using Morphism = SimplicialMap;

    std::string name() const { return "Simp"; }

    SimplicialMap identity(const SimplicialComplex& k) const {
        std::vector<std::size_t> t(k.vertex_count());
        std::iota(t.begin(), t.end(), 0);
        return {k, k, t};
    }
    SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) const {
        if (!same_object(f.cod, g.dom)) throw UsageError("Simp: composing non-composable maps");
        std::vector<std::size_t> t(f.vmap.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.vmap[f.vmap[i]];
        return {f.dom, g.cod, t};
    }
    bool equal(const SimplicialMap& f, const SimplicialMap& g) const {
        return same_object(f.dom, g.dom) && same_object(f.cod, g.cod) && f.vmap == g.vmap;
    }
    bool same_object(const SimplicialComplex& x, const SimplicialComplex& y) const { return x.key() == y.key(); }
    SimplicialComplex domain(const SimplicialMap& f) const { return f.dom; }
    SimplicialComplex codomain(const SimplicialMap& f) const { return f.cod; }
    std::string describe(const SimplicialComplex& k) const { return k.key(); }
    std::string describe(const SimplicialMap& f) const {
        std::string s = "[";
        for (std::size_t i = 0; i < f.vmap.size(); ++i)
            s += (i ? "," : "") + f.dom.labels()[i] + "↦" + f.cod.labels()[f.vmap[i]];
        return s + "]";
    }

    std::optional<std::string> validate(const SimplicialMap& f) const {
        if (f.vmap.size() != f.dom.vertex_count()) return "vertex map size differs from domain";
        for (auto v : f.vmap)
            if (v >= f.cod.vertex_count()) return "vertex image outside codomain";
        for (const auto& s : f.dom.facets())
            if (!f.cod.contains(f.image(s))) return "image of a facet is not a simplex";
        return std::nullopt;
    }

    std::optional<Cocone<Simp>> pushout(const SimplicialMap& s, const SimplicialMap& g) const {
        if (!same_object(s.dom, g.dom)) throw UsageError("Simp::pushout: not a span");
        std::vector<std::pair<std::size_t, std::size_t>> ident;
        for (std::size_t a = 0; a < s.dom.vertex_count(); ++a) ident.emplace_back(s(a), g(a));
        auto glued = glue_sets(s.cod.vertices(), g.cod.vertices(), ident);
        auto img = [](const std::vector<std::size_t>& m, const Simplex& x) {
            Simplex o;
            for (auto v : x) o.push_back(m[v]);
            std::sort(o.begin(), o.end());
            o.erase(std::unique(o.begin(), o.end()), o.end());
            return o;
        };
        std::set<Simplex> cells;
        std::vector<Simplex> facets;
        auto add_cells = [&](const SimplicialComplex& K, const std::vector<std::size_t>& m, const std::set<Simplex>& skip) {
            for (int d = 0; d <= K.dimension(); ++d)
                for (const auto& x : K.simplices(static_cast<std::size_t>(d))) {
                    if (skip.count(x)) continue;
                    auto y = img(m, x);
                    if (y.size() != x.size() || !cells.insert(y).second) return false;
                }
            for (const auto& f : K.facets()) facets.push_back(img(m, f));
            return true;
        };
        std::set<Simplex> in_a;
        for (int d = 0; d <= s.dom.dimension(); ++d)
            for (const auto& x : s.dom.simplices(static_cast<std::size_t>(d))) in_a.insert(s.image(x));
        if (!add_cells(g.cod, glued.from_c, {})) return std::nullopt;
        if (!add_cells(s.cod, glued.from_b, in_a)) return std::nullopt;
        SimplicialComplex P(glued.apex.labels(), facets);
        return Cocone<Simp>{s, g, P, SimplicialMap{s.cod, P, glued.from_b}, SimplicialMap{g.cod, P, glued.from_c}};
    }

    SimplicialMap copair(const Cocone<Simp>& co, const SimplicialMap& u, const SimplicialMap& v) const {
        const std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> t(co.apex.vertex_count(), unset);
        auto put = [&](std::size_t p, std::size_t x) {
            if (t[p] != unset && t[p] != x) throw UsageError("Simp::copair: legs disagree on the glued part");
            t[p] = x;
        };
        for (std::size_t b = 0; b < u.vmap.size(); ++b) put(co.in0(b), u(b));
        for (std::size_t c = 0; c < v.vmap.size(); ++c) put(co.in1(c), v(c));
        for (auto x : t)
            if (x == unset) throw UsageError("Simp::copair: apex vertex not covered by the legs");
        return {co.apex, u.cod, t};
    }

    std::optional<SimplicialMap> inverse(const SimplicialMap& f) const {
        if (f.dom.vertex_count() != f.cod.vertex_count()) return std::nullopt;
        const std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> t(f.cod.vertex_count(), unset);
        for (std::size_t v = 0; v < f.vmap.size(); ++v) {
            if (t[f(v)] != unset) return std::nullopt;
            t[f(v)] = v;
        }
        SimplicialMap g{f.cod, f.dom, t};
        if (validate(g)) return std::nullopt;
        return g;
    }

    std::optional<std::vector<SimplicialMap>> homs(const SimplicialComplex& x, const SimplicialComplex& y) const {
        const std::size_t n = x.vertex_count(), m = y.vertex_count();
        double count = 1;
        for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(m);
        if (count > hom_limit) return std::nullopt;
        std::vector<SimplicialMap> out;
        if (m == 0) {
            if (n == 0) out.push_back(identity(x));
            return out;
        }
        std::vector<std::size_t> t(n, 0);
        while (true) {
            SimplicialMap f{x, y, t};
            if (!validate(f)) out.push_back(f);
            std::size_t i = 0;
            while (i < n && ++t[i] == m) t[i++] = 0;
            if (i == n) break;
        }
        return out;
    }

    double hom_limit = 200000;
};

using SimpOp = Opposite<Simp>;

/// Componentwise Betti sequence, on the opposite category.
inline DimensionFunction<SimplicialComplex> betti_sequence_dimension() {
    DimensionFunction<SimplicialComplex> d;
    d.name = "betti-sequence";
    d.monoid = seq_add();
    d.evaluate = [](const SimplicialComplex& k) -> DimValue {
        std::vector<NatInf> e;
        for (auto b : betti(k)) e.emplace_back(static_cast<long long>(b));
        return SeqNatInf(e);
    };
    return d;
}

inline DimensionFunction<SimplicialComplex> betti_n_dimension(std::size_t n) {
    DimensionFunction<SimplicialComplex> d;
    d.name = "betti-" + std::to_string(n);
    d.monoid = nat_add();
    d.evaluate = [n](const SimplicialComplex& k) -> DimValue {
        auto b = betti(k, n);
        return NatInf(static_cast<long long>(b[n]));
    };
    return d;
}

/// A pushout of g: A → C along an inclusion s: A → B, with the retraction witness if it checks out.
struct RetractPushout {
    Cocone<Simp> cocone;
    bool witnessed = false;
    std::string reason;
};

inline std::optional<RetractPushout> pushout_along_retract_inclusion(const SimplicialMap& g, const SimplicialMap& s,
                                                                     const std::optional<SimplicialMap>& r) {
    Simp cat;
    if (auto e = cat.validate(s)) throw UsageError("pushout_along_retract_inclusion: s invalid: " + *e);
    if (auto e = cat.validate(g)) throw UsageError("pushout_along_retract_inclusion: g invalid: " + *e);
    auto co = cat.pushout(s, g);
    if (!co) return std::nullopt;
    RetractPushout out{*co, false, ""};
    std::set<std::size_t> img(s.vmap.begin(), s.vmap.end());
    if (img.size() != s.vmap.size()) out.reason = "s is not injective on vertices";
    else if (!r) out.reason = "no retraction supplied";
    else if (cat.validate(*r)) out.reason = "retraction is not simplicial";
    else if (!valid_witness(cat, SectionRetraction<Simp>{s, *r})) out.reason = "r∘s is not the identity";
    else out.witnessed = true;
    return out;
}

/// B_n(P) + B_n(A) = B_n(C) + B_n(B) for n ≤ nmax. Without a witnessed retraction every degree is
/// not-applicable unless the gate is switched off.
inline ViolationReport mayer_vietoris_check(const RetractPushout& po, std::size_t nmax, bool gated = true) {
    ViolationReport rep("Mayer-Vietoris on a pushout along an inclusion");
    const auto& co = po.cocone;
    auto bP = betti(co.apex, nmax), bA = betti(co.s.dom, nmax), bB = betti(co.s.cod, nmax),
         bC = betti(co.g.cod, nmax);
    for (std::size_t n = 0; n <= nmax; ++n) {
        std::string check = "betti-" + std::to_string(n);
        if (gated && !po.witnessed) {
            rep.add(check, Status::not_applicable, Json{{"reason", po.reason}});
            continue;
        }
        std::size_t lhs = bP[n] + bA[n], rhs = bC[n] + bB[n];
        rep.add(check, lhs == rhs ? Status::pass : Status::fail, Json{{"gated", gated}},
                std::to_string(bP[n]) + " + " + std::to_string(bA[n]) + " = " + std::to_string(lhs),
                std::to_string(bC[n]) + " + " + std::to_string(bB[n]) + " = " + std::to_string(rhs));
    }
    return rep;
}

/// X ← A → Y glued through collars: X ← A×{0} by f, the prism A×I, A×{1} → Y by g. Each collar is
/// the prism with one end pushed forward along the map, so collapsed simplices stay collapsed.
inline SimplicialComplex double_mapping_cylinder(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.dom.key() != g.dom.key()) throw UsageError("double_mapping_cylinder: maps need a common domain");
    const auto& A = f.dom;
    const std::size_t nx = f.cod.vertex_count(), na = A.vertex_count(), ny = g.cod.vertex_count();
    std::vector<std::string> labels;
    for (const auto& l : f.cod.labels()) labels.push_back("X." + l);
    for (const auto& l : A.labels()) labels.push_back("A0." + l);
    for (const auto& l : A.labels()) labels.push_back("A1." + l);
    for (const auto& l : g.cod.labels()) labels.push_back("Y." + l);
    auto a0 = [&](std::size_t v) { return nx + v; };
    auto a1 = [&](std::size_t v) { return nx + na + v; };
    auto y = [&](std::size_t v) { return nx + 2 * na + v; };
    std::vector<Simplex> facets;
    for (const auto& s : f.cod.facets()) facets.push_back(s);
    for (const auto& s : g.cod.facets()) {
        Simplex t;
        for (auto v : s) t.push_back(y(v));
        facets.push_back(t);
    }
    // bottom vertices v0..vi then top vertices vi..vk
    auto prism = [&](auto&& bottom, auto&& top) {
        for (const auto& s : A.facets())
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex t;
                for (std::size_t j = 0; j <= i; ++j) t.push_back(bottom(s[j]));
                for (std::size_t j = i; j < s.size(); ++j) t.push_back(top(s[j]));
                facets.push_back(t);
            }
    };
    prism([&](std::size_t v) { return f(v); }, a0);
    prism(a0, a1);
    prism(a1, [&](std::size_t v) { return y(g(v)); });
    return SimplicialComplex(labels, facets);
}

namespace cx {

inline SimplicialComplex make(std::vector<std::string> labels, std::vector<Simplex> facets) {
    return SimplicialComplex(std::move(labels), std::move(facets));
}
inline SimplicialComplex point(const std::string& l = "p") { return make({l}, {{0}}); }
inline SimplicialComplex discrete(std::size_t n) { return make(FinSetObj::range(n).labels(), {}); }
inline SimplicialComplex edge() { return make({"0", "1"}, {{0, 1}}); }
/// Boundary of an n-gon, n ≥ 3.
inline SimplicialComplex cycle(std::size_t n) {
    std::vector<Simplex> f;
    for (std::size_t i = 0; i < n; ++i) f.push_back({i, (i + 1) % n});
    return make(FinSetObj::range(n).labels(), f);
}
inline SimplicialComplex triangle() { return make({"0", "1", "2"}, {{0, 1, 2}}); }
inline SimplicialComplex tetra_boundary() {
    return make({"0", "1", "2", "3"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}
inline SimplicialComplex solid_tetra() { return make({"0", "1", "2", "3"}, {{0, 1, 2, 3}}); }
/// Cone over a triangle boundary: a disk whose boundary is the circle 0,1,2.
inline SimplicialComplex cone_disk(const std::string& apex = "o") {
    return make({"0", "1", "2", apex}, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
}
inline SimplicialComplex two_cones_sphere() {
    return make({"0", "1", "2", "n", "s"}, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
}
/// Two triangles sharing vertex 0.
inline SimplicialComplex wedge_circles() {
    return make({"0", "a1", "a2", "b1", "b2"}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}
/// 3×3 grid on a square with opposite sides identified, two triangles per cell.
inline SimplicialComplex torus() {
    std::vector<std::string> l;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) l.push_back("t" + std::to_string(i) + std::to_string(j));
    auto v = [](std::size_t i, std::size_t j) { return (i % 3) * 3 + (j % 3); };
    std::vector<Simplex> f;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            f.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            f.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
        }
    return make(std::move(l), std::move(f));
}

}  // namespace cx

inline SimplicialMap smap(const SimplicialComplex& dom, const SimplicialComplex& cod, std::vector<std::size_t> v) {
    SimplicialMap f{dom, cod, std::move(v)};
    if (auto e = Simp{}.validate(f)) throw UsageError("simplicial map invalid: " + *e);
    return f;
}

struct SimplicialFixture {
    std::string name;
    SimplicialMap s;  ///< A → B
    SimplicialMap g;  ///< A → C
    std::optional<SimplicialMap> r;
};

/// Pushouts along retract inclusions, plus the equator of a sphere which is not a retract.
inline std::vector<SimplicialFixture> simplicial_fixtures() {
    using namespace cx;
    std::vector<SimplicialFixture> out;
    auto P = point("a"), C3 = cycle(3), C4 = cycle(4), E = edge(), T = triangle(), S2 = tetra_boundary();

    out.push_back({"wedge-of-circles", smap(P, C3, {0}), smap(P, C3, {0}), smap(C3, P, {0, 0, 0})});
    out.push_back({"identity-inclusion", smap(C3, C3, {0, 1, 2}), smap(C3, C4, {0, 1, 0}),
                   smap(C3, C3, {0, 1, 2})});
    {
        auto B = make({"0", "1", "2", "u", "v", "w"}, {{0, 1}, {1, 2}, {0, 2}, {3, 4, 5}});
        out.push_back({"circle-plus-disjoint-disk", smap(C3, B, {0, 1, 2}), smap(C3, C3, {0, 1, 2}),
                       smap(B, C3, {0, 1, 2, 0, 0, 0})});
    }
    out.push_back({"whisker-on-circle", smap(P, E, {0}), smap(P, C4, {2}), smap(E, P, {0, 0})});
    out.push_back({"sphere-wedge-circle", smap(P, S2, {0}), smap(P, C3, {1}), smap(S2, P, {0, 0, 0, 0})});
    out.push_back({"triangle-on-circle-edge", smap(E, T, {0, 1}), smap(E, C4, {1, 2}), smap(T, E, {0, 1, 0})});
    {
        auto A = discrete(2);
        auto B = make({"p", "q", "x1", "x2", "y1", "y2"}, {{0, 2}, {2, 3}, {0, 3}, {1, 4}, {4, 5}, {1, 5}});
        out.push_back({"circles-at-both-ends", smap(A, B, {0, 1}), smap(A, E, {0, 1}),
                       smap(B, A, {0, 1, 0, 0, 1, 1})});
    }
    out.push_back({"arc-in-circle-onto-disk", smap(E, C3, {0, 1}), smap(E, T, {0, 2}), smap(C3, E, {0, 1, 0})});
    out.push_back({"point-in-solid-tetra", smap(P, solid_tetra(), {3}), smap(P, S2, {0}),
                   smap(solid_tetra(), P, {0, 0, 0, 0})});
    out.push_back({"edge-collapse-whisker",
                   smap(E, make({"0", "1", "w"}, {{0, 1}, {0, 2}}), {0, 1}), smap(E, P, {0, 0}),
                   smap(make({"0", "1", "w"}, {{0, 1}, {0, 2}}), E, {0, 1, 0})});
    {
        auto B = make({"0", "1", "2", "3"}, {{0, 1, 2}, {0, 2, 3}});
        out.push_back({"square-onto-triangle-edge", smap(E, B, {0, 1}), smap(E, S2, {2, 3}),
                       smap(B, E, {0, 1, 1, 0})});
    }
    auto D = cone_disk("n");
    out.push_back({"equator-in-disk", smap(C3, D, {0, 1, 2}), smap(C3, cone_disk("s"), {0, 1, 2}), std::nullopt});
    return out;
}

/// The square Bl ×_I Bl → Bl, Bl → I for the stick-with-a-3-cell, its apex built directly.
struct BalloonSquare {
    SimplicialComplex interval, balloon, apex;
    SimplicialMap left, right;  ///< the two retractions Bl → I
    SimplicialMap pi0, pi1;     ///< apex → Bl, with right∘pi0 = left∘pi1
    SimplicialMap left_section, right_section;
};

inline BalloonSquare balloon_square() {
    auto I = cx::make({"0", "1"}, {{0, 1}});
    // o is where the cell meets the stick, e the free end
    auto Bl = cx::make({"o", "e", "b1", "b2", "b3"}, {{0, 1}, {0, 2, 3, 4}});
    auto l = smap(Bl, I, {0, 1, 0, 0, 0});
    auto r = smap(Bl, I, {1, 0, 1, 1, 1});
    auto P = cx::make({"u", "v", "L1", "L2", "L3", "R1", "R2", "R3"}, {{0, 1}, {0, 2, 3, 4}, {1, 5, 6, 7}});
    auto p0 = smap(P, Bl, {0, 1, 2, 3, 4, 1, 1, 1});
    auto p1 = smap(P, Bl, {1, 0, 1, 1, 1, 2, 3, 4});
    return {I, Bl, P, l, r, p0, p1, smap(I, Bl, {0, 1}), smap(I, Bl, {1, 0})};
}

/// Classical dimension fails the dimension equation on the balloon square: 3+1 against 3+3.
inline ViolationReport balloon_counterexample() {
    Simp cat;
    auto b = balloon_square();
    ViolationReport rep("classical dimension on the balloon square");
    rep.expect("square-commutes", cat.equal(cat.compose(b.right, b.pi0), cat.compose(b.left, b.pi1)));
    rep.expect("left-is-retraction", valid_witness(cat, SectionRetraction<Simp>{b.left_section, b.left}));
    rep.expect("right-is-retraction", valid_witness(cat, SectionRetraction<Simp>{b.right_section, b.right}));
    auto bb = betti(b.balloon, 3);
    rep.expect("balloon-contractible", bb == std::vector<std::size_t>{1, 0, 0, 0},
               Json{{"betti", bb}});
    auto dP = classical_dim(b.apex), dI = classical_dim(b.interval), dB = classical_dim(b.balloon);
    BigInt lhs = dP.value() + dI.value(), rhs = dB.value() + dB.value();
    rep.add("classical-dimension-equation", lhs == rhs ? Status::pass : Status::fail,
            Json{{"apex-facets", b.apex.facets().size()}},
            dP.str() + "+" + dI.str() + " = " + lhs.str(), dB.str() + "+" + dB.str() + " = " + rhs.str());
    return rep;
}

/// Small complexes used by the square sampler.
inline std::vector<SimplicialComplex> simplicial_corpus() {
    using namespace cx;
    return {point(),
            discrete(2),
            edge(),
            make({"0", "1", "2"}, {{0, 1}, {1, 2}}),
            cycle(3),
            triangle(),
            make({"0", "1", "2", "w"}, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
            cycle(4),
            make({"0", "1", "2", "3"}, {{0, 1, 2}, {2, 3}})};
}

}  // namespace tandim
