#pragma once

/// @file graph.hpp
/// @brief Looped graphs, their pushouts, and the vertex-count dimension on Grph^op.

#include "tandim/finset.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tandim {

/// Undirected graph with a loop at every vertex; loops are implicit, edges stored as u < v.
class LoopedGraph {
public:
    LoopedGraph() = default;
    LoopedGraph(FinSetObj vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : vertices_(std::move(vertices)) {
        for (auto [u, v] : edges) {
            if (u >= vertices_.size() || v >= vertices_.size())
                throw UsageError("LoopedGraph: edge endpoint out of range");
            if (u != v) edges_.insert({std::min(u, v), std::max(u, v)});
        }
    }

    static LoopedGraph complete(std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return LoopedGraph(FinSetObj::range(n), e);
    }
    static LoopedGraph discrete(std::size_t n) { return LoopedGraph(FinSetObj::range(n), {}); }

    const FinSetObj& vertices() const { return vertices_; }
    std::size_t order() const { return vertices_.size(); }
    const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    bool adjacent(std::size_t u, std::size_t v) const {
        return u == v || edges_.count({std::min(u, v), std::max(u, v)}) > 0;
    }

    friend bool operator==(const LoopedGraph&, const LoopedGraph&) = default;

    std::string str() const {
        std::string s = "G" + vertices_.str() + "[";
        bool first = true;
        for (auto [u, v] : edges_) {
            s += (first ? "" : ",") + vertices_.label(u) + "-" + vertices_.label(v);
            first = false;
        }
        return s + "]";
    }

private:
    FinSetObj vertices_;
    std::set<std::pair<std::size_t, std::size_t>> edges_;
};

struct GraphHom {
    LoopedGraph dom;
    LoopedGraph cod;
    std::vector<std::size_t> vmap;

    FinFn on_vertices() const { return FinFn{dom.vertices(), cod.vertices(), vmap}; }
};

class Grph {
public:
    using Object = LoopedGraph;
    using Morphism = GraphHom;

    std::string name() const { return "Grph"; }

    GraphHom identity(const LoopedGraph& g) const {
        return GraphHom{g, g, FinSet{}.identity(g.vertices()).table};
    }
    GraphHom compose(const GraphHom& g, const GraphHom& f) const {
        if (!(f.cod == g.dom)) throw UsageError("Grph: composing non-composable maps");
        std::vector<std::size_t> t(f.vmap.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.vmap[f.vmap[i]];
        return GraphHom{f.dom, g.cod, std::move(t)};
    }
    bool equal(const GraphHom& f, const GraphHom& g) const {
        return f.dom == g.dom && f.cod == g.cod && f.vmap == g.vmap;
    }
    bool same_object(const LoopedGraph& x, const LoopedGraph& y) const { return x == y; }
    LoopedGraph domain(const GraphHom& f) const { return f.dom; }
    LoopedGraph codomain(const GraphHom& f) const { return f.cod; }
    std::string describe(const LoopedGraph& g) const { return g.str(); }
    std::string describe(const GraphHom& f) const { return f.on_vertices().str(); }

    std::optional<std::string> validate(const GraphHom& f) const {
        if (f.vmap.size() != f.dom.order()) return "vertex map size differs from domain";
        for (auto v : f.vmap)
            if (v >= f.cod.order()) return "vertex image outside codomain";
        for (auto [u, v] : f.dom.edges())
            if (!f.cod.adjacent(f.vmap[u], f.vmap[v])) return "edge not preserved";
        return std::nullopt;
    }

    /// Vertices glue as sets; edges are the images of the edges of both legs.
    std::optional<Cocone<Grph>> pushout(const GraphHom& s, const GraphHom& g) const {
        auto co = *FinSet{}.pushout(s.on_vertices(), g.on_vertices());
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (auto [u, v] : s.cod.edges()) edges.emplace_back(co.in0.table[u], co.in0.table[v]);
        for (auto [u, v] : g.cod.edges()) edges.emplace_back(co.in1.table[u], co.in1.table[v]);
        LoopedGraph P(co.apex, edges);
        return Cocone<Grph>{s, g, P, GraphHom{s.cod, P, co.in0.table},
                            GraphHom{g.cod, P, co.in1.table}};
    }

    GraphHom copair(const Cocone<Grph>& co, const GraphHom& u, const GraphHom& v) const {
        Cocone<FinSet> sc{co.s.on_vertices(), co.g.on_vertices(), co.apex.vertices(),
                          co.in0.on_vertices(), co.in1.on_vertices()};
        auto fn = FinSet{}.copair(sc, u.on_vertices(), v.on_vertices());
        return GraphHom{co.apex, u.cod, fn.table};
    }

    std::optional<GraphHom> inverse(const GraphHom& f) const {
        auto inv = FinSet{}.inverse(f.on_vertices());
        if (!inv) return std::nullopt;
        GraphHom g{f.cod, f.dom, inv->table};
        if (validate(g)) return std::nullopt;
        return g;
    }

    std::optional<std::vector<GraphHom>> homs(const LoopedGraph& x, const LoopedGraph& y) const {
        auto fns = FinSet{}.homs(x.vertices(), y.vertices());
        if (!fns) return std::nullopt;
        std::vector<GraphHom> out;
        for (auto& fn : *fns) {
            GraphHom h{x, y, std::move(fn.table)};
            if (!validate(h)) out.push_back(std::move(h));
        }
        return out;
    }
};

using GrphOp = Opposite<Grph>;

inline FunctorData<GrphOp, FinSetOp> vertex_functor_op() {
    return FunctorData<GrphOp, FinSetOp>{
        "vertices",
        [](const LoopedGraph& g) { return g.vertices(); },
        [](const GrphOp::Morphism& f) { return FinSetOp::Morphism{f.m.on_vertices()}; }};
}

inline std::vector<LoopedGraph> graph_corpus() {
    return {LoopedGraph::discrete(0),
            LoopedGraph::discrete(1),
            LoopedGraph::discrete(2),
            LoopedGraph::complete(2),
            LoopedGraph(FinSetObj::range(3), {{0, 1}, {1, 2}}),
            LoopedGraph::complete(3),
            LoopedGraph(FinSetObj::range(3), {{0, 1}})};
}

inline DimensionFunction<LoopedGraph> vertex_count_dimension(const ViolationReport* audit = nullptr) {
    return transport_dimension(vertex_functor_op(), cardinality_dimension(), audit);
}

/// Vertex count checked on sampled Grph^op squares, after auditing that the vertex functor
/// carries those squares to pullbacks in FinSet^op.
inline ViolationReport graph_dimension_check(std::size_t budget, std::uint64_t seed) {
    GrphOp cat{Grph{}};
    HomIndex<GrphOp> index(cat, graph_corpus());
    auto squares = sample_admissible_squares(cat, index, budget, seed);
    std::vector<Square<GrphOp>> plain;
    for (const auto& s : squares) plain.push_back(s.square);
    auto audit = check_preserves_pullbacks(cat, FinSetOp{FinSet{}}, vertex_functor_op(), plain);
    auto dim = vertex_count_dimension(&audit);
    ViolationReport rep("vertex-count dimension on Grph^op");
    rep.merge(audit, "vertex-functor");
    rep.merge(verify_dimension_harness(cat, dim, squares));
    return rep;
}

}  // namespace tandim
