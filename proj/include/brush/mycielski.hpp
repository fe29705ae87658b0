#pragma once

#include <utility>
#include <vector>

#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/orientation.hpp"

namespace brush {

// Names the three vertex groups of a transformed graph: the originals
// v_0..v_{n-1} keep their ids, shadow x_i = n + i, and the root is 2n.
struct MycielskiLabeling {
    std::vector<int> original;
    std::vector<int> shadow;
    int root = -1;
};

struct MycielskiResult {
    Graph graph;
    MycielskiLabeling labeling;
};

namespace detail {

inline void require_mycielski_input(const Graph& g) {
    if (g.vertex_count() < 2)
        throw invalid_input("mycielski needs at least two vertices");
    if (g.edge_count() < 1)
        throw invalid_input("mycielski needs at least one edge");
}

inline MycielskiLabeling mycielski_labeling(int n) {
    MycielskiLabeling lab;
    lab.original.resize(static_cast<std::size_t>(n));
    lab.shadow.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        lab.original[i] = i;
        lab.shadow[i] = n + i;
    }
    lab.root = 2 * n;
    return lab;
}

}  // namespace detail

// Mycielski transform: keep the original edges, mirror each edge (u, v)
// into (u, x_v) and (v, x_u), and join a fresh root to every shadow vertex.
// The result has 2n+1 vertices and 3*edge_count + n edges.
inline MycielskiResult mycielski(const Graph& g) {
    detail::require_mycielski_input(g);
    const int n = g.vertex_count();
    std::vector<Graph::Edge> edges = g.edges();
    edges.reserve(static_cast<std::size_t>(3 * g.edge_count() + n));
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i)
        edges.emplace_back(n + i, 2 * n);
    return {Graph(2 * n + 1, std::move(edges)), detail::mycielski_labeling(n)};
}

// Directed Mycielski transform: keep the arcs of `orient`, direct every
// mirror edge from the original layer into the shadow layer, and every
// root edge from a shadow vertex to the root. Forgetting directions yields
// mycielski(g) exactly, and an acyclic `orient` gives an acyclic result.
inline Orientation directed_mycielski(const Graph& g, const Orientation& orient) {
    if (orient.base() != g)
        throw invalid_input("orientation does not belong to this graph");
    const int n = g.vertex_count();
    MycielskiResult mu = mycielski(g);

    std::vector<bool> reversed(static_cast<std::size_t>(mu.graph.edge_count()));
    auto direct = [&](int t, int h) {
        int e = mu.graph.edge_index(t, h);
        reversed[e] = t > h;
    };
    for (int e = 0; e < g.edge_count(); ++e)
        direct(orient.tail(e), orient.head(e));
    for (const auto& [u, v] : g.edges()) {
        direct(u, n + v);
        direct(v, n + u);
    }
    for (int i = 0; i < n; ++i)
        direct(n + i, 2 * n);
    return Orientation(std::move(mu.graph), std::move(reversed));
}

struct IteratedMycielskiResult {
    Graph graph;
    // One labeling per application; history[i] names the groups of the
    // graph produced by the (i+1)-th application.
    std::vector<MycielskiLabeling> history;
};

inline IteratedMycielskiResult iterated_mycielski(const Graph& g, int k) {
    if (k < 1)
        throw invalid_input("iterated_mycielski needs k >= 1");
    IteratedMycielskiResult result{g, {}};
    for (int i = 0; i < k; ++i) {
        MycielskiResult step = mycielski(result.graph);
        result.graph = std::move(step.graph);
        result.history.push_back(std::move(step.labeling));
    }
    return result;
}

}  // namespace brush
