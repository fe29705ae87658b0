#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "brush/error.hpp"

namespace brush {

// Simple undirected graph on dense vertex ids 0..n-1.
//
// Edges are stored canonically: each as (u, v) with u < v, the whole list
// sorted lexicographically. An edge's index in this list is its identity
// everywhere else in the library (orientations, cleaning state, bit
// encodings). Instances are immutable after construction and safe to share
// across threads.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;

    explicit Graph(int vertex_count) {
        if (vertex_count < 0)
            throw invalid_input("vertex count must be nonnegative");
        n_ = vertex_count;
        adj_.resize(static_cast<std::size_t>(n_));
    }

    Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
        for (auto& [u, v] : edges) {
            if (u > v)
                std::swap(u, v);
            if (u < 0 || v >= n_)
                throw invalid_input("edge endpoint out of range: " +
                                    std::to_string(u) + "-" + std::to_string(v));
            if (u == v)
                throw invalid_input("self-loop at vertex " + std::to_string(u));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw invalid_input("duplicate edge");
        edges_ = std::move(edges);
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Index of edge {u, v} in edges(), or -1 when absent.
    int edge_index(int u, int v) const {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v})
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    // Minimum degree; undefined (and rejected) for the empty graph.
    int min_degree() const {
        if (n_ == 0)
            throw invalid_input("min_degree of the empty graph is undefined");
        int best = degree(0);
        for (int v = 1; v < n_; ++v)
            best = std::min(best, degree(v));
        return best;
    }

    bool is_connected() const {
        if (n_ <= 1)
            return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        return count == n_;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int check(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_input("vertex id out of range: " + std::to_string(v));
        return v;
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Connected components as ascending vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<int> comp;
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Subgraph induced by `vertices` (must be distinct, in range). Local id i
// corresponds to vertices[i] after sorting; the returned list is that map.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw invalid_input("induced_subgraph: duplicate vertex");
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw invalid_input("induced_subgraph: vertex id out of range");
        local[v] = static_cast<int>(i);
    }
    std::vector<Graph::Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (local[u] >= 0 && local[v] >= 0)
            edges.emplace_back(local[u], local[v]);
    }
    return {Graph(static_cast<int>(vertices.size()), std::move(edges)),
            std::move(vertices)};
}

}  // namespace brush
