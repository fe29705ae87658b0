#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "brush/error.hpp"
#include "brush/graph.hpp"

namespace brush {

// A direction assignment for every edge of a graph.
//
// The direction of edge i is one bit: false means the arc runs from the
// lower endpoint to the higher one, true means it is reversed. The bits of
// all edges, in canonical edge order, form the orientation's integer
// encoding (edge i contributes bit i). The base graph is held by value, so
// an Orientation is self-contained and immutable.
class Orientation {
public:
    Orientation() = default;

    Orientation(Graph base, std::vector<bool> reversed)
        : base_(std::move(base)), reversed_(std::move(reversed)) {
        if (static_cast<int>(reversed_.size()) != base_.edge_count())
            throw invalid_input("orientation needs one direction per edge");
        build();
    }

    // Orient every edge from the earlier vertex to the later one in `order`,
    // which must be a permutation of 0..n-1. The result is acyclic and
    // `order` is one of its topological orders.
    static Orientation from_order(Graph base, const std::vector<int>& order) {
        const int n = base.vertex_count();
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        if (static_cast<int>(order.size()) != n)
            throw invalid_input("order must list every vertex exactly once");
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            if (v < 0 || v >= n || pos[v] >= 0)
                throw invalid_input("order must be a permutation of the vertices");
            pos[v] = i;
        }
        std::vector<bool> reversed(base.edges().size());
        for (std::size_t e = 0; e < base.edges().size(); ++e) {
            const auto& [u, v] = base.edges()[e];
            reversed[e] = pos[u] > pos[v];
        }
        return Orientation(std::move(base), std::move(reversed));
    }

    const Graph& base() const noexcept { return base_; }
    int arc_count() const noexcept { return base_.edge_count(); }

    bool reversed(int e) const { return reversed_[e]; }
    int tail(int e) const { return reversed_[e] ? base_.edges()[e].second : base_.edges()[e].first; }
    int head(int e) const { return reversed_[e] ? base_.edges()[e].first : base_.edges()[e].second; }

    // (tail, head) per edge, in canonical edge order.
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(reversed_.size());
        for (int e = 0; e < arc_count(); ++e)
            out.emplace_back(tail(e), head(e));
        return out;
    }

    int out_degree(int v) const { return static_cast<int>(out_edges(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_edges(v).size()); }

    // Edge indices whose tail (resp. head) is v.
    const std::vector<int>& out_edges(int v) const { return out_[check(v)]; }
    const std::vector<int>& in_edges(int v) const { return in_[check(v)]; }

    // Bit encoding of the direction assignment; only defined for <= 63 edges.
    std::uint64_t encoding() const {
        if (arc_count() > 63)
            throw invalid_input("orientation encoding limited to 63 edges");
        std::uint64_t code = 0;
        for (int e = 0; e < arc_count(); ++e)
            if (reversed_[e])
                code |= std::uint64_t{1} << e;
        return code;
    }

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.base_ == b.base_ && a.reversed_ == b.reversed_;
    }

private:
    int check(int v) const {
        if (v < 0 || v >= base_.vertex_count())
            throw invalid_input("vertex id out of range: " + std::to_string(v));
        return v;
    }

    void build() {
        out_.assign(static_cast<std::size_t>(base_.vertex_count()), {});
        in_.assign(static_cast<std::size_t>(base_.vertex_count()), {});
        for (int e = 0; e < arc_count(); ++e) {
            out_[tail(e)].push_back(e);
            in_[head(e)].push_back(e);
        }
    }

    Graph base_;
    std::vector<bool> reversed_;
    std::vector<std::vector<int>> out_, in_;
};

// Smallest-id-first topological order (Kahn with a min-heap), or an empty
// optional when the orientation has a directed cycle.
inline std::vector<int> try_topological_order(const Orientation& o, bool* acyclic) {
    const int n = o.base().vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        indeg[v] = o.in_degree(v);
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int e : o.out_edges(v)) {
            int u = o.head(e);
            if (--indeg[u] == 0)
                ready.push(u);
        }
    }
    if (acyclic)
        *acyclic = static_cast<int>(order.size()) == n;
    return order;
}

inline bool is_acyclic(const Orientation& o) {
    bool acyclic = false;
    try_topological_order(o, &acyclic);
    return acyclic;
}

// As try_topological_order, but a directed cycle is an error.
inline std::vector<int> topological_order(const Orientation& o) {
    bool acyclic = false;
    auto order = try_topological_order(o, &acyclic);
    if (!acyclic)
        throw invalid_input("orientation has a directed cycle");
    return order;
}

}  // namespace brush
