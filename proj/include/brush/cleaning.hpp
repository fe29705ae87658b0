#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/orientation.hpp"

namespace brush {

// Per-vertex brush counts for a graph with a fixed number of vertices.
class BrushAllocation {
public:
    BrushAllocation() = default;

    explicit BrushAllocation(int vertex_count)
        : counts_(static_cast<std::size_t>(check_size(vertex_count)), 0) {}

    explicit BrushAllocation(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int c : counts_)
            if (c < 0)
                throw invalid_input("brush counts must be nonnegative");
    }

    int size() const noexcept { return static_cast<int>(counts_.size()); }
    int at(int v) const { return counts_[check(v)]; }
    void set(int v, int count) {
        if (count < 0)
            throw invalid_input("brush counts must be nonnegative");
        counts_[check(v)] = count;
    }
    const std::vector<int>& counts() const noexcept { return counts_; }

    int total() const {
        return std::accumulate(counts_.begin(), counts_.end(), 0);
    }

private:
    static int check_size(int n) {
        if (n < 0)
            throw invalid_input("vertex count must be nonnegative");
        return n;
    }
    int check(int v) const {
        if (v < 0 || v >= size())
            throw invalid_input("vertex id out of range: " + std::to_string(v));
        return v;
    }
    std::vector<int> counts_;
};

// One brush traveling along the edge {from, to}, from `from` to `to`.
struct BrushMove {
    int from;
    int to;
    friend bool operator==(const BrushMove& a, const BrushMove& b) {
        return a.from == b.from && a.to == b.to;
    }
};

struct CleaningStep {
    int vertex;                     // who fired
    std::vector<BrushMove> moves;   // one per edge cleaned at this step
    std::vector<int> brushes_after; // per-vertex counts after the step
};

enum class Outcome { cleaned, stuck };

struct CleaningTrace {
    Outcome outcome = Outcome::stuck;
    std::vector<CleaningStep> steps;
    std::vector<Graph::Edge> remaining_dirty;  // empty iff cleaned
    int total_brushes = 0;                     // conserved across every step
};

// Mutable snapshot of a cleaning in progress. Edges are addressed by their
// canonical index; the brush total never changes and each vertex fires at
// most once.
struct CleaningState {
    std::vector<bool> edge_dirty;
    std::vector<int> brushes;
    std::vector<bool> fired;
    int dirty_count = 0;

    static CleaningState start(const Graph& g, const BrushAllocation& alloc) {
        if (alloc.size() != g.vertex_count())
            throw invalid_input("allocation must cover every vertex");
        CleaningState s;
        s.edge_dirty.assign(static_cast<std::size_t>(g.edge_count()), true);
        s.brushes = alloc.counts();
        s.fired.assign(static_cast<std::size_t>(g.vertex_count()), false);
        s.dirty_count = g.edge_count();
        return s;
    }

    std::vector<Graph::Edge> dirty_edges(const Graph& g) const {
        std::vector<Graph::Edge> out;
        for (int e = 0; e < g.edge_count(); ++e)
            if (edge_dirty[e])
                out.push_back(g.edges()[e]);
        return out;
    }
};

inline int dirty_degree(const Graph& g, const CleaningState& s, int v) {
    int d = 0;
    for (int u : g.neighbors(v))
        if (s.edge_dirty[g.edge_index(v, u)])
            ++d;
    return d;
}

// A vertex may fire once, when its brushes cover its dirty incident edges.
// Vertices with no dirty incident edges fire trivially.
inline bool eligible(const Graph& g, const CleaningState& s, int v) {
    return !s.fired[v] && s.brushes[v] >= dirty_degree(g, s, v);
}

// Fire v: clean every dirty incident edge, sending one brush along each to
// the other endpoint. Surplus brushes stay at v.
inline CleaningStep fire(const Graph& g, CleaningState& s, int v) {
    CleaningStep step;
    step.vertex = v;
    for (int u : g.neighbors(v)) {
        int e = g.edge_index(v, u);
        if (!s.edge_dirty[e])
            continue;
        s.edge_dirty[e] = false;
        --s.dirty_count;
        --s.brushes[v];
        ++s.brushes[u];
        step.moves.push_back({v, u});
    }
    s.fired[v] = true;
    step.brushes_after = s.brushes;
    return step;
}

namespace detail {

inline CleaningTrace finish(const Graph& g, const CleaningState& s,
                            CleaningTrace trace) {
    trace.outcome = s.dirty_count == 0 ? Outcome::cleaned : Outcome::stuck;
    trace.remaining_dirty = s.dirty_edges(g);
    return trace;
}

}  // namespace detail

// Cleaning under the min-index policy: each step fires the lowest-id
// eligible unfired vertex. Stuck (dirty edges remain with nobody eligible)
// is a valid outcome, not an error.
inline CleaningTrace simulate(const Graph& g, const BrushAllocation& alloc) {
    CleaningState s = CleaningState::start(g, alloc);
    CleaningTrace trace;
    trace.total_brushes = alloc.total();
    for (;;) {
        int next = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (eligible(g, s, v)) {
                next = v;
                break;
            }
        }
        if (next < 0)
            break;
        trace.steps.push_back(fire(g, s, next));
    }
    return detail::finish(g, s, trace);
}

// Cleaning under an explicit firing order (distinct vertex ids, not
// necessarily all of them). Processing stops at the first vertex in the
// order that is not eligible at its turn.
inline CleaningTrace simulate(const Graph& g, const BrushAllocation& alloc,
                              const std::vector<int>& order) {
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : order) {
        if (v < 0 || v >= g.vertex_count())
            throw invalid_input("order vertex id out of range: " + std::to_string(v));
        if (seen[v])
            throw invalid_input("order repeats vertex " + std::to_string(v));
        seen[v] = true;
    }
    CleaningState s = CleaningState::start(g, alloc);
    CleaningTrace trace;
    trace.total_brushes = alloc.total();
    for (int v : order) {
        if (!eligible(g, s, v))
            break;
        trace.steps.push_back(fire(g, s, v));
    }
    return detail::finish(g, s, trace);
}

// Minimum allocation total that admits at least a first firing step: the
// minimum degree. No cleaning guarantee is implied.
inline int min_start_brushes(const Graph& g) {
    if (g.vertex_count() == 0)
        throw invalid_input("min_start_brushes of the empty graph is undefined");
    return g.min_degree();
}

// sum_v max(0, outdeg(v) - indeg(v)): the minimum brush total that cleans
// this orientation when it is cleanable at all. Pure arithmetic.
inline int orientation_cost(const Orientation& o) {
    int cost = 0;
    for (int v = 0; v < o.base().vertex_count(); ++v)
        cost += std::max(0, o.out_degree(v) - o.in_degree(v));
    return cost;
}

// An orientation admits a full cleaning iff it is acyclic: a cleaning
// sequence is a topological order, and every vertex on a directed cycle
// waits forever for an in-arc.
inline bool is_cleanable(const Orientation& o) { return is_acyclic(o); }

// The allocation max(0, outdeg - indeg) per vertex; the cheapest one that
// cleans an acyclic orientation.
inline BrushAllocation greedy_allocation(const Orientation& o) {
    BrushAllocation alloc(o.base().vertex_count());
    for (int v = 0; v < o.base().vertex_count(); ++v)
        alloc.set(v, std::max(0, o.out_degree(v) - o.in_degree(v)));
    return alloc;
}

// Directed cleaning: a vertex may fire when all of its in-arcs are clean
// and its brushes cover its (still dirty) out-arcs. Min-index policy.
inline CleaningTrace directed_simulate(const Orientation& o,
                                       const BrushAllocation& alloc) {
    const Graph& g = o.base();
    CleaningState s = CleaningState::start(g, alloc);
    CleaningTrace trace;
    trace.total_brushes = alloc.total();

    auto eligible_arc = [&](int v) {
        if (s.fired[v])
            return false;
        for (int e : o.in_edges(v))
            if (s.edge_dirty[e])
                return false;
        int dirty_out = 0;
        for (int e : o.out_edges(v))
            if (s.edge_dirty[e])
                ++dirty_out;
        return s.brushes[v] >= dirty_out;
    };

    for (;;) {
        int next = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (eligible_arc(v)) {
                next = v;
                break;
            }
        }
        if (next < 0)
            break;
        CleaningStep step;
        step.vertex = next;
        for (int e : o.out_edges(next)) {
            if (!s.edge_dirty[e])
                continue;
            s.edge_dirty[e] = false;
            --s.dirty_count;
            --s.brushes[next];
            ++s.brushes[o.head(e)];
            step.moves.push_back({next, o.head(e)});
        }
        s.fired[next] = true;
        step.brushes_after = s.brushes;
        trace.steps.push_back(std::move(step));
    }
    return detail::finish(g, s, trace);
}

}  // namespace brush
