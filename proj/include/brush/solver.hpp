#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/orientation.hpp"

namespace brush {

enum class Engine { brute, dp, bnb };

inline std::string to_string(Engine e) {
    switch (e) {
        case Engine::brute: return "brute";
        case Engine::dp: return "dp";
        case Engine::bnb: return "bnb";
    }
    return "?";
}

inline Engine engine_from_string(const std::string& s) {
    if (s == "brute") return Engine::brute;
    if (s == "dp") return Engine::dp;
    if (s == "bnb") return Engine::bnb;
    throw invalid_input("unknown engine: " + s);
}

struct SolverConfig {
    int brute_edge_cap = 24;  // brute_force enumerates 2^edge_count orientations
    int dp_vertex_cap = 24;   // exact_dp tabulates 2^vertex_count subsets
};

struct BrushNumberResult {
    int value = 0;
    std::vector<int> witness_order;    // a topological order of the witness
    Orientation witness_orientation;   // acyclic, cost == value
    Engine method = Engine::dp;
    bool complete = true;  // false: a search budget ran out, value is an upper bound
};

// ceil(#odd-degree vertices / 2); never exceeds the brush number, since any
// orientation pays at least half a unit of imbalance per odd vertex.
inline int lower_bound_odd(const Graph& g) {
    int odd = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        odd += g.degree(v) & 1;
    return (odd + 1) / 2;
}

namespace detail {

// Cost of placing a vertex of degree d when `before` of its neighbors are
// already placed: max(0, after - before) with after = d - before.
inline int place_cost(int degree, int before) {
    return std::max(0, degree - 2 * before);
}

inline int order_cost(const Graph& g, const std::vector<int>& order) {
    std::vector<char> placed(static_cast<std::size_t>(g.vertex_count()), 0);
    int cost = 0;
    for (int v : order) {
        int before = 0;
        for (int u : g.neighbors(v))
            before += placed[u];
        cost += place_cost(g.degree(v), before);
        placed[v] = 1;
    }
    return cost;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    return adj;
}

// Exhaustive scan of all 2^m orientations of a (small) graph. Keeps the
// first minimum-cost acyclic orientation, i.e. the one with the smallest
// bit encoding. Returns (cost, reversed bits).
inline std::pair<int, std::vector<bool>> brute_component(const Graph& g) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_code = 0;
    std::vector<int> out(static_cast<std::size_t>(n)), indeg(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        std::fill(out.begin(), out.end(), 0);
        std::fill(indeg.begin(), indeg.end(), 0);
        for (auto& s : succ)
            s.clear();
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            int t = (code >> e & 1) ? v : u;
            int h = (code >> e & 1) ? u : v;
            ++out[t];
            ++indeg[h];
            succ[t].push_back(h);
        }
        stack.clear();
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0)
                stack.push_back(v);
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (int u : succ[v])
                if (--indeg[u] == 0)
                    stack.push_back(u);
        }
        if (seen != n)
            continue;  // directed cycle
        int cost = 0;
        for (int v = 0; v < n; ++v)
            cost += std::max(0, 2 * out[v] - g.degree(v));
        if (cost < best) {
            best = cost;
            best_code = code;
            if (best == 0)
                break;
        }
    }
    std::vector<bool> reversed(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        reversed[e] = (best_code >> e & 1) != 0;
    return {best, std::move(reversed)};
}

// Subset DP over vertex orders. b[S] is the cheapest completion cost when
// exactly the vertices of S are already placed; the answer is b[0]. The
// witness order is rebuilt greedily, taking the smallest vertex id that
// stays optimal at each step. Returns (cost, order).
inline std::pair<int, std::vector<int>> dp_component(const Graph& g) {
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::int32_t> b(std::size_t{1} << n);
    b[full] = 0;
    for (std::uint32_t s = full; s-- > 0;) {
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1)
                continue;
            std::int32_t c = place_cost(g.degree(v), std::popcount(adj[v] & s)) +
                             b[s | (std::uint32_t{1} << v)];
            best = std::min(best, c);
        }
        b[s] = best;
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::uint32_t s = 0;
    while (s != full) {
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1)
                continue;
            std::uint32_t t = s | (std::uint32_t{1} << v);
            if (place_cost(g.degree(v), std::popcount(adj[v] & s)) + b[t] == b[s]) {
                order.push_back(v);
                s = t;
                break;
            }
        }
    }
    return {b[0], std::move(order)};
}

struct BnbBudget {
    std::uint64_t remaining;
    bool limited;
    bool exhausted = false;

    bool spend() {
        if (!limited)
            return true;
        if (remaining == 0) {
            exhausted = true;
            return false;
        }
        --remaining;
        return true;
    }
};

struct BnbSearch {
    const Graph& g;
    std::vector<std::uint32_t> adj;
    std::uint32_t full;
    int incumbent_cost;
    std::vector<int> incumbent_order;
    std::vector<int> order;
    BnbBudget& budget;

    BnbSearch(const Graph& graph, BnbBudget& b)
        : g(graph), adj(adjacency_masks(graph)),
          full((std::uint32_t{1} << graph.vertex_count()) - 1), budget(b) {
        // seed the incumbent with the identity order
        incumbent_order.resize(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            incumbent_order[v] = v;
        incumbent_cost = order_cost(g, incumbent_order);
    }

    // Admissible bound on completing from prefix S: the remainder subgraph
    // pays at least half its odd-degree count, minus at most one unit per
    // edge crossing back into S.
    int completion_bound(std::uint32_t s) const {
        std::uint32_t r = full & ~s;
        int odd = 0, cross = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!(r >> v & 1))
                continue;
            odd += std::popcount(adj[v] & r) & 1;
            cross += std::popcount(adj[v] & s);
        }
        return std::max(0, odd / 2 - cross);
    }

    void run(std::uint32_t s, int partial) {
        if (!budget.spend())
            return;
        if (s == full) {
            if (partial < incumbent_cost) {
                incumbent_cost = partial;
                incumbent_order = order;
            }
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (s >> v & 1)
                continue;
            if (budget.exhausted)
                return;
            int c = partial + place_cost(g.degree(v), std::popcount(adj[v] & s));
            std::uint32_t t = s | (std::uint32_t{1} << v);
            if (c + completion_bound(t) >= incumbent_cost)
                continue;
            order.push_back(v);
            run(t, c);
            order.pop_back();
        }
    }
};

// Decompose into connected components; hand each local subgraph to
// `solve_local`, which appends the component's order in local ids and
// returns its cost. Witnesses are concatenated in order of smallest
// component member.
template <typename SolveLocal>
BrushNumberResult solve_by_components(const Graph& g, Engine method,
                                      SolveLocal&& solve_local) {
    BrushNumberResult result;
    result.method = method;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& comp : connected_components(g)) {
        auto [local, to_global] = induced_subgraph(g, comp);
        std::vector<int> local_order;
        result.value += solve_local(local, local_order);
        for (int v : local_order)
            order.push_back(to_global[v]);
    }
    result.witness_orientation = Orientation::from_order(g, order);
    result.witness_order = std::move(order);
    return result;
}

}  // namespace detail

// Minimum of orientation_cost over all acyclic orientations, by scanning
// all 2^edge_count direction assignments. Ties go to the smallest bit
// encoding (bit i set = edge i directed from its higher endpoint to its
// lower one). Disconnected inputs are solved per component and summed.
inline BrushNumberResult brute_force(const Graph& g, const SolverConfig& cfg = {}) {
    if (g.edge_count() > cfg.brute_edge_cap)
        throw cap_exceeded("brute_force: " + std::to_string(g.edge_count()) +
                           " edges exceed the cap of " + std::to_string(cfg.brute_edge_cap));
    if (g.edge_count() > 62)
        throw cap_exceeded("brute_force supports at most 62 edges");

    BrushNumberResult result;
    result.method = Engine::brute;
    std::vector<bool> reversed(static_cast<std::size_t>(g.edge_count()));
    for (const auto& comp : connected_components(g)) {
        auto [local, to_global] = induced_subgraph(g, comp);
        // global indices of this component's edges, ascending; local edge j
        // corresponds to the j-th of them (canonical order is preserved)
        std::vector<int> edge_ids;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (std::binary_search(comp.begin(), comp.end(), g.edges()[e].first))
                edge_ids.push_back(e);
        }
        auto [cost, local_reversed] = detail::brute_component(local);
        result.value += cost;
        for (std::size_t j = 0; j < local_reversed.size(); ++j)
            reversed[edge_ids[j]] = local_reversed[j];
    }
    result.witness_orientation = Orientation(g, std::move(reversed));
    result.witness_order = topological_order(result.witness_orientation);
    return result;
}

// Subset dynamic program over vertex orders; every acyclic orientation
// arises from some order, and the cost depends only on each vertex's
// before/after neighbor split. Always agrees with brute_force.
inline BrushNumberResult exact_dp(const Graph& g, const SolverConfig& cfg = {}) {
    if (g.vertex_count() > cfg.dp_vertex_cap)
        throw cap_exceeded("exact_dp: " + std::to_string(g.vertex_count()) +
                           " vertices exceed the cap of " + std::to_string(cfg.dp_vertex_cap));
    if (g.vertex_count() > 30)
        throw cap_exceeded("exact_dp supports at most 30 vertices");
    return detail::solve_by_components(
        g, Engine::dp, [](const Graph& local, std::vector<int>& order) {
            auto [cost, local_order] = detail::dp_component(local);
            order = std::move(local_order);
            return cost;
        });
}

// Depth-first search over vertex orders with cost-plus-bound pruning. With
// no budget it is exact; with a node budget it may stop early and report
// its incumbent as an upper bound (complete == false).
inline BrushNumberResult branch_and_bound(
    const Graph& g, std::optional<std::uint64_t> node_budget = std::nullopt,
    const SolverConfig& = {}) {
    if (g.vertex_count() > 31)
        throw cap_exceeded("branch_and_bound supports at most 31 vertices");
    detail::BnbBudget budget{node_budget.value_or(0), node_budget.has_value()};
    auto result = detail::solve_by_components(
        g, Engine::bnb, [&budget](const Graph& local, std::vector<int>& order) {
            detail::BnbSearch search(local, budget);
            if (!budget.exhausted)
                search.run(0, 0);
            order = search.incumbent_order;
            return search.incumbent_cost;
        });
    result.complete = !budget.exhausted;
    return result;
}

inline BrushNumberResult solve(const Graph& g, Engine engine,
                               const SolverConfig& cfg = {},
                               std::optional<std::uint64_t> bnb_budget = std::nullopt) {
    switch (engine) {
        case Engine::brute: return brute_force(g, cfg);
        case Engine::dp: return exact_dp(g, cfg);
        case Engine::bnb: return branch_and_bound(g, bnb_budget, cfg);
    }
    throw invalid_input("unknown engine");
}

}  // namespace brush
