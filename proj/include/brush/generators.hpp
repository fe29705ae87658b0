#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "brush/error.hpp"
#include "brush/graph.hpp"

namespace brush {

inline Graph path_graph(int n) {
    if (n < 1)
        throw invalid_input("path_graph needs n >= 1");
    std::vector<Graph::Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3)
        throw invalid_input("cycle_graph needs n >= 3");
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    if (n < 1)
        throw invalid_input("complete_graph needs n >= 1");
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

// Star with the given number of leaves: center 0, leaves 1..leaves.
inline Graph star_graph(int leaves) {
    if (leaves < 1)
        throw invalid_input("star_graph needs at least one leaf");
    std::vector<Graph::Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
}

// Deterministic G(n, p). Vertex pairs (i, j) with i < j are scanned in
// lexicographic order; the pair becomes an edge when the next draw from a
// std::mt19937_64 seeded with `seed` falls below p. A draw maps the
// generator's 64-bit output x to [0, 1) as (x >> 11) * 2^-53, so the output
// is identical across platforms for fixed (n, p, seed).
inline Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
    if (n < 1)
        throw invalid_input("random_graph needs n >= 1");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw invalid_input("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < edge_probability)
                edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

}  // namespace brush
