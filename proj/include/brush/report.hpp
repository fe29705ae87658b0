#pragma once

#include <string>

#include <json.hpp>

#include "brush/cleaning.hpp"
#include "brush/graph.hpp"
#include "brush/orientation.hpp"
#include "brush/solver.hpp"
#include "brush/verify.hpp"

namespace brush {

// JSON report schema, version 1. A report document is
//   { "schema_version": 1, "tool": "brush", "config": {...}, "results": [...] }
// where every result record carries a "type" of "exact", "verify" or
// "simulate" plus the fields below. Counts are always integers; schema
// evolution is additive only.
inline constexpr int report_schema_version = 1;

inline nlohmann::json graph_summary_json(const Graph& g) {
    return {{"vertices", g.vertex_count()}, {"edge_count", g.edge_count()}};
}

inline nlohmann::json arcs_json(const Orientation& o) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [t, h] : o.arcs())
        arcs.push_back({t, h});
    return arcs;
}

inline nlohmann::json result_json(const Graph& g, const BrushNumberResult& r) {
    return {{"type", "exact"},
            {"graph", graph_summary_json(g)},
            {"engine", to_string(r.method)},
            {"value", r.value},
            {"complete", r.complete},
            {"witness_order", r.witness_order},
            {"witness_arcs", arcs_json(r.witness_orientation)}};
}

inline nlohmann::json trace_json(const Graph& g, const CleaningTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        nlohmann::json moves = nlohmann::json::array();
        for (const auto& move : step.moves)
            moves.push_back({move.from, move.to});
        steps.push_back({{"fire", step.vertex}, {"moves", moves}});
    }
    nlohmann::json dirty = nlohmann::json::array();
    for (const auto& [u, v] : trace.remaining_dirty)
        dirty.push_back({u, v});
    return {{"type", "simulate"},
            {"graph", graph_summary_json(g)},
            {"outcome", trace.outcome == Outcome::cleaned ? "cleaned" : "stuck"},
            {"total_brushes", trace.total_brushes},
            {"steps", steps},
            {"remaining_dirty", dirty}};
}

inline nlohmann::json theorem_json(const TheoremReport& report) {
    return {{"type", "verify"},
            {"graph",
             {{"vertices", report.base_vertices}, {"edge_count", report.base_edges}}},
            {"engine", to_string(report.engine)},
            {"formula_value", report.formula_value},
            {"exact_value", report.exact_value},
            {"matches", report.matches},
            {"mu_arrow_cost", report.mu_arrow_cost},
            {"optimal_arcs", arcs_json(report.base_optimal_orientation)},
            {"exact_witness", report.exact_witness}};
}

inline nlohmann::json report_document(nlohmann::json config) {
    return {{"schema_version", report_schema_version},
            {"tool", "brush"},
            {"config", std::move(config)},
            {"results", nlohmann::json::array()}};
}

namespace detail {

inline bool all_integers(const nlohmann::json& array) {
    if (!array.is_array())
        return false;
    for (const auto& x : array)
        if (!x.is_number_integer())
            return false;
    return true;
}

inline bool valid_graph_summary(const nlohmann::json& g) {
    return g.is_object() && g.contains("vertices") && g["vertices"].is_number_integer() &&
           g.contains("edge_count") && g["edge_count"].is_number_integer();
}

inline bool valid_pair_list(const nlohmann::json& list) {
    if (!list.is_array())
        return false;
    for (const auto& p : list)
        if (!p.is_array() || p.size() != 2 || !all_integers(p))
            return false;
    return true;
}

inline bool valid_record(const nlohmann::json& r) {
    if (!r.is_object() || !r.contains("type") || !r["type"].is_string())
        return false;
    if (!r.contains("graph") || !valid_graph_summary(r["graph"]))
        return false;
    const std::string type = r["type"];
    if (type == "exact") {
        return r.contains("engine") && r["engine"].is_string() &&
               r.contains("value") && r["value"].is_number_integer() &&
               r.contains("complete") && r["complete"].is_boolean() &&
               r.contains("witness_order") && all_integers(r["witness_order"]) &&
               r.contains("witness_arcs") && valid_pair_list(r["witness_arcs"]);
    }
    if (type == "verify") {
        return r.contains("formula_value") && r["formula_value"].is_number_integer() &&
               r.contains("exact_value") && r["exact_value"].is_number_integer() &&
               r.contains("matches") && r["matches"].is_boolean() &&
               r.contains("mu_arrow_cost") && r["mu_arrow_cost"].is_number_integer() &&
               r.contains("optimal_arcs") && valid_pair_list(r["optimal_arcs"]) &&
               r.contains("exact_witness") && all_integers(r["exact_witness"]);
    }
    if (type == "simulate") {
        if (!r.contains("outcome") || !r["outcome"].is_string() ||
            (r["outcome"] != "cleaned" && r["outcome"] != "stuck"))
            return false;
        if (!r.contains("total_brushes") || !r["total_brushes"].is_number_integer())
            return false;
        if (!r.contains("steps") || !r["steps"].is_array())
            return false;
        for (const auto& step : r["steps"]) {
            if (!step.is_object() || !step.contains("fire") ||
                !step["fire"].is_number_integer() || !step.contains("moves") ||
                !valid_pair_list(step["moves"]))
                return false;
        }
        return r.contains("remaining_dirty") && valid_pair_list(r["remaining_dirty"]);
    }
    return false;
}

}  // namespace detail

// Structural check of a report document against schema version 1.
inline bool validate_report(const nlohmann::json& doc) {
    if (!doc.is_object())
        return false;
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
        doc["schema_version"] != report_schema_version)
        return false;
    if (!doc.contains("tool") || !doc["tool"].is_string())
        return false;
    if (!doc.contains("config") || !doc["config"].is_object())
        return false;
    if (!doc.contains("results") || !doc["results"].is_array())
        return false;
    for (const auto& record : doc["results"])
        if (!detail::valid_record(record))
            return false;
    return true;
}

}  // namespace brush
