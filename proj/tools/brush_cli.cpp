// Command-line front end: exact brush numbers, Mycielski transforms,
// cleaning simulation, formula verification, and graph generation.
//
// Exit codes: 0 success, 1 usage or invalid parameters, 2 input parse
// error, 3 solver cap exceeded, 4 simulation ended stuck.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "brush/brush.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_parse = 2;
constexpr int exit_cap = 3;
constexpr int exit_stuck = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw brush::invalid_input("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw brush::invalid_input("cannot open output file: " + path);
    out << text;
}

// DIMACS lines start with c/p/e; everything else is edge-list.
bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        return tok == "c" || tok == "p" || tok == "e";
    }
    return false;
}

brush::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "dimacs" || (format == "auto" && looks_like_dimacs(text)))
        return brush::parse_dimacs(text);
    return brush::parse_edge_list(text);
}

// "id:count,id:count,..." over the graph's vertices; empty means all zero.
brush::BrushAllocation parse_allocation(const std::string& text, int vertex_count) {
    brush::BrushAllocation alloc(vertex_count);
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw brush::invalid_input("bad allocation entry: " + item);
        int v = 0, count = 0;
        try {
            v = std::stoi(item.substr(0, colon));
            count = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw brush::invalid_input("bad allocation entry: " + item);
        }
        if (v < 0 || v >= vertex_count)
            throw brush::invalid_input("allocation names unknown vertex " +
                                       std::to_string(v));
        alloc.set(v, count);
    }
    return alloc;
}

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> order;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        try {
            order.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw brush::invalid_input("bad order entry: " + item);
        }
    }
    return order;
}

struct CommonOptions {
    std::string input = "-";
    std::string input_format = "auto";
    std::string output;
    std::string format = "text";
    std::string engine = "dp";
    int brute_cap = brush::SolverConfig{}.brute_edge_cap;
    int dp_cap = brush::SolverConfig{}.dp_vertex_cap;
    std::uint64_t budget = 0;
    bool has_budget = false;

    brush::SolverConfig solver_config() const { return {brute_cap, dp_cap}; }
    std::optional<std::uint64_t> bnb_budget() const {
        return has_budget ? std::optional<std::uint64_t>(budget) : std::nullopt;
    }
};

nlohmann::json config_json(const std::string& subcommand, const CommonOptions& opt) {
    nlohmann::json cfg{{"subcommand", subcommand},
                       {"engine", opt.engine},
                       {"brute_edge_cap", opt.brute_cap},
                       {"dp_vertex_cap", opt.dp_cap}};
    if (opt.has_budget)
        cfg["bnb_budget"] = opt.budget;
    return cfg;
}

int run_exact(const CommonOptions& opt) {
    brush::Graph g = load_graph(opt.input, opt.input_format);
    auto result = brush::solve(g, brush::engine_from_string(opt.engine),
                               opt.solver_config(), opt.bnb_budget());
    std::ostringstream out;
    if (opt.format == "json") {
        auto doc = brush::report_document(config_json("exact", opt));
        doc["results"].push_back(brush::result_json(g, result));
        out << doc.dump(2) << "\n";
    } else if (opt.format == "dot") {
        out << brush::write_dot(result.witness_orientation);
    } else {
        out << "value " << result.value << "\n";
        if (!result.complete)
            out << "incomplete (value is an upper bound)\n";
        out << "order";
        for (int v : result.witness_order)
            out << " " << v;
        out << "\narcs";
        for (const auto& [t, h] : result.witness_orientation.arcs())
            out << " " << t << "->" << h;
        out << "\n";
    }
    write_output(opt.output, out.str());
    return exit_ok;
}

int run_mycielski(const CommonOptions& opt, int iterations) {
    brush::Graph g = load_graph(opt.input, opt.input_format);
    auto result = brush::iterated_mycielski(g, iterations);
    std::ostringstream out;
    if (opt.format == "dot") {
        brush::DotOptions dot;
        dot.labeling = &result.history.back();
        out << brush::write_dot(result.graph, dot);
    } else {
        for (std::size_t i = 0; i < result.history.size(); ++i) {
            const auto& lab = result.history[i];
            int n = static_cast<int>(lab.original.size());
            out << "# step " << i + 1 << ": originals 0.." << n - 1 << ", shadows "
                << n << ".." << 2 * n - 1 << ", root " << lab.root << "\n";
        }
        out << brush::serialize_edge_list(result.graph);
    }
    write_output(opt.output, out.str());
    return exit_ok;
}

int run_verify(const CommonOptions& opt, const std::vector<std::string>& inputs) {
    auto engine = brush::engine_from_string(opt.engine);
    std::ostringstream out;
    auto doc = brush::report_document(config_json("verify", opt));
    int matched = 0;
    for (const auto& path : inputs) {
        brush::Graph g = load_graph(path, opt.input_format);
        auto report = brush::verify_theorem(g, engine, opt.solver_config());
        matched += report.matches ? 1 : 0;
        if (opt.format == "json") {
            doc["results"].push_back(brush::theorem_json(report));
        } else {
            out << path << " n=" << report.base_vertices << " eps=" << report.base_edges
                << " formula=" << report.formula_value << " exact=" << report.exact_value
                << " matches=" << (report.matches ? "yes" : "no") << "\n";
        }
    }
    if (opt.format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        out << "matches " << matched << "/" << inputs.size() << "\n";
    }
    write_output(opt.output, out.str());
    return exit_ok;
}

int run_simulate(const CommonOptions& opt, const std::string& brushes,
                 const std::string& order_text) {
    brush::Graph g = load_graph(opt.input, opt.input_format);
    auto alloc = parse_allocation(brushes, g.vertex_count());
    brush::CleaningTrace trace = order_text.empty()
                                     ? brush::simulate(g, alloc)
                                     : brush::simulate(g, alloc, parse_order(order_text));
    std::ostringstream out;
    if (opt.format == "json") {
        auto doc = brush::report_document(config_json("simulate", opt));
        doc["results"].push_back(brush::trace_json(g, trace));
        out << doc.dump(2) << "\n";
    } else {
        out << brush::format_trace(trace);
    }
    write_output(opt.output, out.str());
    return trace.outcome == brush::Outcome::cleaned ? exit_ok : exit_stuck;
}

int run_generate(const CommonOptions& opt, const std::string& kind,
                 const std::vector<std::string>& params, std::uint64_t seed) {
    auto int_param = [&](std::size_t i) {
        try {
            return std::stoi(params.at(i));
        } catch (const std::exception&) {
            throw brush::invalid_input("bad generator parameter");
        }
    };
    auto real_param = [&](std::size_t i) {
        try {
            return std::stod(params.at(i));
        } catch (const std::exception&) {
            throw brush::invalid_input("bad generator parameter");
        }
    };
    brush::Graph g;
    if (kind == "path" && params.size() == 1) {
        g = brush::path_graph(int_param(0));
    } else if (kind == "cycle" && params.size() == 1) {
        g = brush::cycle_graph(int_param(0));
    } else if (kind == "complete" && params.size() == 1) {
        g = brush::complete_graph(int_param(0));
    } else if (kind == "star" && params.size() == 1) {
        g = brush::star_graph(int_param(0));
    } else if (kind == "random" && params.size() == 2) {
        g = brush::random_graph(int_param(0), real_param(1), seed);
    } else {
        throw brush::invalid_input("unknown generator or wrong parameter count: " + kind);
    }
    std::string text =
        opt.format == "dot" ? brush::write_dot(g) : brush::serialize_edge_list(g);
    write_output(opt.output, text);
    return exit_ok;
}

void add_common_flags(CLI::App* cmd, CommonOptions& opt,
                      const std::vector<std::string>& formats) {
    std::string help = "Output format:";
    for (const auto& f : formats)
        help += " " + f;
    cmd->add_option("--format", opt.format, help)->check(CLI::IsMember(formats));
    cmd->add_option("-o,--output", opt.output, "Output file (default: stdout)");
    cmd->add_option("--input-format", opt.input_format,
                    "Input format: auto|edgelist|dimacs")
        ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
}

void add_solver_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--engine", opt.engine, "Solver engine: dp|brute|bnb")
        ->check(CLI::IsMember({"dp", "brute", "bnb"}));
    cmd->add_option("--brute-cap", opt.brute_cap, "Edge cap for the brute engine")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dp-cap", opt.dp_cap, "Vertex cap for the dp engine")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", opt.budget, "Node budget for the bnb engine")
        ->each([&opt](const std::string&) { opt.has_budget = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brush numbers, graph cleaning, and Mycielski transforms"};
    app.require_subcommand(1);

    CommonOptions exact_opt;
    auto* exact_cmd = app.add_subcommand("exact", "Compute the brush number of a graph");
    exact_cmd->add_option("input", exact_opt.input, "Input graph file, or - for stdin");
    add_solver_flags(exact_cmd, exact_opt);
    add_common_flags(exact_cmd, exact_opt, {"text", "json", "dot"});

    CommonOptions myc_opt;
    myc_opt.format = "edgelist";
    int iterations = 1;
    auto* myc_cmd = app.add_subcommand("mycielski", "Apply the Mycielski transform");
    myc_cmd->add_option("input", myc_opt.input, "Input graph file, or - for stdin");
    myc_cmd->add_option("-k,--iterations", iterations, "Number of applications")
        ->check(CLI::PositiveNumber);
    add_common_flags(myc_cmd, myc_opt, {"edgelist", "dot"});

    CommonOptions verify_opt;
    std::vector<std::string> verify_inputs;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Compare the closed-form value 2*eps(G) against the exact "
                  "brush number of the Mycielski transform");
    verify_cmd->add_option("inputs", verify_inputs, "Input graph files")->required();
    add_solver_flags(verify_cmd, verify_opt);
    add_common_flags(verify_cmd, verify_opt, {"text", "json"});

    CommonOptions sim_opt;
    std::string brushes;
    std::string order_text;
    auto* sim_cmd = app.add_subcommand("simulate", "Run the cleaning process");
    sim_cmd->add_option("input", sim_opt.input, "Input graph file, or - for stdin");
    sim_cmd->add_option("--brushes", brushes, "Initial allocation, id:count,...");
    sim_cmd->add_option("--order", order_text,
                        "Explicit firing order, id,id,... (default: min-index policy)");
    add_common_flags(sim_cmd, sim_opt, {"text", "json"});

    CommonOptions gen_opt;
    gen_opt.format = "edgelist";
    std::string kind;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    auto* gen_cmd = app.add_subcommand("generate", "Emit a generated graph");
    gen_cmd->add_option("kind", kind, "path|cycle|complete|star|random")->required();
    gen_cmd->add_option("params", params, "Size parameters (random: n p)");
    gen_cmd->add_option("--seed", seed, "Seed for the random generator");
    add_common_flags(gen_cmd, gen_opt, {"edgelist", "dot"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (exact_cmd->parsed())
            return run_exact(exact_opt);
        if (myc_cmd->parsed())
            return run_mycielski(myc_opt, iterations);
        if (verify_cmd->parsed())
            return run_verify(verify_opt, verify_inputs);
        if (sim_cmd->parsed())
            return run_simulate(sim_opt, brushes, order_text);
        if (gen_cmd->parsed())
            return run_generate(gen_opt, kind, params, seed);
    } catch (const brush::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const brush::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    } catch (const brush::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
