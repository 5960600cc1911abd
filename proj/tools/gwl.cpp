#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwl/cliquewidth.hpp"
#include "gwl/constructions.hpp"
#include "gwl/experiments.hpp"
#include "gwl/graph.hpp"
#include "gwl/rankwidth.hpp"
#include "gwl/term.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
}

std::vector<gwl::Edge> parse_edge_list(const std::string& text) {
    std::vector<gwl::Edge> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag, a, b;
        if (!(ls >> tag) || tag == "#") continue;
        if (tag != "e" || !(ls >> a >> b))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected `e <a> <b>`");
        edges.push_back(gwl::make_edge(a, b));
    }
    return edges;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-width laboratory"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string out_path;
    bool timings = false;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write results to a file instead of stdout");
    app.add_flag("--timings", timings, "include elapsed-time fields in reports");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generator graph");
    std::string family;
    int gen_n = 0;
    bool with_coloring = false;
    gen->add_option("family", family, "G, H, Hprime or grid")
        ->required()
        ->check(CLI::IsMember({"G", "H", "Hprime", "grid"}));
    gen->add_option("n", gen_n, "size parameter")->required();
    gen->add_flag("--coloring", with_coloring, "append the proper 4-edge-coloring (grid only)");

    // contract
    auto* contract = app.add_subcommand("contract", "contract an edge set");
    std::string c_graph, c_edges;
    contract->add_option("graph", c_graph, "graph file")->required();
    contract->add_option("edges", c_edges, "edge list file (`e <a> <b>` lines)")->required();

    // alpha
    auto* alpha_cmd = app.add_subcommand("alpha", "distance-2 graph on a stable set");
    std::string a_graph, a_set;
    alpha_cmd->add_option("graph", a_graph, "graph file")->required();
    alpha_cmd->add_option("X", a_set, "comma-separated stable vertex set")->required();

    // width
    auto* width = app.add_subcommand("width", "exact width of a graph");
    std::string measure, w_graph;
    int max_k = 8, budget_vertices = 12;
    width->add_option("measure", measure, "cwd, lcwd or rwd")
        ->required()
        ->check(CLI::IsMember({"cwd", "lcwd", "rwd"}));
    width->add_option("graph", w_graph, "graph file")->required();
    width->add_option("--max-k", max_k, "largest width to try");
    width->add_option("--budget", budget_vertices, "vertex budget guard");

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "run a proof pipeline");
    std::string pipe_name;
    int pipe_size = 0;
    pipeline->add_option("name", pipe_name, "prop1 or prop1alt")
        ->required()
        ->check(CLI::IsMember({"prop1", "prop1alt"}));
    pipeline->add_option("size", pipe_size, "grid side length")->required();

    // check
    auto* check = app.add_subcommand("check", "run an exhaustive property suite");
    std::string suite;
    int check_max_n = 6;
    check->add_option("suite", suite, "prop2 or cograph-closure")
        ->required()
        ->check(CLI::IsMember({"prop2", "cograph-closure"}));
    check->add_option("--max-n", check_max_n, "largest vertex count");

    // witness
    auto* witness = app.add_subcommand("witness", "single-edge contraction witness search");
    std::int64_t w_budget_ms = 0;
    std::uint64_t w_candidates = 0;
    int w_nmax = 3;
    std::string resume_path;
    bool has_budget = false, has_candidates = false;
    witness->add_option("--budget", w_budget_ms, "time budget in milliseconds")
        ->each([&](const std::string&) { has_budget = true; });
    witness->add_option("--max-candidates", w_candidates, "candidate budget")
        ->each([&](const std::string&) { has_candidates = true; });
    witness->add_option("--n-max", w_nmax, "largest generator index");
    witness->add_option("--resume", resume_path, "checkpoint file to resume from");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "emit a DOT rendering");
    std::string d_graph;
    dot->add_option("graph", d_graph, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool json = format == "json";
        if (*gen) {
            gwl::Graph g = family == "G"        ? gwl::gen_G(gen_n)
                           : family == "H"      ? gwl::gen_H(gen_n)
                           : family == "Hprime" ? gwl::gen_Hprime(gen_n)
                                                : gwl::gen_grid(gen_n);
            if (with_coloring && family != "grid")
                throw std::invalid_argument("--coloring is available for the grid family only");
            std::string text = gwl::format_graph(g);
            if (with_coloring) text += gwl::format_coloring(gwl::grid_coloring(gen_n));
            if (json) {
                nlohmann::json j{{"family", family},
                                 {"n", gen_n},
                                 {"vertices", g.vertex_count()},
                                 {"edges", g.edge_count()},
                                 {"graph", text}};
                emit(out_path, j.dump(2) + "\n");
            } else {
                emit(out_path, text);
            }
        } else if (*contract) {
            gwl::Graph g = gwl::parse_graph(slurp(c_graph));
            gwl::ContractionResult r = gwl::contract_edges(g, parse_edge_list(slurp(c_edges)));
            if (json) {
                nlohmann::json j{{"graph", gwl::format_graph(r.graph)}};
                j["merge_map"] = nlohmann::json::object();
                for (const auto& [orig, surv] : r.merge_map)
                    if (orig != surv) j["merge_map"][orig] = surv;
                emit(out_path, j.dump(2) + "\n");
            } else {
                emit(out_path, gwl::format_graph(r.graph));
            }
        } else if (*alpha_cmd) {
            gwl::Graph g = gwl::parse_graph(slurp(a_graph));
            std::vector<std::string> x;
            std::istringstream xs(a_set);
            std::string item;
            while (std::getline(xs, item, ','))
                if (!item.empty()) x.push_back(item);
            gwl::Graph r = gwl::alpha(g, x);
            emit(out_path, json ? nlohmann::json{{"graph", gwl::format_graph(r)}}.dump(2) + "\n"
                                : gwl::format_graph(r));
        } else if (*width) {
            gwl::Graph g = gwl::parse_graph(slurp(w_graph));
            nlohmann::json j;
            std::ostringstream text;
            if (measure == "rwd") {
                gwl::RankWidthResult r = gwl::rank_width_exact(g, budget_vertices);
                j = {{"measure", "rwd"}, {"value", r.value}};
                text << "rwd = " << r.value << "\n";
            } else {
                gwl::CwSolveOptions opts;
                opts.max_vertices = budget_vertices;
                opts.max_k = max_k;
                gwl::CwSolveResult r =
                    measure == "cwd" ? gwl::cwd_exact(g, opts) : gwl::lcwd_exact(g, opts);
                j = {{"measure", measure},
                     {"value", r.value},
                     {"witness", r.witness ? gwl::print_term(r.witness) : ""}};
                text << measure << " = " << r.value << "\n";
                if (r.witness) text << "witness: " << gwl::print_term(r.witness) << "\n";
            }
            emit(out_path, json ? j.dump(2) + "\n" : text.str());
        } else if (*pipeline) {
            gwl::PipelineReport rep = pipe_name == "prop1" ? gwl::prop1_pipeline(pipe_size)
                                                           : gwl::prop1_alt_pipeline(pipe_size);
            if (json) {
                emit(out_path, rep.to_json(timings).dump(2) + "\n");
            } else {
                std::ostringstream text;
                for (const auto& s : rep.stages)
                    text << s.name << ": " << s.vertices << " vertices, " << s.edges
                         << " edges\n";
                for (const auto& [k, v] : rep.widths) text << k << " = " << v << "\n";
                text << "verdict: " << (rep.verdict ? "true" : "false") << "\n";
                if (!rep.failure.empty()) text << "failure: " << rep.failure << "\n";
                if (timings) text << "elapsed_ms: " << rep.elapsed_ms << "\n";
                emit(out_path, text.str());
            }
            if (!rep.verdict) return 1;
        } else if (*check) {
            gwl::SuiteReport rep = suite == "prop2" ? gwl::prop2_property_suite(check_max_n)
                                                    : gwl::cograph_closure_check(check_max_n);
            if (json) {
                emit(out_path, rep.to_json(timings).dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "graphs checked: " << rep.graphs_checked << "\n"
                     << "steps checked: " << rep.steps_checked << "\n"
                     << "violations: " << rep.violations << "\n";
                for (const auto& f : rep.findings) text << "finding: " << f << "\n";
                if (timings) text << "elapsed_ms: " << rep.elapsed_ms << "\n";
                emit(out_path, text.str());
            }
            if (!rep.passed()) return 1;
        } else if (*witness) {
            gwl::SearchBudget budget;
            if (has_budget) budget.max_millis = w_budget_ms;
            if (has_candidates) budget.max_candidates = w_candidates;
            budget.n_max = w_nmax;
            gwl::SearchCheckpoint resume;
            bool resuming = !resume_path.empty();
            if (resuming)
                resume = gwl::SearchCheckpoint::from_json(nlohmann::json::parse(slurp(resume_path)));
            gwl::SearchCheckpoint ck =
                gwl::witness_search(budget, resuming ? &resume : nullptr);
            if (json) {
                emit(out_path, ck.to_json(timings).dump(2) + "\n");
            } else {
                std::ostringstream text;
                text << "n: " << ck.n << "\n"
                     << "candidates examined: " << ck.candidates_examined << "\n"
                     << "matchings seen: " << ck.matchings_seen << "\n"
                     << "exhausted: " << (ck.exhausted ? "true" : "false") << "\n";
                if (ck.witness) {
                    text << "witness at n=" << ck.witness->n << ", cwd " << ck.witness->cwd_before
                         << " -> " << ck.witness->cwd_after << "\n";
                    for (const auto& e : ck.witness->f_set)
                        text << "  F edge: " << e.first << " " << e.second << "\n";
                    text << "  removed: " << ck.witness->removed_edge.first << " "
                         << ck.witness->removed_edge.second << "\n";
                }
                if (timings) text << "elapsed_ms: " << ck.elapsed_ms << "\n";
                emit(out_path, text.str());
            }
            if (ck.witness &&
                (ck.witness->cwd_before != 3 || ck.witness->cwd_after < 4 || ck.witness->cwd_after > 6))
                return 1;
        } else if (*dot) {
            emit(out_path, gwl::to_dot(gwl::parse_graph(slurp(d_graph))));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
