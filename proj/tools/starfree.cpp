#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "starfree.hpp"
#include "starfree/sweep_config.hpp"

using namespace starfree;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failure = 1, violated = 2, hypothesis = 3, size_cap = 4 };

// Graph argument: a path to a graph6/edge-list file, or literal graph6 text.
Graph load_graph(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph_text(ss.str());
    }
    return parse_graph6(arg);
}

struct IntParams {
    std::map<std::string, int> values;

    void attach(CLI::App* app, std::initializer_list<const char*> keys) {
        for (const char* k : keys) app->add_option(std::string("--") + k, values[k], std::string("parameter ") + k);
    }

    std::map<std::string, int> given(CLI::App* app) const {
        std::map<std::string, int> out;
        for (const auto& [k, v] : values)
            if (app->count("--" + k)) out[k] = v;
        return out;
    }
};

json vertex_list(const VertexSet& s) { return s.to_vector(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and bound checks for K_{1,r}-free graphs"};
    app.require_subcommand(1);
    int rc = Exit::ok;

    // invariant
    auto* inv = app.add_subcommand("invariant", "compute an exact invariant with its witness");
    std::string inv_kind, inv_graph;
    IntParams inv_params;
    inv->add_option("kind", inv_kind, "alpha, gamma, gamma_k, alpha_k, chi, alphaF_chromatic, ...")->required();
    inv->add_option("graph", inv_graph, "graph6 string or file")->required();
    inv_params.attach(inv, {"k", "q", "r"});
    inv->callback([&] {
        const Graph g = load_graph(inv_graph);
        const auto v = compute(g, parse_invariant_kind(inv_kind), inv_params.given(inv));
        json j{{"kind", to_string(v.kind)}, {"params", v.params}, {"value", v.value}};
        if (!v.coloring.empty())
            j["coloring"] = v.coloring;
        else
            j["witness"] = vertex_list(v.witness);
        std::cout << j.dump() << '\n';
    });

    // check
    auto* chk = app.add_subcommand("check", "evaluate one theorem's bound on a graph");
    std::string chk_id, chk_graph;
    IntParams chk_params;
    chk->add_option("theorem", chk_id, "theorem id, e.g. T4_9")->required();
    chk->add_option("graph", chk_graph, "graph6 string or file")->required();
    chk_params.attach(chk, {"k", "q", "r", "d"});
    chk->callback([&] {
        const Graph g = load_graph(chk_graph);
        const BoundCheck c = check(g, parse_theorem_id(chk_id), chk_params.given(chk));
        std::cout << to_json(c).dump() << '\n';
        if (c.violated()) rc = Exit::violated;
    });

    // family
    auto* fam = app.add_subcommand("family", "build a named extremal graph");
    std::string fam_name, fam_emit = "g6";
    IntParams fam_params;
    fam->add_option("name", fam_name, "family id")->required();
    fam->add_option("--emit", fam_emit, "output format")->check(CLI::IsMember({"g6", "edges"}));
    fam_params.attach(fam, {"r", "k", "t", "m", "n", "p", "mu"});
    fam->callback([&] {
        const Graph g = make_family({parse_family_name(fam_name), fam_params.given(fam)});
        std::cout << (fam_emit == "g6" ? emit_graph6(g) + "\n" : emit_edge_list(g));
    });

    // sweep
    auto* swp = app.add_subcommand("sweep", "run a sweep described by a YAML config");
    std::string swp_config, swp_jsonl, swp_csv;
    int swp_threads = 0;
    swp->add_option("--config", swp_config, "sweep config file")->required()->check(CLI::ExistingFile);
    swp->add_option("--jsonl", swp_jsonl, "write one JSON object per check here ('-' for stdout)");
    swp->add_option("--csv", swp_csv, "write gamma, alpha and largest induced bipartite/outerplanar/planar orders of the family graphs as CSV");
    swp->add_option("--threads", swp_threads, "override the config's thread count");
    swp->callback([&] {
        SweepConfig cfg = load_sweep_config(swp_config);
        if (swp_threads > 0) cfg.threads = swp_threads;
        const SweepReport report = run_sweep(cfg);
        if (swp_jsonl == "-") {
            write_json_lines(report, std::cout);
        } else if (!swp_jsonl.empty()) {
            std::ofstream out(swp_jsonl);
            write_json_lines(report, out);
        }
        if (!swp_csv.empty()) {
            std::vector<std::pair<std::string, Graph>> rows;
            for (const auto& it : report.items)
                if (it.source.rfind("sample", 0) != 0 && !it.graph6.empty())
                    rows.emplace_back(it.source + "(" + detail::params_text(it.params) + ")", parse_graph6(it.graph6));
            std::ofstream out(swp_csv);
            write_induced_table_csv(rows, out, cfg.limits);
        }
        std::cerr << summary_text(report);
        if (!report.ok()) rc = Exit::violated;
    });

    // enumerate-cubic
    auto* enu = app.add_subcommand("enumerate-cubic", "list connected cubic graphs up to isomorphism");
    int enu_n = 0;
    std::string enu_strategy = "edge_backtracking";
    bool enu_claw_free = false;
    enu->add_option("--n", enu_n, "order (even, 4..14)")->required();
    enu->add_option("--strategy", enu_strategy, "generation strategy")
        ->check(CLI::IsMember({"edge_backtracking", "vertex_augmentation"}));
    enu->add_flag("--claw-free", enu_claw_free, "keep only claw-free graphs");
    enu->callback([&] {
        const auto s = enu_strategy == "edge_backtracking" ? CubicStrategy::edge_backtracking
                                                           : CubicStrategy::vertex_augmentation;
        for (const auto& g : enumerate_cubic(enu_n, s))
            if (!enu_claw_free || is_claw_free(g)) std::cout << emit_graph6(g) << '\n';
    });

    // partition
    auto* par = app.add_subcommand("partition", "triangle/diamond partition of a claw-free cubic graph");
    std::string par_graph;
    par->add_option("graph", par_graph, "graph6 string or file")->required();
    par->callback([&] {
        const TDPartition p = td_partition(load_graph(par_graph));
        json units = json::array();
        for (const auto& u : p.units)
            units.push_back({{"kind", u.kind == UnitKind::triangle ? "triangle" : "diamond"},
                             {"vertices", u.vertices}});
        std::cout << json{{"units", units},
                          {"triangles", p.count(UnitKind::triangle)},
                          {"diamonds", p.count(UnitKind::diamond)}}
                         .dump()
                  << '\n';
    });

    // equality-search
    auto* eqs = app.add_subcommand("equality-search", "look for graphs attaining a bound with equality");
    int eqs_r = 3, eqs_budget = 1000;
    std::uint64_t eqs_seed = 1;
    std::string eqs_theorem;
    eqs->add_option("--r", eqs_r, "star size r")->required();
    eqs->add_option("--theorem", eqs_theorem, "theorem id")->required();
    eqs->add_option("--budget", eqs_budget, "number of sampled graphs");
    eqs->add_option("--seed", eqs_seed, "sampling seed");
    eqs->callback([&] {
        for (const auto& g : equality_search(eqs_r, parse_theorem_id(eqs_theorem), eqs_budget, eqs_seed))
            std::cout << emit_graph6(g) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const HypothesisFailed& e) {
        std::cerr << e.what() << '\n';
        return Exit::hypothesis;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "size-limit: " << e.what() << '\n';
        return Exit::size_cap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::failure;
    }
    return rc;
}
