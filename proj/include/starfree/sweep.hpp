#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph6.hpp"
#include "sampling.hpp"

namespace starfree {

/// A theorem parameter: a literal, or "$name" taken from the family params.
using ParamValue = std::variant<int, std::string>;

struct CheckSpec {
    TheoremId theorem = TheoremId::O3_1;
    std::map<std::string, ParamValue> params;
    std::optional<bool> expect_equality;  // asserted on every graph of the block
};

struct FamilySweep {
    FamilyName family = FamilyName::Cycle;
    std::map<std::string, std::vector<int>> grid;  // cartesian product, keys in name order
    std::vector<CheckSpec> checks;
    int max_order = 0;          // 0: no cap; larger graphs are skipped
    bool skip_invalid = false;  // skip grid points the generator rejects
};

enum class SampleMode { rejection, line_graph, alternate };

struct SampleSweep {
    int r = 3;
    int n = 24;
    int count = 100;
    std::uint64_t seed = 1;
    SampleMode mode = SampleMode::rejection;
    std::vector<CheckSpec> checks;  // empty: every theorem, applicable ones only
};

struct SweepConfig {
    std::string name = "sweep";
    int threads = 1;
    SolverLimits limits;
    std::vector<FamilySweep> families;
    std::vector<SampleSweep> samples;
};

struct SweepItem {
    std::string source;
    std::map<std::string, int> params;
    int n = 0, m = 0;
    std::string graph6;
    std::vector<BoundCheck> checks;
    std::vector<std::string> skipped;   // "theorem: reason"
    std::vector<std::string> failures;  // violated checks and unmet expectations
    std::string error;                  // generator or solver error
};

struct SweepSummary {
    int graphs = 0, checks = 0, held = 0, equalities = 0, violations = 0, expectation_failures = 0, skipped = 0,
        errors = 0;
    double seconds = 0;
};

struct SweepReport {
    std::string name;
    std::vector<SweepItem> items;
    SweepSummary summary;

    bool ok() const { return summary.violations == 0 && summary.expectation_failures == 0 && summary.errors == 0; }
};

/// Default parameter grid used when a sample sweep lists no checks.
inline std::vector<CheckSpec> all_theorem_checks() {
    std::vector<CheckSpec> out;
    auto add = [&](TheoremId id, std::map<std::string, ParamValue> p = {}) { out.push_back({id, std::move(p), {}}); };
    for (int k = 1; k <= 3; ++k) add(TheoremId::T2_1, {{"k", k}});
    for (int q = 3; q <= 4; ++q) {
        add(TheoremId::T2_2, {{"q", q}});
        add(TheoremId::T2_3_kq_reduction, {{"q", q}});
    }
    for (int k = 0; k <= 2; ++k) add(TheoremId::T2_4, {{"k", k}});
    for (TheoremId id : {TheoremId::O3_1, TheoremId::O3_2, TheoremId::T3_3, TheoremId::C4_1, TheoremId::T4_2,
                         TheoremId::P4_3, TheoremId::O4_5, TheoremId::T4_6, TheoremId::T4_7_8, TheoremId::T4_9,
                         TheoremId::T4_10, TheoremId::P4_11, TheoremId::P4_12, TheoremId::P4_13})
        add(id);
    for (int k = 1; k <= 3; ++k) add(TheoremId::T5_1, {{"k", k}});
    add(TheoremId::R5_remark, {{"k", 4}});
    return out;
}

namespace detail {

inline std::string params_text(const std::map<std::string, int>& p) {
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
    return s;
}

inline std::map<std::string, int> resolve(const std::map<std::string, ParamValue>& spec,
                                          const std::map<std::string, int>& family) {
    std::map<std::string, int> out;
    for (const auto& [k, v] : spec) {
        if (std::holds_alternative<int>(v)) {
            out[k] = std::get<int>(v);
            continue;
        }
        const std::string& ref = std::get<std::string>(v);
        const std::string key = !ref.empty() && ref[0] == '$' ? ref.substr(1) : ref;
        auto it = family.find(key);
        if (it == family.end()) throw InvalidArgument("parameter reference '" + ref + "' is not a family parameter");
        out[k] = it->second;
    }
    return out;
}

/// Runs the checks on one graph; with `only_applicable`, hypothesis
/// failures and out-of-table lookups are recorded as skips.
inline void run_checks(const Graph& g, const std::vector<CheckSpec>& specs, const std::map<std::string, int>& family,
                       bool only_applicable, const SolverLimits& limits, SweepItem& item) {
    Evaluator ev(g, limits);
    for (const auto& spec : specs) {
        const std::string tag = to_string(spec.theorem);
        try {
            BoundCheck c = check(ev, spec.theorem, resolve(spec.params, family));
            if (c.violated())
                item.failures.push_back(tag + " violated: lhs=" + to_string(c.lhs) + " rhs=" + to_string(c.rhs));
            if (spec.expect_equality && c.equality != *spec.expect_equality)
                item.failures.push_back(tag + " expected equality=" + (*spec.expect_equality ? "true" : "false") +
                                        " got lhs=" + to_string(c.lhs) + " rhs=" + to_string(c.rhs));
            item.checks.push_back(std::move(c));
        } catch (const HypothesisFailed& e) {
            if (!only_applicable) throw;
            item.skipped.push_back(tag + ": " + e.predicate());
        } catch (const OutOfTable& e) {
            if (!only_applicable) throw;
            item.skipped.push_back(tag + ": " + e.what());
        }
    }
}

inline void cartesian(const std::map<std::string, std::vector<int>>& grid,
                      const std::function<void(const std::map<std::string, int>&)>& f) {
    std::vector<std::pair<std::string, std::vector<int>>> axes(grid.begin(), grid.end());
    std::map<std::string, int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == axes.size()) {
            f(cur);
            return;
        }
        for (int v : axes[i].second) {
            cur[axes[i].first] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

inline void tally(SweepReport& report) {
    auto& s = report.summary;
    s = SweepSummary{0, 0, 0, 0, 0, 0, 0, 0, s.seconds};
    for (const auto& it : report.items) {
        ++s.graphs;
        if (!it.error.empty()) ++s.errors;
        s.skipped += static_cast<int>(it.skipped.size());
        for (const auto& c : it.checks) {
            ++s.checks;
            s.held += c.holds;
            s.equalities += c.equality;
            s.violations += c.violated();
        }
        for (const auto& f : it.failures)
            if (f.find("expected equality") != std::string::npos) ++s.expectation_failures;
    }
}

}  // namespace detail

/// Runs every job of the config. Items are produced in the order they are
/// listed (family grids in parameter order, then samples by index), however
/// many threads do the work.
inline SweepReport run_sweep(const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::function<SweepItem()>> jobs;

    for (const auto& fs : config.families) {
        detail::cartesian(fs.grid, [&](const std::map<std::string, int>& params) {
            jobs.push_back([fs, params, limits = config.limits]() {
                SweepItem item;
                item.source = to_string(fs.family);
                item.params = params;
                std::optional<Graph> g;
                try {
                    g = make_family({fs.family, params});
                } catch (const InvalidArgument& e) {
                    if (fs.skip_invalid) {
                        item.skipped.push_back(std::string("generator: ") + e.what());
                        return item;
                    }
                    item.error = e.what();
                    return item;
                }
                item.n = g->order();
                item.m = g->size();
                if (g->order() > 0) item.graph6 = emit_graph6(*g);
                if (fs.max_order > 0 && g->order() > fs.max_order) {
                    item.skipped.push_back("order " + std::to_string(g->order()) + " above max_order");
                    return item;
                }
                try {
                    detail::run_checks(*g, fs.checks, params, false, limits, item);
                } catch (const Error& e) {
                    item.error = e.what();
                }
                return item;
            });
        });
    }

    for (const auto& ss : config.samples) {
        const auto specs = ss.checks.empty() ? all_theorem_checks() : ss.checks;
        for (int i = 0; i < ss.count; ++i) {
            jobs.push_back([ss, specs, i, limits = config.limits]() {
                SweepItem item;
                const std::uint64_t seed = ss.seed + static_cast<std::uint64_t>(i);
                SampleStrategy strategy = SampleStrategy::rejection;
                if (ss.mode == SampleMode::line_graph || (ss.mode == SampleMode::alternate && ss.r == 3 && i % 2 == 1))
                    strategy = SampleStrategy::line_graph;
                item.source = "sample";
                item.params = {{"r", ss.r}, {"n", ss.n}, {"seed", static_cast<int>(seed)}, {"index", i}};
                try {
                    Graph g = sample_k1r_free(ss.r, ss.n, seed, strategy);
                    item.source += ":" + to_string(strategy);
                    item.n = g.order();
                    item.m = g.size();
                    item.graph6 = emit_graph6(g);
                    std::vector<CheckSpec> with_r = specs;
                    for (auto& c : with_r)
                        if (!c.params.count("r")) c.params["r"] = ss.r;
                    detail::run_checks(g, with_r, {}, true, limits, item);
                } catch (const Error& e) {
                    item.error = e.what();
                }
                return item;
            });
        }
    }

    SweepReport report;
    report.name = config.name;
    report.items.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) report.items[i] = jobs[i]();
    };
    const int threads = std::max(1, config.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    report.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail::tally(report);
    return report;
}

// ---------------------------------------------------------------------------
// Output

inline nlohmann::json to_json(const BoundCheck& c) {
    nlohmann::json j;
    j["theorem"] = to_string(c.theorem);
    j["lhs"] = to_string(c.lhs);
    j["rhs"] = to_string(c.rhs);
    j["holds"] = c.holds;
    j["equality"] = c.equality;
    j["params"] = c.params;
    j["witnesses"] = c.witnesses;
    if (c.characterization) j["characterization"] = *c.characterization;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

/// One JSON object per check, tagged with its graph; graphs with no checks
/// (skipped or failed) get one line describing why.
inline void write_json_lines(const SweepReport& report, std::ostream& out) {
    for (std::size_t i = 0; i < report.items.size(); ++i) {
        const auto& it = report.items[i];
        nlohmann::json base;
        base["index"] = i;
        base["source"] = it.source;
        base["family_params"] = it.params;
        base["n"] = it.n;
        base["m"] = it.m;
        base["graph6"] = it.graph6;
        for (const auto& c : it.checks) {
            nlohmann::json j = base;
            j["check"] = to_json(c);
            out << j.dump() << '\n';
        }
        if (it.checks.empty() || !it.error.empty() || !it.failures.empty()) {
            nlohmann::json j = base;
            if (!it.skipped.empty()) j["skipped"] = it.skipped;
            if (!it.failures.empty()) j["failures"] = it.failures;
            if (!it.error.empty()) j["error"] = it.error;
            out << j.dump() << '\n';
        }
    }
}

inline std::string summary_text(const SweepReport& report) {
    const auto& s = report.summary;
    std::ostringstream o;
    o << report.name << ": " << s.graphs << " graphs, " << s.checks << " checks, " << s.held << " held, "
      << s.equalities << " with equality, " << s.violations << " violated, " << s.expectation_failures
      << " equality expectations unmet, " << s.skipped << " skipped, " << s.errors << " errors ("
      << s.seconds << " s)\n";
    for (std::size_t i = 0; i < report.items.size(); ++i) {
        const auto& it = report.items[i];
        for (const auto& f : it.failures)
            o << "  FAIL [" << i << "] " << it.source << "(" << detail::params_text(it.params) << ") " << f
              << " graph6=" << it.graph6 << '\n';
        if (!it.error.empty())
            o << "  ERROR [" << i << "] " << it.source << "(" << detail::params_text(it.params) << ") " << it.error
              << '\n';
    }
    return o.str();
}

/// One row per graph: gamma, alpha and the three largest induced
/// bipartite / outerplanar / planar orders. Cells over a solver cap are empty.
inline void write_induced_table_csv(const std::vector<std::pair<std::string, Graph>>& rows, std::ostream& out,
                             const SolverLimits& limits = {}) {
    out << "graph,n,m,gamma,alpha,bipartite,outerplanar,planar\n";
    for (const auto& [name, g] : rows) {
        auto cell = [&](InvariantKind kind) -> std::string {
            try {
                return std::to_string(compute(g, kind, {}, limits).value);
            } catch (const SizeLimitExceeded&) {
                return "";
            }
        };
        out << '"' << name << "\"," << g.order() << ',' << g.size() << ',' << cell(InvariantKind::gamma) << ','
            << cell(InvariantKind::alpha) << ',' << cell(InvariantKind::bipartite) << ','
            << cell(InvariantKind::outerplanar) << ',' << cell(InvariantKind::planar) << '\n';
    }
}

/// Graphs reaching equality in `theorem` with the given r: connected cubic
/// graphs up to 10 vertices, cycles up to 12, then `budget` sampled
/// K_{1,r}-free graphs. Each is returned once (by canonical form).
inline std::vector<Graph> equality_search(int r, TheoremId theorem, int budget, std::uint64_t seed = 1,
                                          const SolverLimits& limits = {}) {
    std::vector<Graph> pool;
    for (int n = 4; n <= 10; n += 2)
        for (auto& g : enumerate_cubic(n)) pool.push_back(g);
    for (int n = 3; n <= 12; ++n) pool.push_back(cycle_graph(n));
    for (int i = 0; i < budget; ++i) {
        try {
            pool.push_back(sample_k1r_free(r, 14, seed + static_cast<std::uint64_t>(i), SampleStrategy::rejection));
        } catch (const BudgetExhausted&) {
        }
    }
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (const auto& g : pool) {
        if (g.order() == 0 || !is_k1r_free(g, r).free) continue;
        try {
            BoundCheck c = check(g, theorem, {{"r", r}}, limits);
            if (c.equality && seen.insert(canonical_form(g)).second) out.push_back(g);
        } catch (const HypothesisFailed&) {
        } catch (const OutOfTable&) {
        }
    }
    return out;
}

}  // namespace starfree
