#pragma once

#include <string>

#include <yaml-cpp/yaml.h>

#include "sweep.hpp"

namespace starfree {

namespace detail {

inline CheckSpec parse_check_spec(const YAML::Node& node) {
    CheckSpec c;
    if (node.IsScalar()) {
        c.theorem = parse_theorem_id(node.as<std::string>());
        return c;
    }
    if (!node["theorem"]) throw ParseError("sweep config: a check needs 'theorem'");
    c.theorem = parse_theorem_id(node["theorem"].as<std::string>());
    if (const auto params = node["params"]) {
        for (const auto& kv : params) {
            const std::string key = kv.first.as<std::string>();
            const std::string text = kv.second.as<std::string>();
            if (!text.empty() && text[0] == '$')
                c.params[key] = text;
            else
                c.params[key] = kv.second.as<int>();
        }
    }
    if (const auto e = node["expect_equality"]) c.expect_equality = e.as<bool>();
    return c;
}

inline std::vector<CheckSpec> parse_checks(const YAML::Node& node) {
    std::vector<CheckSpec> out;
    if (!node) return out;
    for (const auto& c : node) out.push_back(parse_check_spec(c));
    return out;
}

inline SampleMode parse_sample_mode(const std::string& s) {
    if (s == "rejection") return SampleMode::rejection;
    if (s == "line_graph") return SampleMode::line_graph;
    if (s == "alternate") return SampleMode::alternate;
    throw ParseError("sweep config: unknown sampling mode '" + s + "'");
}

}  // namespace detail

/// Reads a sweep description:
///
///   name: families
///   threads: 2
///   limits: {alphaF: 30, max_induced: 22}
///   families:
///     - family: cycle
///       grid: {n: [6, 12, 18]}
///       checks: [{theorem: P4_3, expect_equality: true}]
///   samples:
///     - {r: 3, n: 24, count: 500, seed: 1, mode: alternate}
inline SweepConfig parse_sweep_config(const YAML::Node& root) {
    SweepConfig cfg;
    try {
        if (root["name"]) cfg.name = root["name"].as<std::string>();
        if (root["threads"]) cfg.threads = root["threads"].as<int>();
        if (const auto lim = root["limits"]) {
            if (lim["alphaF"]) cfg.limits.alphaF = lim["alphaF"].as<int>();
            if (lim["max_induced"]) cfg.limits.max_induced = lim["max_induced"].as<int>();
            if (lim["chi"]) cfg.limits.chi = lim["chi"].as<int>();
            if (lim["planarity"]) cfg.limits.planarity = lim["planarity"].as<int>();
        }
        for (const auto& f : root["families"]) {
            FamilySweep fs;
            if (!f["family"]) throw ParseError("sweep config: a family entry needs 'family'");
            fs.family = parse_family_name(f["family"].as<std::string>());
            if (const auto grid = f["grid"])
                for (const auto& kv : grid) {
                    auto& axis = fs.grid[kv.first.as<std::string>()];
                    if (kv.second.IsSequence())
                        axis = kv.second.as<std::vector<int>>();
                    else
                        axis = {kv.second.as<int>()};
                }
            fs.checks = detail::parse_checks(f["checks"]);
            if (f["max_order"]) fs.max_order = f["max_order"].as<int>();
            if (f["skip_invalid"]) fs.skip_invalid = f["skip_invalid"].as<bool>();
            cfg.families.push_back(std::move(fs));
        }
        for (const auto& s : root["samples"]) {
            SampleSweep ss;
            if (s["r"]) ss.r = s["r"].as<int>();
            if (s["n"]) ss.n = s["n"].as<int>();
            if (s["count"]) ss.count = s["count"].as<int>();
            if (s["seed"]) ss.seed = s["seed"].as<std::uint64_t>();
            if (s["mode"]) ss.mode = detail::parse_sample_mode(s["mode"].as<std::string>());
            ss.checks = detail::parse_checks(s["checks"]);
            cfg.samples.push_back(std::move(ss));
        }
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("sweep config: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("sweep config: ") + e.what());
    }
    return cfg;
}

inline SweepConfig load_sweep_config(const std::string& path) {
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::Exception& e) {
        throw ParseError("cannot read sweep config '" + path + "': " + e.what());
    }
    return parse_sweep_config(root);
}

inline SweepConfig parse_sweep_config_text(const std::string& text) {
    try {
        return parse_sweep_config(YAML::Load(text));
    } catch (const YAML::ParserException& e) {
        throw ParseError(std::string("sweep config: ") + e.what());
    }
}

}  // namespace starfree
