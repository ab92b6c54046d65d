#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graph6.hpp"
#include "predicates.hpp"

namespace starfree {

enum class Provenance { verified_both_sides, witness_verified, trusted_constant };

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::verified_both_sides: return "verified_both_sides";
        case Provenance::witness_verified: return "witness_verified";
        case Provenance::trusted_constant: return "trusted_constant";
    }
    return "?";
}

struct RamseyEntry {
    int value = 0;
    Provenance provenance = Provenance::trusted_constant;
    std::optional<Graph> witness;  // complement K_r-free, itself K_q-free, value-1 vertices
};

/// r(K_r, K_q) for 2 <= r, q <= 5 except (5,5), which is not known.
class RamseyTable {
public:
    RamseyTable() {
        for (int q = 2; q <= 5; ++q) {
            put(2, q, q, Provenance::verified_both_sides, complete_graph(q - 1));
            if (q > 2) put(q, 2, q, Provenance::verified_both_sides, empty_graph(q - 1));
        }
        put(3, 3, 6, Provenance::verified_both_sides, cycle_graph(5));
        put(3, 4, 9, Provenance::witness_verified, circulant_graph(8, {2, 3}));
        put(4, 3, 9, Provenance::witness_verified, circulant_graph(8, {1, 4}));
        put(3, 5, 14, Provenance::witness_verified, circulant_graph(13, {2, 3, 4, 6}));
        put(5, 3, 14, Provenance::witness_verified, circulant_graph(13, {1, 5}));
        put(4, 4, 18, Provenance::witness_verified, circulant_graph(17, {1, 2, 4, 8}));
        put(4, 5, 25, Provenance::trusted_constant, std::nullopt);
        put(5, 4, 25, Provenance::trusted_constant, std::nullopt);
    }

    bool contains(int r, int q) const { return entries_.count({r, q}) > 0; }

    const RamseyEntry& entry(int r, int q) const {
        auto it = entries_.find({r, q});
        if (it == entries_.end())
            throw OutOfTable("r(K_" + std::to_string(r) + ", K_" + std::to_string(q) + ") is not in the table");
        return it->second;
    }

    int value(int r, int q) const { return entry(r, q).value; }

    const std::map<std::pair<int, int>, RamseyEntry>& entries() const { return entries_; }

    /// Replaces witnesses with the graph6 files <dir>/<r>_<q>.g6 that exist.
    void load_witnesses(const std::filesystem::path& dir) {
        for (auto& [key, e] : entries_) {
            const auto file = dir / (std::to_string(key.first) + "_" + std::to_string(key.second) + ".g6");
            if (!std::filesystem::exists(file)) continue;
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            e.witness = parse_graph6(buf.str());
        }
    }

private:
    void put(int r, int q, int value, Provenance p, std::optional<Graph> w) {
        entries_[{r, q}] = RamseyEntry{value, p, std::move(w)};
    }

    std::map<std::pair<int, int>, RamseyEntry> entries_;
};

inline const RamseyTable& ramsey_table() {
    static const RamseyTable table;
    return table;
}

inline int ramsey(int r, int q) { return ramsey_table().value(r, q); }

/// The three witness conditions for r(K_r, K_q): order r(r,q) - 1, the
/// complement has no K_r, the graph has no K_q.
inline bool verify_witness(int r, int q, const Graph& w) {
    const int value = ramsey(r, q);
    if (w.order() != value - 1) return false;
    if (contains_clique(complement(w), r)) return false;
    return !contains_clique(w, q);
}

inline bool verify_witness(int r, int q) {
    const auto& e = ramsey_table().entry(r, q);
    return e.witness && verify_witness(r, q, *e.witness);
}

namespace detail {

/// Colour bit i of `mask` belongs to the i-th pair (a, b), a < b, in
/// lexicographic order; true means some triangle is monochromatic.
inline bool has_mono_triangle(int p, unsigned mask) {
    int idx[8][8] = {};
    int k = 0;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) idx[a][b] = k++;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            for (int c = b + 1; c < p; ++c) {
                const unsigned x = (mask >> idx[a][b]) & 1u, y = (mask >> idx[a][c]) & 1u, z = (mask >> idx[b][c]) & 1u;
                if (x == y && y == z) return true;
            }
    return false;
}

}  // namespace detail

/// A 2-colouring of K_p with no monochromatic triangle, as the red graph.
inline std::optional<Graph> good_coloring(int p) {
    const int pairs = p * (p - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        if (detail::has_mono_triangle(p, mask)) continue;
        std::vector<Edge> red;
        int k = 0;
        for (int a = 0; a < p; ++a)
            for (int b = a + 1; b < p; ++b, ++k)
                if ((mask >> k) & 1u) red.push_back({a, b});
        return Graph(p, red);
    }
    return std::nullopt;
}

/// r(3,3) by exhaustion: the least p for which every colouring of K_p has a
/// monochromatic triangle (K_6 takes all 2^15 colourings).
inline int brute_ramsey_33() {
    for (int p = 1;; ++p)
        if (!good_coloring(p)) return p;
}

}  // namespace starfree
