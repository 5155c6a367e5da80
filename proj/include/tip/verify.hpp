#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tip/model.hpp"
#include "tip/reduction.hpp"
#include "tip/rng.hpp"
#include "tip/solvers.hpp"

namespace tip {

// Brute-force decider for the k-multicoloured clique problem: one vertex per
// colour class, all pairs adjacent. Returns the lexicographically first
// witness, or nullopt. Guarded: k <= 8 and product of class sizes <= 1e6.
inline std::optional<std::vector<VertexId>> mcc_bruteforce(const ColouredGraph& g) {
    const int k = g.k();
    if (k > 8) throw guard_error("mcc brute force limited to k <= 8");

    std::vector<std::vector<VertexId>> classes;
    std::uint64_t product = 1;
    for (int c = 1; c <= k; ++c) {
        classes.push_back(vertices_of_colour(g, c));
        if (classes.back().empty()) return std::nullopt;
        product *= classes.back().size();
        if (product > 1'000'000)
            throw guard_error("mcc brute force: candidate space exceeds 1e6");
    }

    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        bool ok = true;
        for (int a = 0; ok && a < k; ++a)
            for (int b = a + 1; ok && b < k; ++b)
                if (!g.adjacent(classes[a][idx[a]], classes[b][idx[b]])) ok = false;
        if (ok) {
            std::vector<VertexId> clique;
            for (int a = 0; a < k; ++a) clique.push_back(classes[a][idx[a]]);
            return clique;
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == classes[pos].size()) idx[pos--] = 0;
        if (pos < 0) return std::nullopt;
    }
}

struct EquivalenceReport {
    std::string graph_summary;
    bool clique_exists = false;
    std::vector<VertexId> clique;  // witness when present
    std::size_t max_size = 0;
    std::size_t k_prime = 0;
    bool agrees = false;
    Solution solution;
};

// Tests Lemma-3-style equivalence on one graph: multicoloured clique exists
// iff the reduced instance admits a feasible solution of size >= k'.
// Cross-checks the exact solver against brute force when small enough.
inline EquivalenceReport check_reduction_equivalence(const ColouredGraph& g, Variant variant) {
    EquivalenceReport rep;
    {
        std::ostringstream os;
        os << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges() << " k=" << g.k();
        rep.graph_summary = os.str();
    }
    auto clique = mcc_bruteforce(g);
    rep.clique_exists = clique.has_value();
    if (clique) rep.clique = *clique;

    ReductionInstance red = reduce(g, variant);
    rep.k_prime = red.k_prime;
    rep.solution = max_pattern_clique(red.instance);
    rep.max_size = rep.solution.size;
    if (red.instance.size() <= kBruteForceLimit) {
        auto oracle = max_pattern_bruteforce(red.instance);
        if (oracle.size != rep.max_size)
            throw std::logic_error("clique solver disagrees with brute-force oracle");
    }
    rep.agrees = rep.clique_exists == (rep.max_size >= rep.k_prime);
    return rep;
}

// Lemmas 1-2 made executable: a feasible size-k' solution must take, within
// each vertex- and edge-selection gadget, intervals from a single row.
inline bool check_row_forcing(const ReductionInstance& red, const Solution& sol) {
    if (sol.size != red.k_prime)
        throw validation_error("row forcing check needs a solution of size exactly k'");
    if (!is_feasible(red.instance, sol.labels))
        throw validation_error("row forcing check needs a feasible solution");

    std::map<std::string, int> row_of_gadget;
    for (const auto& label : sol.labels) {
        const RoleRecord& rec = red.provenance.at(label);
        for (const IntervalPlacement* pl : {&rec.left, &rec.right}) {
            auto [it, inserted] = row_of_gadget.emplace(pl->gadget, pl->row);
            if (!inserted && it->second != pl->row) return false;
        }
    }
    return true;
}

// Label set selected by the forward direction of the reduction argument:
// both vertex 2-intervals per clique vertex and all four edge 2-intervals
// per clique edge. Size is exactly k' when `clique` is a multicoloured clique.
inline std::set<std::string> forward_selection(const ColouredGraph& g,
                                               const std::vector<VertexId>& clique) {
    std::set<std::string> labels;
    std::map<int, VertexId> by_colour;
    for (VertexId v : clique) by_colour[g.colour(v)] = v;
    for (const auto& [c, v] : by_colour) {
        labels.insert("v:" + std::to_string(v));
        labels.insert("v':" + std::to_string(v));
    }
    for (int i = 1; i <= g.k(); ++i)
        for (int j = i + 1; j <= g.k(); ++j) {
            VertexId u = by_colour.at(i), v = by_colour.at(j);
            std::string uv = std::to_string(u) + "," + std::to_string(v);
            labels.insert("e:" + uv);
            labels.insert("e':" + uv);
            labels.insert("d:" + uv);
            labels.insert("d:" + std::to_string(v) + "," + std::to_string(u));
        }
    return labels;
}

// Deterministic random coloured graph: colours round-robin by vertex id,
// each bichromatic pair kept with probability p (SplitMix64 draws, one per
// candidate pair in lexicographic order).
inline ColouredGraph random_coloured_graph(int k, int n, double p, std::uint64_t seed) {
    if (k < 1 || n < k || p < 0.0 || p > 1.0)
        throw validation_error("random graph: need k >= 1, n >= k, 0 <= p <= 1");
    std::map<VertexId, int> colour;
    for (int v = 0; v < n; ++v) colour[v] = v % k + 1;
    SplitMix64 rng(seed);
    std::set<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (colour[u] == colour[v]) continue;
            if (rng.next_double() < p) edges.insert({u, v});
        }
    return ColouredGraph(k, std::move(colour), std::move(edges));
}

}  // namespace tip
