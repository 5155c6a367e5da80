#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tip/model.hpp"
#include "tip/relations.hpp"

namespace tip {

enum class Method { Clique, Chain, Brute };

inline const char* method_name(Method m) {
    switch (m) {
    case Method::Clique: return "clique";
    case Method::Chain: return "chain";
    case Method::Brute: return "brute";
    }
    return "?";
}

struct Solution {
    std::set<std::string> labels;
    std::size_t size = 0;
    Method method = Method::Brute;
};

// True iff every unordered pair in the selection is comparable under the
// instance's relation set. Vacuously true for |labels| <= 1.
inline bool is_feasible(const Instance& inst, const std::set<std::string>& labels) {
    std::vector<const TwoInterval*> sel;
    sel.reserve(labels.size());
    for (const auto& l : labels) sel.push_back(&inst.two_intervals()[inst.index_of(l)]);
    for (std::size_t i = 0; i < sel.size(); ++i)
        for (std::size_t j = i + 1; j < sel.size(); ++j)
            if (!comparable(*sel[i], *sel[j], inst.relations())) return false;
    return true;
}

namespace detail {

// Per-vertex comparability masks; only valid for n <= 32.
inline std::vector<std::uint32_t> comparability_masks(const Instance& inst) {
    const auto& ds = inst.two_intervals();
    std::vector<std::uint32_t> mask(ds.size(), 0);
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (comparable(ds[i], ds[j], inst.relations())) {
                mask[i] |= std::uint32_t{1} << j;
                mask[j] |= std::uint32_t{1} << i;
            }
    return mask;
}

inline std::set<std::string> labels_of_mask(const Instance& inst, std::uint32_t m) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < inst.size(); ++i)
        if (m & (std::uint32_t{1} << i)) out.insert(inst.two_intervals()[i].label());
    return out;
}

}  // namespace detail

inline constexpr std::size_t kBruteForceLimit = 20;

// Independent oracle: full subset enumeration. Among maximum solutions the
// lexicographically smallest label set is returned.
inline Solution max_pattern_bruteforce(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n > kBruteForceLimit)
        throw guard_error("brute force limited to " + std::to_string(kBruteForceLimit) +
                          " 2-intervals, got " + std::to_string(n));
    auto mask = detail::comparability_masks(inst);

    std::uint32_t best = 0;
    int best_count = 0;
    std::set<std::string> best_labels;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        int count = std::popcount(m);
        if (count < best_count) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i)
            if (m & (std::uint32_t{1} << i))
                if ((m & ~mask[i] & ~(std::uint32_t{1} << i)) != 0) ok = false;
        if (!ok) continue;
        if (count > best_count) {
            best = m;
            best_count = count;
            best_labels = detail::labels_of_mask(inst, m);
        } else {
            auto labels = detail::labels_of_mask(inst, m);
            if (labels < best_labels) { best = m; best_labels = std::move(labels); }
        }
    }
    (void)best;
    return {std::move(best_labels), static_cast<std::size_t>(best_count), Method::Brute};
}

namespace detail {

// Branch-and-bound maximum clique with greedy-colouring upper bounds
// (Tomita-style). Deterministic: candidates are kept in ascending vertex
// order and the incumbent is replaced only on strict improvement.
class CliqueSolver {
public:
    CliqueSolver(const ComparabilityGraph& g, std::uint64_t node_budget)
        : n_(g.size()), words_((n_ + 63) / 64), budget_(node_budget),
          adj_(n_, std::vector<std::uint64_t>(words_, 0)) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (g.edge(i, j)) adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }

    std::vector<std::size_t> solve() {
        if (n_ == 0) return {};
        std::vector<std::uint64_t> all(words_, 0);
        for (std::size_t i = 0; i < n_; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
        std::vector<std::size_t> current;
        expand(current, all);
        return best_;
    }

private:
    using Bits = std::vector<std::uint64_t>;

    void expand(std::vector<std::size_t>& current, const Bits& candidates) {
        if (++nodes_ > budget_)
            throw guard_error("clique solver node budget exceeded (" +
                              std::to_string(budget_) + " nodes)");
        std::vector<std::size_t> order;
        std::vector<int> bound;
        colour_sort(candidates, order, bound);

        Bits p = candidates;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[idx]) <= best_.size())
                return;
            std::size_t v = order[idx];
            current.push_back(v);
            Bits next(words_);
            bool any = false;
            for (std::size_t w = 0; w < words_; ++w) {
                next[w] = p[w] & adj_[v][w];
                any |= next[w] != 0;
            }
            if (!any) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }

    // Greedy colouring of the candidate set; returns vertices sorted by
    // colour class (ascending), bound[i] = colour number of order[i].
    void colour_sort(const Bits& candidates, std::vector<std::size_t>& order,
                     std::vector<int>& bound) {
        std::vector<Bits> classes;
        std::vector<std::vector<std::size_t>> members;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = candidates[w];
            while (bits) {
                std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                std::size_t c = 0;
                for (; c < classes.size(); ++c) {
                    bool conflict = false;
                    for (std::size_t ww = 0; ww < words_; ++ww)
                        if (classes[c][ww] & adj_[v][ww]) { conflict = true; break; }
                    if (!conflict) break;
                }
                if (c == classes.size()) {
                    classes.emplace_back(words_, 0);
                    members.emplace_back();
                }
                classes[c][v / 64] |= std::uint64_t{1} << (v % 64);
                members[c].push_back(v);
            }
        }
        for (std::size_t c = 0; c < members.size(); ++c)
            for (std::size_t v : members[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
    }

    std::size_t n_, words_;
    std::uint64_t nodes_ = 0, budget_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> best_;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

// Exact solver via maximum clique on the comparability graph.
inline Solution max_pattern_clique(const Instance& inst,
                                   std::uint64_t node_budget = kDefaultNodeBudget) {
    ComparabilityGraph g(inst);
    detail::CliqueSolver solver(g, node_budget);
    auto clique = solver.solve();
    Solution sol;
    sol.method = Method::Clique;
    for (std::size_t v : clique) sol.labels.insert(g.labels()[v]);
    sol.size = sol.labels.size();
    return sol;
}

// Longest-chain DP for the two transitive single-relation cases,
// R = {preceding} or R = {nested}. O(n^2).
inline Solution max_pattern_chain(const Instance& inst) {
    const RelationSet& r = inst.relations();
    bool prec = r.precede() && !r.nested() && !r.crossing();
    bool nest = r.nested() && !r.precede() && !r.crossing();
    if (!prec && !nest)
        throw guard_error("chain method requires relations exactly {preceding} or {nested}");

    const auto& ds = inst.two_intervals();
    const std::size_t n = ds.size();

    // Chain successor: i -> j when the pair extends a chain with i first.
    // Both orders put the 2-interval with the leftmost left interval first,
    // so sorting by left.lo yields a topological order.
    std::vector<std::size_t> topo(n);
    for (std::size_t i = 0; i < n; ++i) topo[i] = i;
    std::sort(topo.begin(), topo.end(), [&](std::size_t a, std::size_t b) {
        return ds[a].left().lo() < ds[b].left().lo();
    });

    auto chain_edge = [&](std::size_t i, std::size_t j) {
        auto rel = classify(ds[i], ds[j]);
        if (!rel.kind) return false;
        if (prec)
            return *rel.kind == Relation::Preceding && rel.first == ds[i].label();
        return *rel.kind == Relation::Nested && rel.second == ds[i].label();  // i outer
    };

    std::vector<std::size_t> best(n, 1);
    std::vector<std::ptrdiff_t> pred(n, -1);
    for (std::size_t jj = 0; jj < n; ++jj) {
        std::size_t j = topo[jj];
        for (std::size_t ii = 0; ii < jj; ++ii) {
            std::size_t i = topo[ii];
            if (!chain_edge(i, j)) continue;
            bool better = best[i] + 1 > best[j] ||
                          (best[i] + 1 == best[j] && pred[j] >= 0 &&
                           ds[i].label() < ds[static_cast<std::size_t>(pred[j])].label());
            if (better) {
                best[j] = best[i] + 1;
                pred[j] = static_cast<std::ptrdiff_t>(i);
            }
        }
    }

    Solution sol;
    sol.method = Method::Chain;
    if (n == 0) return sol;

    std::size_t end = topo[0];
    for (std::size_t v : topo) {
        if (best[v] > best[end] ||
            (best[v] == best[end] && ds[v].label() < ds[end].label()))
            end = v;
    }
    for (std::ptrdiff_t v = static_cast<std::ptrdiff_t>(end); v >= 0;
         v = pred[static_cast<std::size_t>(v)])
        sol.labels.insert(ds[static_cast<std::size_t>(v)].label());
    sol.size = sol.labels.size();
    return sol;
}

}  // namespace tip
