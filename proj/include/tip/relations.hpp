#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tip/model.hpp"

namespace tip {

// Relation between two 2-intervals with orientation. For Preceding and
// Crossing, `first` is the 2-interval whose left interval starts leftmost;
// for Nested the roles are inner/outer.
struct PairRelation {
    std::optional<Relation> kind;  // nullopt = NotDisjoint
    std::string first;             // or inner, for Nested
    std::string second;            // or outer

    bool not_disjoint() const { return !kind.has_value(); }
};

// Classifies a pair of distinctly-labelled 2-intervals. Disjoint pairs admit
// exactly one of the three patterns; the four constituent intervals are read
// off in lo-order (ties impossible among disjoint intervals).
inline PairRelation classify(const TwoInterval& a, const TwoInterval& b) {
    if (a.label() == b.label())
        throw validation_error("classify: identical labels '" + a.label() + "'");
    if (!a.disjoint_from(b)) return {std::nullopt, a.label(), b.label()};

    // Positions of a's intervals among the four, sorted by lo.
    struct Part { int lo; bool from_a; };
    std::array<Part, 4> parts = {{{a.left().lo(), true},
                                  {a.right().lo(), true},
                                  {b.left().lo(), false},
                                  {b.right().lo(), false}}};
    std::sort(parts.begin(), parts.end(),
              [](const Part& x, const Part& y) { return x.lo < y.lo; });

    const bool p0 = parts[0].from_a, p1 = parts[1].from_a;
    const std::string& x = p0 ? a.label() : b.label();
    const std::string& y = p0 ? b.label() : a.label();
    if (p0 == p1) return {Relation::Preceding, x, y};   // AABB
    if (p0 != parts[2].from_a)                          // ABBA
        return {Relation::Nested, p0 ? b.label() : a.label(), p0 ? a.label() : b.label()};
    return {Relation::Crossing, x, y};                  // ABAB
}

inline bool comparable(const TwoInterval& a, const TwoInterval& b, const RelationSet& r) {
    auto rel = classify(a, b);
    return rel.kind && r.contains(*rel.kind);
}

// Graph on the instance's 2-intervals with an edge per comparable pair.
class ComparabilityGraph {
public:
    explicit ComparabilityGraph(const Instance& inst)
        : labels_(), adj_(inst.size(), std::vector<bool>(inst.size(), false)) {
        const auto& ds = inst.two_intervals();
        labels_.reserve(ds.size());
        for (const auto& d : ds) labels_.push_back(d.label());
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i + 1; j < ds.size(); ++j)
                if (comparable(ds[i], ds[j], inst.relations()))
                    adj_[i][j] = adj_[j][i] = true;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    bool edge(std::size_t i, std::size_t j) const { return adj_[i][j]; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> adj_;
};

inline ComparabilityGraph comparability_graph(const Instance& inst) {
    return ComparabilityGraph(inst);
}

}  // namespace tip
