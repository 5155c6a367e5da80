#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tip {

// Invalid value construction and violated preconditions.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Size/budget guards on the exponential-time routines.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed integer interval [lo, hi], lo < hi.
class Interval {
public:
    Interval(int lo, int hi) : lo_(lo), hi_(hi) {
        if (lo >= hi)
            throw validation_error("interval [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "]: requires lo < hi");
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    int lo_, hi_;
};

inline bool intersects(const Interval& a, const Interval& b) {
    return std::max(a.lo(), b.lo()) <= std::min(a.hi(), b.hi());
}

// A labelled pair of disjoint intervals, left strictly before right.
class TwoInterval {
public:
    TwoInterval(Interval left, Interval right, std::string label)
        : left_(left), right_(right), label_(std::move(label)) {
        if (left_.hi() >= right_.lo())
            throw validation_error("2-interval '" + label_ +
                                   "': left interval must end before right begins");
        if (label_.empty())
            throw validation_error("2-interval label must be nonempty");
    }

    const Interval& left() const { return left_; }
    const Interval& right() const { return right_; }
    const std::string& label() const { return label_; }

    bool disjoint_from(const TwoInterval& other) const {
        return !intersects(left_, other.left_) && !intersects(left_, other.right_) &&
               !intersects(right_, other.left_) && !intersects(right_, other.right_);
    }

    friend bool operator==(const TwoInterval&, const TwoInterval&) = default;

private:
    Interval left_, right_;
    std::string label_;
};

enum class Relation { Preceding, Nested, Crossing };

inline const char* relation_name(Relation r) {
    switch (r) {
    case Relation::Preceding: return "preceding";
    case Relation::Nested: return "nested";
    case Relation::Crossing: return "crossing";
    }
    return "?";
}

// Nonempty subset of {preceding, nested, crossing}.
class RelationSet {
public:
    RelationSet(bool precede, bool nested, bool crossing)
        : precede_(precede), nested_(nested), crossing_(crossing) {
        if (!precede && !nested && !crossing)
            throw validation_error("relation set must be nonempty");
    }

    bool precede() const { return precede_; }
    bool nested() const { return nested_; }
    bool crossing() const { return crossing_; }

    bool contains(Relation r) const {
        switch (r) {
        case Relation::Preceding: return precede_;
        case Relation::Nested: return nested_;
        case Relation::Crossing: return crossing_;
        }
        return false;
    }

    bool subset_of(const RelationSet& other) const {
        return (!precede_ || other.precede_) && (!nested_ || other.nested_) &&
               (!crossing_ || other.crossing_);
    }

    friend bool operator==(const RelationSet&, const RelationSet&) = default;

private:
    bool precede_, nested_, crossing_;
};

// An ordered set of distinctly-labelled 2-intervals plus the relation set.
class Instance {
public:
    Instance(std::vector<TwoInterval> two_intervals, RelationSet relations)
        : two_intervals_(std::move(two_intervals)), relations_(relations) {
        std::set<std::string> seen;
        for (const auto& d : two_intervals_)
            if (!seen.insert(d.label()).second)
                throw validation_error("duplicate 2-interval label '" + d.label() + "'");
    }

    const std::vector<TwoInterval>& two_intervals() const { return two_intervals_; }
    const RelationSet& relations() const { return relations_; }
    std::size_t size() const { return two_intervals_.size(); }

    // Index of a label, or throws.
    std::size_t index_of(const std::string& label) const {
        for (std::size_t i = 0; i < two_intervals_.size(); ++i)
            if (two_intervals_[i].label() == label) return i;
        throw validation_error("unknown label '" + label + "'");
    }

private:
    std::vector<TwoInterval> two_intervals_;
    RelationSet relations_;
};

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized u < v

// Vertex-coloured graph (G, c, k). Monochromatic edges are dropped on
// construction; the count is kept for diagnostics.
class ColouredGraph {
public:
    ColouredGraph(int k, std::map<VertexId, int> colour_of, std::set<Edge> edges)
        : k_(k), colour_of_(std::move(colour_of)) {
        if (k < 1) throw validation_error("k must be positive");
        for (const auto& [v, c] : colour_of_)
            if (c < 1 || c > k_)
                throw validation_error("vertex " + std::to_string(v) +
                                       " has colour outside 1..k");
        for (auto [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u == v) throw validation_error("self-loop at vertex " + std::to_string(u));
            auto cu = colour_of_.find(u), cv = colour_of_.find(v);
            if (cu == colour_of_.end() || cv == colour_of_.end())
                throw validation_error("edge endpoint is not a known vertex");
            if (cu->second == cv->second)
                ++dropped_monochromatic_;
            else
                edges_.insert({u, v});
        }
    }

    int k() const { return k_; }
    const std::map<VertexId, int>& colour_of() const { return colour_of_; }
    const std::set<Edge>& edges() const { return edges_; }
    int dropped_monochromatic() const { return dropped_monochromatic_; }

    int colour(VertexId v) const {
        auto it = colour_of_.find(v);
        if (it == colour_of_.end())
            throw validation_error("unknown vertex " + std::to_string(v));
        return it->second;
    }

    bool adjacent(VertexId u, VertexId v) const {
        if (u > v) std::swap(u, v);
        return edges_.count({u, v}) != 0;
    }

    std::size_t num_vertices() const { return colour_of_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

private:
    int k_;
    std::map<VertexId, int> colour_of_;
    std::set<Edge> edges_;
    int dropped_monochromatic_ = 0;
};

// Vertices of one colour class, ascending id.
inline std::vector<VertexId> vertices_of_colour(const ColouredGraph& g, int c) {
    if (c < 1 || c > g.k()) throw validation_error("colour out of range");
    std::vector<VertexId> out;
    for (const auto& [v, col] : g.colour_of())
        if (col == c) out.push_back(v);
    return out;  // map iteration is already ascending by id
}

// Edges between colour classes i < j, each oriented colour-i endpoint first,
// sorted by (min id, max id).
inline std::vector<Edge> edges_between_colours(const ColouredGraph& g, int i, int j) {
    if (i < 1 || j > g.k() || i >= j)
        throw validation_error("requires 1 <= i < j <= k");
    std::vector<Edge> out;
    for (const auto& [u, v] : g.edges()) {
        int cu = g.colour(u), cv = g.colour(v);
        if (cu == i && cv == j)
            out.push_back({u, v});
        else if (cu == j && cv == i)
            out.push_back({v, u});
    }
    // g.edges() is sorted by (min,max) already; orientation does not disturb it
    return out;
}

}  // namespace tip
