#pragma once

#include <map>
#include <string>
#include <vector>

#include "tip/model.hpp"

namespace tip {

enum class Variant { NestedCrossing, PrecedeCrossing };

inline const char* variant_name(Variant v) {
    return v == Variant::NestedCrossing ? "nested-crossing" : "precede-crossing";
}

inline RelationSet variant_relations(Variant v) {
    return v == Variant::NestedCrossing ? RelationSet(false, true, true)
                                        : RelationSet(true, false, true);
}

// Coordinate scheme for the gadget grids. All intervals share one global
// length S; rows within a column step by 2 and columns are S+1 apart, so the
// staircase intersection thresholds land strictly between consecutive rows.
struct LayoutParams {
    int interval_length;  // S, even, >= 2 * max rows over all gadgets

    static constexpr int row_step = 2;
    static constexpr int col_gap = 1;

    int region_gap() const { return interval_length + 1; }
    int col_base(int c) const { return (c - 1) * (interval_length + 1); }
};

// Rectangular grid of intervals in gadget-local coordinates, 1-based (row, col).
struct IntervalGrid {
    int rows = 0, cols = 0;
    std::vector<Interval> cells;  // row-major

    const Interval& at(int r, int c) const {
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw validation_error("grid cell out of range");
        return cells[static_cast<std::size_t>(r - 1) * cols + (c - 1)];
    }

    bool empty() const { return rows == 0; }

    int max_coordinate() const {
        int m = 0;
        for (const auto& iv : cells) m = std::max(m, iv.hi());
        return m;
    }
};

namespace detail {

inline void check_layout(int rows, const LayoutParams& p) {
    if (p.interval_length < 2 || p.interval_length % 2 != 0)
        throw validation_error("interval length must be even and >= 2");
    if (p.interval_length < 2 * rows && rows > 0)
        throw validation_error("interval length too short for row count");
}

}  // namespace detail

// Ascending staircase: interval (r,c) = [A_c + 2r, A_c + 2r + S] with
// A_c = (c-1)(S+1). Same-column intervals pairwise intersect; (r,c) meets
// (r',c+1) iff r' <= r-1; columns two or more apart never intersect.
inline IntervalGrid ascending_gadget(int rows, int cols, const LayoutParams& p) {
    if (rows < 0 || cols < 1) throw validation_error("ascending gadget: need rows >= 0, cols >= 1");
    detail::check_layout(rows, p);
    IntervalGrid g{rows, cols, {}};
    g.cells.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            int lo = p.col_base(c) + p.row_step * r;
            g.cells.emplace_back(lo, lo + p.interval_length);
        }
    return g;
}

// Descending staircase, two columns: interval (r,c) = [A_c + 2(R-r), ... + S].
// Same-column intervals pairwise intersect; (r,1) meets (r',2) iff r' >= r+1.
inline IntervalGrid descending_gadget(int rows, const LayoutParams& p) {
    if (rows < 0) throw validation_error("descending gadget: need rows >= 0");
    detail::check_layout(rows, p);
    IntervalGrid g{rows, 2, {}};
    g.cells.reserve(static_cast<std::size_t>(rows) * 2);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= 2; ++c) {
            int lo = p.col_base(c) + p.row_step * (rows - r);
            g.cells.emplace_back(lo, lo + p.interval_length);
        }
    return g;
}

// Target solution size k' = 2k + 4*C(k,2).
inline std::size_t expected_size(int k) {
    if (k < 1) throw validation_error("expected_size: k must be positive");
    return static_cast<std::size_t>(2 * k + 2 * k * (k - 1));
}

enum class Role { VertexPrimary, VertexSecondary, EdgeUndirected, EdgeUndirectedPrime, EdgeDirected };

inline const char* role_name(Role r) {
    switch (r) {
    case Role::VertexPrimary: return "vertex";
    case Role::VertexSecondary: return "vertex'";
    case Role::EdgeUndirected: return "edge";
    case Role::EdgeUndirectedPrime: return "edge'";
    case Role::EdgeDirected: return "directed";
    }
    return "?";
}

// Where one constituent interval of an emitted 2-interval lives.
struct IntervalPlacement {
    std::string component;  // "I1(2)", "C2(1,3)", ...
    std::string gadget;     // selection gadget: "V2" or "E1,3"
    int row = 0;
    int col = 0;
};

struct RoleRecord {
    Role role;
    VertexId u = -1, v = -1;  // vertex roles use u only
    IntervalPlacement left, right;
};

struct RegionSpan {
    std::string component;
    int lo = 0, hi = 0;
};

struct ReductionInstance {
    Instance instance;
    std::size_t k_prime;
    Variant variant;
    std::map<std::string, RoleRecord> provenance;
    std::vector<RegionSpan> region_spans;
};

namespace detail {

// Column of colour j among the middle columns of I1(c): columns 2..k map to
// the colours {1..k} \ {c} in ascending order.
inline int colour_column(int c, int j) {
    return 1 + (j < c ? j : j - 1);
}

struct PlacedComponent {
    std::string id;
    std::string gadget;
    IntervalGrid grid;
    int base = 0;
};

}  // namespace detail

// Compiles a coloured graph into a 2-interval instance realizing the
// vertex/edge selection gadgets, placed on disjoint regions per the variant:
// NestedCrossing: all C2, all I1, all C1, all I2;
// PrecedeCrossing: all C2, all C1, all I1, all I2.
inline ReductionInstance reduce(const ColouredGraph& g, Variant variant) {
    const int k = g.k();

    std::vector<std::vector<VertexId>> classes;  // [c-1]
    for (int c = 1; c <= k; ++c) classes.push_back(vertices_of_colour(g, c));

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<Edge>> pair_edges;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            pairs.push_back({i, j});
            pair_edges.push_back(edges_between_colours(g, i, j));
        }

    int max_rows = 2;
    for (const auto& cl : classes) max_rows = std::max(max_rows, static_cast<int>(cl.size()));
    for (const auto& es : pair_edges) max_rows = std::max(max_rows, static_cast<int>(es.size()));
    LayoutParams layout{2 * max_rows};

    std::map<std::string, detail::PlacedComponent> components;
    std::vector<RegionSpan> spans;
    int next_base = 0;

    auto place = [&](const std::string& id, const std::string& gadget, IntervalGrid grid) {
        detail::PlacedComponent pc{id, gadget, std::move(grid), next_base};
        if (!pc.grid.empty()) {
            int hi = pc.base + pc.grid.max_coordinate();
            spans.push_back({id, pc.base, hi});
            next_base = hi + layout.region_gap();
        }
        components.emplace(id, std::move(pc));
    };

    auto pair_id = [](const char* name, int i, int j) {
        return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    auto colour_id = [](const char* name, int c) {
        return std::string(name) + "(" + std::to_string(c) + ")";
    };
    auto vertex_gadget_key = [](int c) { return "V" + std::to_string(c); };
    auto edge_gadget_key = [](int i, int j) {
        return "E" + std::to_string(i) + "," + std::to_string(j);
    };

    auto place_c2 = [&] {
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            place(pair_id("C2", pairs[pi].first, pairs[pi].second),
                  edge_gadget_key(pairs[pi].first, pairs[pi].second),
                  descending_gadget(static_cast<int>(pair_edges[pi].size()), layout));
    };
    auto place_c1 = [&] {
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            place(pair_id("C1", pairs[pi].first, pairs[pi].second),
                  edge_gadget_key(pairs[pi].first, pairs[pi].second),
                  ascending_gadget(static_cast<int>(pair_edges[pi].size()), 4, layout));
    };
    auto place_i1 = [&] {
        for (int c = 1; c <= k; ++c)
            place(colour_id("I1", c), vertex_gadget_key(c),
                  ascending_gadget(static_cast<int>(classes[c - 1].size()), k + 1, layout));
    };
    auto place_i2 = [&] {
        for (int c = 1; c <= k; ++c)
            place(colour_id("I2", c), vertex_gadget_key(c),
                  descending_gadget(static_cast<int>(classes[c - 1].size()), layout));
    };

    if (variant == Variant::NestedCrossing) {
        place_c2();
        place_i1();
        place_c1();
        place_i2();
    } else {
        place_c2();
        place_c1();
        place_i1();
        place_i2();
    }

    auto cell = [&](const std::string& comp, int r, int c) {
        const auto& pc = components.at(comp);
        const auto& iv = pc.grid.at(r, c);
        return Interval(pc.base + iv.lo(), pc.base + iv.hi());
    };
    auto placement = [&](const std::string& comp, int r, int c) {
        return IntervalPlacement{comp, components.at(comp).gadget, r, c};
    };

    std::vector<TwoInterval> emitted;
    std::map<std::string, RoleRecord> provenance;

    // The two endpoints arrive in arbitrary order; the leftmost interval
    // becomes the 2-interval's left component.
    auto emit = [&](const std::string& label, Role role, VertexId u, VertexId v,
                    Interval a, IntervalPlacement pa, Interval b, IntervalPlacement pb) {
        if (b.lo() < a.lo()) {
            std::swap(a, b);
            std::swap(pa, pb);
        }
        emitted.emplace_back(a, b, label);
        provenance.emplace(label, RoleRecord{role, u, v, std::move(pa), std::move(pb)});
    };

    for (int c = 1; c <= k; ++c) {
        const auto& cl = classes[c - 1];
        std::string i1 = colour_id("I1", c), i2 = colour_id("I2", c);
        for (std::size_t idx = 0; idx < cl.size(); ++idx) {
            int row = static_cast<int>(idx) + 1;
            VertexId v = cl[idx];
            emit("v:" + std::to_string(v), Role::VertexPrimary, v, -1,
                 cell(i1, row, 1), placement(i1, row, 1),
                 cell(i2, row, 1), placement(i2, row, 1));
            emit("v':" + std::to_string(v), Role::VertexSecondary, v, -1,
                 cell(i1, row, k + 1), placement(i1, row, k + 1),
                 cell(i2, row, 2), placement(i2, row, 2));
        }
    }

    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        auto [i, j] = pairs[pi];
        std::string c1 = pair_id("C1", i, j), c2 = pair_id("C2", i, j);
        std::string i1_i = colour_id("I1", i), i1_j = colour_id("I1", j);
        for (std::size_t idx = 0; idx < pair_edges[pi].size(); ++idx) {
            int row = static_cast<int>(idx) + 1;
            auto [u, v] = pair_edges[pi][idx];  // colour(u) = i, colour(v) = j
            std::string uv = std::to_string(u) + "," + std::to_string(v);
            std::string vu = std::to_string(v) + "," + std::to_string(u);

            emit("e:" + uv, Role::EdgeUndirected, u, v,
                 cell(c2, row, 1), placement(c2, row, 1),
                 cell(c1, row, 1), placement(c1, row, 1));
            emit("e':" + uv, Role::EdgeUndirectedPrime, u, v,
                 cell(c2, row, 2), placement(c2, row, 2),
                 cell(c1, row, 4), placement(c1, row, 4));

            // Directed-edge 2-intervals validate incidence: they share the
            // vertex-gadget interval of (row u, colour-j column) with every
            // other edge at u towards colour j.
            const auto& class_i = classes[i - 1];
            const auto& class_j = classes[j - 1];
            int row_u = static_cast<int>(std::lower_bound(class_i.begin(), class_i.end(), u) -
                                         class_i.begin()) + 1;
            int row_v = static_cast<int>(std::lower_bound(class_j.begin(), class_j.end(), v) -
                                         class_j.begin()) + 1;
            emit("d:" + uv, Role::EdgeDirected, u, v,
                 cell(c1, row, 2), placement(c1, row, 2),
                 cell(i1_i, row_u, detail::colour_column(i, j)),
                 placement(i1_i, row_u, detail::colour_column(i, j)));
            emit("d:" + vu, Role::EdgeDirected, v, u,
                 cell(c1, row, 3), placement(c1, row, 3),
                 cell(i1_j, row_v, detail::colour_column(j, i)),
                 placement(i1_j, row_v, detail::colour_column(j, i)));
        }
    }

    return ReductionInstance{Instance(std::move(emitted), variant_relations(variant)),
                             expected_size(k), variant, std::move(provenance),
                             std::move(spans)};
}

}  // namespace tip
