#include <catch2/catch_amalgamated.hpp>

#include "tip/reduction.hpp"
#include "tip/solvers.hpp"
#include "tip/verify.hpp"

using namespace tip;

TEST_CASE("ascending gadget coordinates") {
    LayoutParams p{4};
    auto g = ascending_gadget(1, 3, p);
    CHECK(g.at(1, 1) == Interval(2, 6));
    CHECK(g.at(1, 2) == Interval(7, 11));
    CHECK(g.at(1, 3) == Interval(12, 16));

    auto h = ascending_gadget(2, 2, p);
    CHECK(intersects(h.at(2, 1), h.at(1, 2)));
    CHECK_FALSE(intersects(h.at(1, 1), h.at(1, 2)));

    CHECK(ascending_gadget(0, 4, p).empty());
    CHECK_THROWS_AS(ascending_gadget(1, 0, p), validation_error);
    CHECK_THROWS_AS(ascending_gadget(4, 2, LayoutParams{4}), validation_error);
}

TEST_CASE("descending gadget coordinates") {
    LayoutParams p{4};
    auto g = descending_gadget(2, p);
    CHECK(g.at(1, 1) == Interval(2, 6));
    CHECK(g.at(2, 2) == Interval(5, 9));
    CHECK(intersects(g.at(1, 1), g.at(2, 2)));
    CHECK_FALSE(intersects(g.at(1, 1), g.at(1, 2)));

    auto one = descending_gadget(1, p);
    CHECK(one.at(1, 1) == Interval(0, 4));
    CHECK(one.at(1, 2) == Interval(5, 9));

    for (int rows = 1; rows <= 6; ++rows) {
        LayoutParams q{2 * std::max(2, rows)};
        auto grid = descending_gadget(rows, q);
        for (int r = 1; r <= rows; ++r) CHECK_FALSE(intersects(grid.at(r, 1), grid.at(r, 2)));
    }
}

TEST_CASE("staircase intersection patterns, exhaustive up to 6 rows") {
    for (int rows = 0; rows <= 6; ++rows) {
        LayoutParams p{2 * std::max(2, rows)};
        for (int cols = 1; cols <= 5; ++cols) {
            auto g = ascending_gadget(rows, cols, p);
            for (int r = 1; r <= rows; ++r)
                for (int c = 1; c <= cols; ++c)
                    for (int r2 = 1; r2 <= rows; ++r2)
                        for (int c2 = 1; c2 <= cols; ++c2) {
                            bool got = intersects(g.at(r, c), g.at(r2, c2));
                            bool want;
                            if (c == c2) want = true;
                            else if (std::abs(c - c2) > 1) want = false;
                            else if (c2 == c + 1) want = r2 <= r - 1;
                            else want = r <= r2 - 1;
                            CHECK(got == want);
                        }
        }
        auto d = descending_gadget(rows, p);
        for (int r = 1; r <= rows; ++r)
            for (int r2 = 1; r2 <= rows; ++r2) {
                CHECK(intersects(d.at(r, 1), d.at(r2, 1)));
                CHECK(intersects(d.at(r, 2), d.at(r2, 2)));
                CHECK(intersects(d.at(r, 1), d.at(r2, 2)) == (r2 >= r + 1));
            }
    }
}

TEST_CASE("expected_size") {
    CHECK_THROWS_AS(expected_size(0), validation_error);
    CHECK(expected_size(1) == 2);
    CHECK(expected_size(2) == 8);
    CHECK(expected_size(3) == 18);
}

static ColouredGraph k3_rainbow() {
    return ColouredGraph(3, {{1, 1}, {2, 2}, {3, 3}}, {{1, 2}, {1, 3}, {2, 3}});
}

static ColouredGraph single_edge() {
    return ColouredGraph(2, {{0, 1}, {1, 2}}, {{0, 1}});
}

TEST_CASE("reduce counting") {
    for (auto variant : {Variant::NestedCrossing, Variant::PrecedeCrossing}) {
        auto red = reduce(single_edge(), variant);
        CHECK(red.instance.size() == 8);
        CHECK(red.k_prime == 8);

        auto red3 = reduce(k3_rainbow(), variant);
        CHECK(red3.instance.size() == 18);
        CHECK(red3.k_prime == 18);
    }
}

TEST_CASE("reduce with an empty colour class") {
    ColouredGraph g(3, {{0, 1}, {1, 2}}, {{0, 1}});  // no colour-3 vertex
    auto red = reduce(g, Variant::NestedCrossing);
    CHECK(red.instance.size() == 2 * 2 + 4 * 1);
    CHECK(red.k_prime == 18);
    // empty gadgets claim no region
    for (const auto& s : red.region_spans) {
        CHECK(s.component.find("(3)") == std::string::npos);
        CHECK(s.lo < s.hi);
    }
}

TEST_CASE("region spans are disjoint and ordered") {
    for (auto variant : {Variant::NestedCrossing, Variant::PrecedeCrossing}) {
        auto red = reduce(k3_rainbow(), variant);
        REQUIRE(red.region_spans.size() == 12);  // 2k + 2*C(k,2) components
        for (std::size_t i = 1; i < red.region_spans.size(); ++i)
            CHECK(red.region_spans[i - 1].hi < red.region_spans[i].lo);
        // block order per variant
        auto comp = [&](std::size_t i) { return red.region_spans[i].component.substr(0, 2); };
        if (variant == Variant::NestedCrossing) {
            CHECK(comp(0) == "C2");
            CHECK(comp(3) == "I1");
            CHECK(comp(6) == "C1");
            CHECK(comp(9) == "I2");
        } else {
            CHECK(comp(0) == "C2");
            CHECK(comp(3) == "C1");
            CHECK(comp(6) == "I1");
            CHECK(comp(9) == "I2");
        }
    }
}

TEST_CASE("provenance covers every label") {
    auto red = reduce(k3_rainbow(), Variant::NestedCrossing);
    CHECK(red.provenance.size() == red.instance.size());
    const auto& iv = red.provenance.at("d:1,2");
    CHECK(iv.role == Role::EdgeDirected);
    CHECK(iv.u == 1);
    CHECK(iv.v == 2);
    // directed 2-interval touches both the edge gadget and a vertex gadget
    std::set<std::string> gadgets{iv.left.gadget, iv.right.gadget};
    CHECK(gadgets == std::set<std::string>{"E1,2", "V1"});
}

TEST_CASE("directed 2-intervals for edges sharing a vertex share an interval") {
    // vertices 1,2 colour 1/2 plus vertex 3 colour 2; edges (1,2), (1,3)
    ColouredGraph g(2, {{1, 1}, {2, 2}, {3, 2}}, {{1, 2}, {1, 3}});
    auto red = reduce(g, Variant::NestedCrossing);
    const auto& d12 = red.instance.two_intervals()[red.instance.index_of("d:1,2")];
    const auto& d13 = red.instance.two_intervals()[red.instance.index_of("d:1,3")];
    // both use vertex 1's colour-2 interval in I1(1)
    bool share = d12.left() == d13.left() || d12.right() == d13.right() ||
                 d12.left() == d13.right() || d12.right() == d13.left();
    CHECK(share);
    CHECK_FALSE(d12.disjoint_from(d13));
}

TEST_CASE("orientation witnesses") {
    auto red_nc = reduce(k3_rainbow(), Variant::NestedCrossing);
    const auto& inst = red_nc.instance;
    auto at = [&](const std::string& l) -> const TwoInterval& {
        return inst.two_intervals()[inst.index_of(l)];
    };
    // directed 2-interval nested inside its source vertex 2-interval
    auto rel = classify(at("d:1,2"), at("v:1"));
    REQUIRE(rel.kind == Relation::Nested);
    CHECK(rel.first == "d:1,2");
    // distinct vertex 2-intervals cross
    rel = classify(at("v:1"), at("v:2"));
    CHECK(rel.kind == Relation::Crossing);

    auto red_pc = reduce(k3_rainbow(), Variant::PrecedeCrossing);
    const auto& pinst = red_pc.instance;
    auto pat = [&](const std::string& l) -> const TwoInterval& {
        return pinst.two_intervals()[pinst.index_of(l)];
    };
    rel = classify(pat("e:1,2"), pat("v:3"));
    CHECK(rel.kind == Relation::Preceding);
    rel = classify(pat("d:1,2"), pat("v:1"));
    CHECK(rel.kind == Relation::Crossing);
}

TEST_CASE("forward construction is feasible (nested-crossing)") {
    auto g = k3_rainbow();
    auto red = reduce(g, Variant::NestedCrossing);
    auto labels = forward_selection(g, {1, 2, 3});
    CHECK(labels.size() == red.k_prime);
    CHECK(is_feasible(red.instance, labels));
}

TEST_CASE("nested-crossing K3 instance solves to k'") {
    auto red = reduce(k3_rainbow(), Variant::NestedCrossing);
    auto sol = max_pattern_clique(red.instance);
    CHECK(sol.size == 18);
    // cross-check with the independent oracle (|F| = 18 <= 20)
    CHECK(max_pattern_bruteforce(red.instance).size == 18);
}

TEST_CASE("comparability totality, nested-crossing") {
    for (const auto& g : {k3_rainbow(), single_edge()}) {
        auto red = reduce(g, Variant::NestedCrossing);
        const auto& ds = red.instance.two_intervals();
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i + 1; j < ds.size(); ++j)
                if (ds[i].disjoint_from(ds[j]))
                    CHECK(comparable(ds[i], ds[j], red.instance.relations()));
    }
}
