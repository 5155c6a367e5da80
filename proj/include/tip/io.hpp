#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tip/model.hpp"
#include "tip/reduction.hpp"

namespace tip {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace detail {

inline bool blank_or_comment(const std::string& s) {
    auto pos = s.find_first_not_of(" \t\r");
    return pos == std::string::npos || s[pos] == '#';
}

}  // namespace detail

// Graph file: '#' comments, "k <int>", "v <id> <colour>", "e <u> <v>".
inline ColouredGraph parse_graph(std::istream& in) {
    int k = -1, lineno = 0;
    std::map<VertexId, int> colour;
    std::set<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "k") {
            if (!(ls >> k)) throw parse_error(lineno, "expected 'k <int>'");
        } else if (tag == "v") {
            VertexId v;
            int c;
            if (!(ls >> v >> c)) throw parse_error(lineno, "expected 'v <id> <colour>'");
            if (v < 0) throw parse_error(lineno, "vertex ids must be nonnegative");
            if (!colour.emplace(v, c).second)
                throw parse_error(lineno, "duplicate vertex " + std::to_string(v));
        } else if (tag == "e") {
            VertexId u, v;
            if (!(ls >> u >> v)) throw parse_error(lineno, "expected 'e <u> <v>'");
            if (u > v) std::swap(u, v);
            edges.insert({u, v});
        } else {
            throw parse_error(lineno, "unknown record '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) throw parse_error(lineno, "trailing tokens: '" + rest + "'");
    }
    if (k < 1) throw parse_error(lineno, "missing or invalid 'k' header");
    try {
        return ColouredGraph(k, std::move(colour), std::move(edges));
    } catch (const validation_error& e) {
        throw parse_error(lineno, e.what());
    }
}

inline void emit_graph(std::ostream& out, const ColouredGraph& g) {
    out << "k " << g.k() << "\n";
    for (const auto& [v, c] : g.colour_of()) out << "v " << v << " " << c << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

// Instance file: header "relations <p|n|c>[,...]", then
// "d <label> <x1> <x2> <x3> <x4>" per 2-interval ([x1,x2],[x3,x4]).
inline Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_relations = false;
    bool precede = false, nested = false, crossing = false;
    std::vector<TwoInterval> ds;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "relations") {
            std::string tokens;
            if (!(ls >> tokens)) throw parse_error(lineno, "expected relation tokens");
            std::istringstream ts(tokens);
            std::string tok;
            while (std::getline(ts, tok, ',')) {
                if (tok == "p") precede = true;
                else if (tok == "n") nested = true;
                else if (tok == "c") crossing = true;
                else throw parse_error(lineno, "unknown relation token '" + tok + "'");
            }
            have_relations = true;
        } else if (tag == "d") {
            std::string label;
            int x1, x2, x3, x4;
            if (!(ls >> label >> x1 >> x2 >> x3 >> x4))
                throw parse_error(lineno, "expected 'd <label> <x1> <x2> <x3> <x4>'");
            try {
                ds.emplace_back(Interval(x1, x2), Interval(x3, x4), label);
            } catch (const validation_error& e) {
                throw parse_error(lineno, e.what());
            }
        } else {
            throw parse_error(lineno, "unknown record '" + tag + "'");
        }
    }
    if (!have_relations) throw parse_error(lineno, "missing 'relations' header");
    try {
        return Instance(std::move(ds), RelationSet(precede, nested, crossing));
    } catch (const validation_error& e) {
        throw parse_error(lineno, e.what());
    }
}

inline void emit_instance(std::ostream& out, const Instance& inst) {
    out << "relations ";
    const auto& r = inst.relations();
    bool first = true;
    for (auto [flag, tok] : {std::pair{r.precede(), 'p'}, {r.nested(), 'n'}, {r.crossing(), 'c'}}) {
        if (!flag) continue;
        if (!first) out << ',';
        out << tok;
        first = false;
    }
    out << "\n";
    for (const auto& d : inst.two_intervals())
        out << "d " << d.label() << " " << d.left().lo() << " " << d.left().hi() << " "
            << d.right().lo() << " " << d.right().hi() << "\n";
}

// Provenance sidecar: "region <component> <lo> <hi>" spans plus one
// "t <label> <role> <u> <v> <comp> <gadget> <row> <col> <comp> <gadget> <row> <col>"
// line per 2-interval (left placement first).
inline void emit_provenance(std::ostream& out, const ReductionInstance& red) {
    out << "# reduction provenance, variant " << variant_name(red.variant) << "\n";
    for (const auto& s : red.region_spans)
        out << "region " << s.component << " " << s.lo << " " << s.hi << "\n";
    for (const auto& d : red.instance.two_intervals()) {
        const RoleRecord& rec = red.provenance.at(d.label());
        out << "t " << d.label() << " " << role_name(rec.role) << " " << rec.u << " " << rec.v;
        for (const IntervalPlacement* pl : {&rec.left, &rec.right})
            out << " " << pl->component << " " << pl->gadget << " " << pl->row << " " << pl->col;
        out << "\n";
    }
}

struct ProvenanceFile {
    std::vector<RegionSpan> region_spans;
    std::map<std::string, RoleRecord> records;
};

inline Role parse_role(const std::string& s, int lineno) {
    if (s == "vertex") return Role::VertexPrimary;
    if (s == "vertex'") return Role::VertexSecondary;
    if (s == "edge") return Role::EdgeUndirected;
    if (s == "edge'") return Role::EdgeUndirectedPrime;
    if (s == "directed") return Role::EdgeDirected;
    throw parse_error(lineno, "unknown role '" + s + "'");
}

inline ProvenanceFile parse_provenance(std::istream& in) {
    ProvenanceFile pf;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "region") {
            RegionSpan s;
            if (!(ls >> s.component >> s.lo >> s.hi))
                throw parse_error(lineno, "expected 'region <component> <lo> <hi>'");
            pf.region_spans.push_back(std::move(s));
        } else if (tag == "t") {
            std::string label, role;
            RoleRecord rec;
            if (!(ls >> label >> role >> rec.u >> rec.v))
                throw parse_error(lineno, "malformed provenance record");
            rec.role = parse_role(role, lineno);
            for (IntervalPlacement* pl : {&rec.left, &rec.right})
                if (!(ls >> pl->component >> pl->gadget >> pl->row >> pl->col))
                    throw parse_error(lineno, "malformed placement");
            pf.records.emplace(std::move(label), std::move(rec));
        } else {
            throw parse_error(lineno, "unknown record '" + tag + "'");
        }
    }
    return pf;
}

}  // namespace tip
