#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tip/io.hpp"
#include "tip/model.hpp"
#include "tip/reduction.hpp"
#include "tip/render.hpp"
#include "tip/solvers.hpp"
#include "tip/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGuard = 2;
constexpr int kExitIo = 3;

tip::Variant parse_variant(const std::string& s) {
    if (s == "nested-crossing") return tip::Variant::NestedCrossing;
    if (s == "precede-crossing") return tip::Variant::PrecedeCrossing;
    throw CLI::ValidationError("--variant", "expected nested-crossing or precede-crossing");
}

tip::ColouredGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tip::parse_error(0, "cannot open '" + path + "'");
    return tip::parse_graph(in);
}

tip::Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tip::parse_error(0, "cannot open '" + path + "'");
    return tip::parse_instance(in);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw tip::parse_error(0, "cannot write '" + path + "'");
    out << contents;
}

int cmd_gen(const std::string& graph_path, const std::string& variant_flag,
            const std::string& out_path) {
    tip::ColouredGraph g = load_graph(graph_path);
    if (g.dropped_monochromatic() > 0)
        std::cerr << "warning: dropped " << g.dropped_monochromatic()
                  << " monochromatic edge" << (g.dropped_monochromatic() == 1 ? "" : "s")
                  << "\n";
    tip::ReductionInstance red = tip::reduce(g, parse_variant(variant_flag));

    std::ostringstream inst_text, prov_text;
    tip::emit_instance(inst_text, red.instance);
    tip::emit_provenance(prov_text, red);
    write_file(out_path, inst_text.str());
    write_file(out_path + ".prov", prov_text.str());

    std::cout << "k'=" << red.k_prime << "\n|F|=" << red.instance.size() << "\n";
    return kExitOk;
}

int cmd_solve(const std::string& inst_path, const std::string& method) {
    tip::Instance inst = load_instance(inst_path);
    tip::Solution sol;
    const auto& r = inst.relations();
    bool chain_ok = (r.precede() && !r.nested() && !r.crossing()) ||
                    (r.nested() && !r.precede() && !r.crossing());
    if (method == "brute") sol = tip::max_pattern_bruteforce(inst);
    else if (method == "chain") sol = tip::max_pattern_chain(inst);
    else if (method == "clique") sol = tip::max_pattern_clique(inst);
    else if (method == "auto") sol = chain_ok ? tip::max_pattern_chain(inst)
                                              : tip::max_pattern_clique(inst);
    else throw CLI::ValidationError("--method", "expected auto, clique, chain or brute");

    std::cout << "method " << tip::method_name(sol.method) << "\nsize " << sol.size << "\n";
    for (const auto& l : sol.labels) std::cout << l << "\n";
    return kExitOk;
}

int cmd_check(const std::string& graph_path, const std::string& variant_flag) {
    tip::ColouredGraph g = load_graph(graph_path);
    tip::EquivalenceReport rep =
        tip::check_reduction_equivalence(g, parse_variant(variant_flag));
    std::cout << "graph " << rep.graph_summary << "\n";
    std::cout << "k' " << rep.k_prime << "\nmax " << rep.max_size << "\n";
    if (rep.clique_exists) {
        std::cout << "clique";
        for (auto v : rep.clique) std::cout << " " << v;
        std::cout << "\n";
    }
    if (rep.agrees)
        std::cout << "AGREE " << (rep.clique_exists ? "yes" : "no") << "-instance ("
                  << rep.max_size << (rep.clique_exists ? " = " : " < ") << "k')\n";
    else
        std::cout << "DISAGREE (clique " << (rep.clique_exists ? "exists" : "absent")
                  << ", max " << rep.max_size << " vs k' " << rep.k_prime << ")\n";
    return rep.agrees ? kExitOk : kExitUsage;
}

int cmd_render(const std::string& inst_path, const std::string& out_path,
               const std::string& prov_path) {
    tip::Instance inst = load_instance(inst_path);
    std::optional<tip::ProvenanceFile> prov;
    if (!prov_path.empty()) {
        std::ifstream in(prov_path);
        if (!in) throw tip::parse_error(0, "cannot open '" + prov_path + "'");
        prov = tip::parse_provenance(in);
    }
    write_file(out_path, tip::render_svg(inst, prov));
    return kExitOk;
}

int cmd_randgraph(int k, int n, double p, std::uint64_t seed, const std::string& out_path) {
    tip::ColouredGraph g = tip::random_coloured_graph(k, n, p, seed);
    std::ostringstream text;
    tip::emit_graph(text, g);
    write_file(out_path, text.str());
    std::cout << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-interval pattern toolkit: relation classification, exact solvers,\n"
                 "and the multicoloured-clique gadget reduction"};
    app.require_subcommand(1);

    std::string graph_path, inst_path, out_path, prov_path;
    std::string variant = "nested-crossing";
    std::string method = "auto";
    int k = 2, n = 2;
    double p = 0.5;
    std::uint64_t seed = 1;

    auto* gen = app.add_subcommand("gen", "reduce a coloured graph to a 2-interval instance");
    gen->add_option("graph", graph_path, "graph file")->required();
    gen->add_option("--variant", variant, "nested-crossing | precede-crossing");
    gen->add_option("--out", out_path, "instance output path")->required();

    auto* solve = app.add_subcommand("solve", "maximum R-comparable subset of an instance");
    solve->add_option("instance", inst_path, "instance file")->required();
    solve->add_option("--method", method, "auto | clique | chain | brute");

    auto* check = app.add_subcommand("check", "reduction equivalence report for a graph");
    check->add_option("graph", graph_path, "graph file")->required();
    check->add_option("--variant", variant, "nested-crossing | precede-crossing");

    auto* render = app.add_subcommand("render", "render an instance as SVG");
    render->add_option("instance", inst_path, "instance file")->required();
    render->add_option("--out", out_path, "SVG output path")->required();
    render->add_option("--prov", prov_path, "provenance sidecar (region labels)");

    auto* rand = app.add_subcommand("randgraph", "deterministic random coloured graph");
    rand->add_option("-k", k, "number of colours");
    rand->add_option("-n", n, "number of vertices");
    rand->add_option("-p", p, "edge probability");
    rand->add_option("--seed", seed, "RNG seed");
    rand->add_option("--out", out_path, "graph output path")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(graph_path, variant, out_path);
        if (solve->parsed()) return cmd_solve(inst_path, method);
        if (check->parsed()) return cmd_check(graph_path, variant);
        if (render->parsed()) return cmd_render(inst_path, out_path, prov_path);
        if (rand->parsed()) return cmd_randgraph(k, n, p, seed, out_path);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const tip::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const tip::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const tip::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
