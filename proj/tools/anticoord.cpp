// anticoord: command-line front end for anti-coordination games on graphs.
//
// Subcommands: solve, check, enumerate, poa, gen, reduce, verify, dot.
// Every command is deterministic: identical inputs and flags produce
// byte-identical output. Reports end with a machine-readable line
//   RESULT <key>=<value>...
//
// Exit codes: 0 success, 2 input error, 3 non-convergence, 4 budget
// exceeded, 5 no equilibrium, 6 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acg/cnf.hpp"
#include "acg/game.hpp"
#include "acg/graph.hpp"
#include "acg/graph_io.hpp"
#include "acg/rational.hpp"
#include "acg/reductions.hpp"
#include "acg/rng.hpp"
#include "acg/search.hpp"

namespace {

using namespace acg;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::bad_parameter, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::bad_parameter, "cannot write '" + path + "'");
    out << content;
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct LoadedGraph {
    Graph graph;
    std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    return {parse_graph(text), fnv1a_digest(text)};
}

void print_input(const std::string& path, const std::string& digest, const Graph& g) {
    std::cout << "input: " << path << " (digest " << digest << ")\n";
    std::cout << "graph: n=" << g.n() << " m=" << g.m() << ' '
              << (g.directed() ? "directed" : "undirected") << '\n';
}

std::string coloring_line(const Coloring& c) {
    std::ostringstream out;
    for (Vertex v = 1; v <= c.n(); ++v) out << (v > 1 ? " " : "") << c.of(v);
    return out.str();
}

Mode parse_mode(const std::string& mode) {
    if (mode == "stable") return Mode::stable;
    if (mode == "strict") return Mode::strict;
    fail(Errc::bad_parameter, "mode must be stable or strict, got '" + mode + "'");
}

long long parse_copies(const std::string& copies, int n) {
    if (copies == "paper") return static_cast<long long>(n) * n * n;
    if (copies == "min") return n;
    try {
        return std::stoll(copies);
    } catch (const std::exception&) {
        fail(Errc::bad_parameter, "--copies must be paper, min, or a number");
    }
}

// ---------------------------------------------------------------------------

struct SolveOpts {
    std::string graph_path;
    int k = 2;
    std::string init = "all1";
    std::uint64_t seed = 0;
    long long max_steps = -1;
    std::string out_path, trace_path, dot_path;
};

int cmd_solve(const SolveOpts& opt) {
    std::cout << "command: solve\n";
    auto [g, digest] = load_graph(opt.graph_path);
    print_input(opt.graph_path, digest, g);
    if (opt.k < 2) fail(Errc::bad_parameter, "solve needs -k >= 2");
    Coloring init;
    if (opt.init == "all1")
        init = uniform_coloring(g.n(), opt.k);
    else if (opt.init == "random")
        init = random_coloring(g.n(), opt.k, opt.seed);
    else
        fail(Errc::bad_parameter, "--init must be all1 or random");
    std::cout << "init: " << opt.init << (opt.init == "random" ? " seed=" + std::to_string(opt.seed) : "")
              << '\n';
    DynamicsTrace trace = run_dynamics(g, opt.k, init, opt.max_steps);
    auto report = classify(g, trace.final);
    long long welfare = social_welfare(g, trace.final);
    std::cout << "steps: " << trace.steps.size() << '\n';
    std::cout << "converged: " << (trace.converged ? "yes" : "no") << '\n';
    std::cout << "classification: " << to_string(report.overall) << '\n';
    std::cout << "welfare: " << welfare << '\n';
    if (trace.has_potential) std::cout << "potential: " << welfare / 2 << '\n';
    std::cout << "coloring: " << coloring_line(trace.final) << '\n';
    if (!opt.out_path.empty()) {
        std::ostringstream buf;
        write_coloring(buf, trace.final);
        write_file(opt.out_path, buf.str());
    }
    if (!opt.trace_path.empty()) {
        std::ostringstream buf;
        write_trace(buf, trace);
        write_file(opt.trace_path, buf.str());
    }
    if (!opt.dot_path.empty()) write_file(opt.dot_path, emit_dot(g, &trace.final));
    std::cout << "RESULT status=" << (trace.converged ? "converged" : "capped")
              << " steps=" << trace.steps.size() << " welfare=" << welfare
              << " classification=" << to_string(report.overall) << '\n';
    return trace.converged ? 0 : 3;
}

int cmd_check(const std::string& graph_path, const std::string& coloring_path,
              const std::string& dot_path) {
    std::cout << "command: check\n";
    auto [g, digest] = load_graph(graph_path);
    print_input(graph_path, digest, g);
    std::string ctext = read_file(coloring_path);
    std::cout << "input: " << coloring_path << " (digest " << fnv1a_digest(ctext) << ")\n";
    Coloring c = parse_coloring(ctext);
    validate_coloring(g, c);
    auto report = classify(g, c);
    long long welfare = social_welfare(g, c);
    std::cout << "classification: " << to_string(report.overall) << '\n';
    std::cout << "welfare: " << welfare << '\n';
    if (!g.directed()) std::cout << "potential: " << welfare / 2 << '\n';
    std::ostringstream unhappy;
    int unhappy_count = 0;
    for (Vertex v = 1; v <= g.n(); ++v)
        if (report.per_vertex[static_cast<std::size_t>(v)].unhappy) {
            unhappy << (unhappy_count++ ? " " : "") << v;
        }
    std::cout << "unhappy: " << (unhappy_count ? unhappy.str() : "none") << '\n';
    if (!dot_path.empty()) write_file(dot_path, emit_dot(g, &c));
    std::cout << "RESULT classification=" << to_string(report.overall) << " welfare=" << welfare
              << " unhappy=" << unhappy_count << '\n';
    return 0;
}

int cmd_enumerate(const std::string& graph_path, int k, const std::string& mode,
                  std::uint64_t budget, bool list, bool orbits) {
    std::cout << "command: enumerate\n";
    auto [g, digest] = load_graph(graph_path);
    print_input(graph_path, digest, g);
    auto found = enumerate_stable(g, k, parse_mode(mode), budget, orbits);
    std::cout << "mode: " << mode << (orbits ? " (orbit representatives)" : "") << '\n';
    if (list)
        for (const auto& c : found) std::cout << "coloring: " << coloring_line(c) << '\n';
    std::cout << "RESULT count=" << found.size() << '\n';
    return 0;
}

int cmd_poa(const std::string& graph_path, int k, std::uint64_t budget,
            const std::string& worst_path, const std::string& best_path) {
    std::cout << "command: poa\n";
    auto [g, digest] = load_graph(graph_path);
    print_input(graph_path, digest, g);
    PoaResult r = price_of_anarchy(g, k, budget);
    std::cout << "stable-count: " << r.stable_count << '\n';
    std::cout << "max-welfare: " << r.max_welfare << " (coloring " << coloring_line(r.best) << ")\n";
    std::cout << "min-stable-welfare: " << r.min_stable_welfare << " (coloring "
              << coloring_line(r.worst_stable) << ")\n";
    std::cout << "PoA " << r.ratio.str() << '\n';
    if (!worst_path.empty()) {
        std::ostringstream buf;
        write_coloring(buf, r.worst_stable);
        write_file(worst_path, buf.str());
    }
    if (!best_path.empty()) {
        std::ostringstream buf;
        write_coloring(buf, r.best);
        write_file(best_path, buf.str());
    }
    std::cout << "RESULT poa=" << r.ratio.str() << " max=" << r.max_welfare
              << " min=" << r.min_stable_welfare << " stable=" << r.stable_count << '\n';
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args, bool directed,
            const std::string& out_path) {
    Graph g;
    if (family == "poa-tight") {
        if (args.size() != 1) fail(Errc::bad_parameter, "usage: gen poa-tight <k>");
        g = poa_tight_instance(std::stoi(args[0])).graph;
    } else if (family == "complete") {
        if (args.size() != 1) fail(Errc::bad_parameter, "usage: gen complete <q>");
        g = complete_graph(std::stoi(args[0]), directed);
    } else if (family == "cycle") {
        if (args.size() != 1) fail(Errc::bad_parameter, "usage: gen cycle <n>");
        g = cycle_graph(std::stoi(args[0]));
    } else if (family == "random") {
        if (args.size() != 3) fail(Errc::bad_parameter, "usage: gen random <n> <p> <seed>");
        g = random_graph(std::stoi(args[0]), std::stod(args[1]), std::stoull(args[2]));
    } else {
        fail(Errc::bad_parameter, "unknown family '" + family +
                                      "' (expected poa-tight, complete, cycle, random)");
    }
    std::string text = graph_to_string(g);
    if (out_path.empty())
        std::cout << text;
    else {
        write_file(out_path, text);
        std::cout << "command: gen\n";
        std::cout << "wrote: " << out_path << " (digest " << fnv1a_digest(text) << ")\n";
        std::cout << "RESULT n=" << g.n() << " m=" << g.m() << '\n';
    }
    return 0;
}

struct ReduceOpts {
    std::string kind, instance;
    int k = 0;
    std::string copies = "paper";
    std::string out_path, roles_path, dot_path;
};

ReductionOutput build_reduction(const ReduceOpts& opt, const std::string& text) {
    if (opt.kind == "kcolor-strict") {
        Graph g = parse_graph(text);
        return reduce_kcolor_to_strict(g, opt.k ? opt.k : 3);
    }
    if (opt.kind == "sat-strict2") {
        return reduce_3sat_to_strict2(parse_dimacs_cnf(text));
    }
    if (opt.kind == "bup-directed2") {
        return reduce_bup_to_directed2(parse_graph(text));
    }
    if (opt.kind == "directed2-directedk") {
        Graph g = parse_graph(text);
        int k = opt.k ? opt.k : 3;
        return reduce_directed2_to_directedk(g, k, parse_copies(opt.copies, g.n()));
    }
    if (opt.kind == "proxy") {
        MixedGameSpec spec = parse_mixed_spec(text);
        if (opt.k) spec.k = opt.k;
        return coordination_proxy_transform(spec);
    }
    if (opt.kind == "to-directed") {
        ReductionOutput out;
        out.graph = undirected_to_directed(parse_graph(text));
        for (Vertex v = 1; v <= out.graph.n(); ++v) out.roles.add("original", v);
        out.params = {{"kind", "to-directed"}};
        return out;
    }
    fail(Errc::bad_parameter, "unknown reduction kind '" + opt.kind + "'");
}

int cmd_reduce(const ReduceOpts& opt) {
    std::cout << "command: reduce " << opt.kind << '\n';
    std::string text = read_file(opt.instance);
    std::cout << "input: " << opt.instance << " (digest " << fnv1a_digest(text) << ")\n";
    ReductionOutput out = build_reduction(opt, text);
    out.roles.validate_partition(out.graph.n());
    std::string gtext = graph_to_string(out.graph);
    if (!opt.out_path.empty()) {
        write_file(opt.out_path, gtext);
        std::cout << "wrote: " << opt.out_path << " (digest " << fnv1a_digest(gtext) << ")\n";
    } else {
        std::cout << gtext;
    }
    if (!opt.roles_path.empty()) {
        std::ostringstream buf;
        write_roles(buf, out.roles, out.graph.n());
        write_file(opt.roles_path, buf.str());
    }
    if (!opt.dot_path.empty()) write_file(opt.dot_path, emit_dot(out.graph, nullptr, &out.roles));
    std::cout << "RESULT n=" << out.graph.n() << " m=" << out.graph.m() << '\n';
    return 0;
}

int cmd_verify(const ReduceOpts& opt, std::uint64_t budget) {
    std::cout << "command: verify " << opt.kind << '\n';
    std::string text = read_file(opt.instance);
    std::cout << "input: " << opt.instance << " (digest " << fnv1a_digest(text) << ")\n";

    bool oracle = false, reduced = false;
    std::string detail;
    if (opt.kind == "kcolor-strict") {
        Graph g = parse_graph(text);
        int k = opt.k ? opt.k : 3;
        oracle = proper_colorable(g, k).has_value();
        auto red = reduce_kcolor_to_strict(g, k);
        reduced = search_stable(red.graph, k, Mode::strict).has_value();
        detail = "proper " + std::to_string(k) + "-colorable vs strictly stable";
    } else if (opt.kind == "sat-strict2") {
        Cnf f = parse_dimacs_cnf(text);
        oracle = sat_brute_force(f).has_value();
        auto red = reduce_3sat_to_strict2(f);
        auto witness = search_stable(red.graph, 2, Mode::strict);
        reduced = witness.has_value();
        detail = "satisfiable vs strictly stable";
        if (witness && oracle) {
            extract_assignment(red, *witness);  // throws on a falsified extraction
            std::cout << "extracted assignment satisfies the formula\n";
        }
    } else if (opt.kind == "bup-directed2") {
        Graph g = parse_graph(text);
        oracle = balanced_unfriendly_exists(g).has_value();
        auto red = reduce_bup_to_directed2(g);
        reduced = search_stable(red.graph, 2, Mode::stable).has_value();
        detail = "balanced unfriendly partition vs stable 2-coloring";
    } else if (opt.kind == "directed2-directedk") {
        Graph g = parse_graph(text);
        int k = opt.k ? opt.k : 3;
        std::string copies = opt.copies == "paper" ? "min" : opt.copies;  // min suffices to verify
        oracle = search_stable(g, 2, Mode::stable).has_value();
        auto red = reduce_directed2_to_directedk(g, k, parse_copies(copies, g.n()));
        reduced = search_stable(red.graph, k, Mode::stable).has_value();
        detail = "stable 2-coloring vs stable " + std::to_string(k) + "-coloring";
    } else if (opt.kind == "proxy") {
        MixedGameSpec spec = parse_mixed_spec(text);
        if (opt.k) spec.k = opt.k;
        auto red = coordination_proxy_transform(spec);
        auto stable = enumerate_stable(red.graph, spec.k, Mode::stable, budget);
        bool all_agree = true;
        for (const auto& c : stable)
            for (const auto& arc : spec.arcs)
                if (arc.coordinate && c.of(arc.from) != c.of(arc.to)) all_agree = false;
        std::cout << "stable colorings: " << stable.size() << '\n';
        oracle = reduced = all_agree;
        detail = "coordinate-arc endpoints agree in every stable coloring";
        if (!all_agree) {
            std::cout << "MISMATCH: " << detail << " violated\n";
            std::cout << "RESULT verdict=MISMATCH\n";
            return 6;
        }
        std::cout << "MATCH: " << detail << '\n';
        std::cout << "RESULT verdict=MATCH\n";
        return 0;
    } else {
        fail(Errc::bad_parameter, "unknown verification kind '" + opt.kind + "'");
    }

    std::cout << "oracle: " << (oracle ? "yes" : "no") << '\n';
    std::cout << "reduction: " << (reduced ? "yes" : "no") << '\n';
    if (oracle != reduced) {
        std::cout << "MISMATCH: " << detail << '\n';
        std::cout << "RESULT verdict=MISMATCH\n";
        return 6;
    }
    std::cout << "MATCH: " << detail << '\n';
    std::cout << "RESULT verdict=MATCH\n";
    return 0;
}

int cmd_dot(const std::string& graph_path, const std::string& coloring_path,
            const std::string& roles_path, const std::string& out_path) {
    auto [g, digest] = load_graph(graph_path);
    std::optional<Coloring> c;
    if (!coloring_path.empty()) {
        c = parse_coloring(read_file(coloring_path));
        validate_coloring(g, *c);
    }
    std::optional<VertexRoleMap> roles;
    if (!roles_path.empty()) {
        std::istringstream in(read_file(roles_path));
        roles = parse_roles(in);
    }
    std::string dot = emit_dot(g, c ? &*c : nullptr, roles ? &*roles : nullptr);
    if (out_path.empty())
        std::cout << dot;
    else
        write_file(out_path, dot);
    return 0;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::budget_exceeded: return 4;
        case Errc::no_equilibrium: return 5;
        case Errc::contract_violation:
        case Errc::extraction_unsatisfied: return 6;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-coordination games on graphs: dynamics, equilibria, reductions"};
    app.require_subcommand(1);

    SolveOpts solve_opt;
    auto* solve = app.add_subcommand("solve", "run best-response dynamics to a stable coloring");
    solve->add_option("graph", solve_opt.graph_path, "graph file")->required();
    solve->add_option("-k,--colors", solve_opt.k, "number of colors")->required();
    solve->add_option("--init", solve_opt.init, "initial coloring: all1 | random");
    solve->add_option("--seed", solve_opt.seed, "seed for --init random");
    solve->add_option("--max-steps", solve_opt.max_steps, "step cap (default: |E| undirected, 10nk directed)");
    solve->add_option("-o,--out", solve_opt.out_path, "write final coloring here");
    solve->add_option("--trace", solve_opt.trace_path, "write step trace here");
    solve->add_option("--dot", solve_opt.dot_path, "write DOT rendering here");

    std::string check_graph, check_coloring, check_dot;
    auto* check = app.add_subcommand("check", "classify a coloring");
    check->add_option("graph", check_graph, "graph file")->required();
    check->add_option("coloring", check_coloring, "coloring file")->required();
    check->add_option("--dot", check_dot, "write DOT rendering here");

    std::string enum_graph, enum_mode = "stable";
    int enum_k = 2;
    std::uint64_t enum_budget = kDefaultBudget;
    bool enum_list = false, enum_orbits = false;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate stable colorings exhaustively");
    enumerate->add_option("graph", enum_graph, "graph file")->required();
    enumerate->add_option("-k,--colors", enum_k, "number of colors")->required();
    enumerate->add_option("--mode", enum_mode, "stable | strict");
    enumerate->add_option("--budget", enum_budget, "max colorings examined");
    enumerate->add_flag("--list", enum_list, "print each coloring");
    enumerate->add_flag("--orbits", enum_orbits, "one representative per color-permutation orbit");

    std::string poa_graph, poa_worst, poa_best;
    int poa_k = 2;
    std::uint64_t poa_budget = kDefaultBudget;
    auto* poa = app.add_subcommand("poa", "exact price of anarchy by full enumeration");
    poa->add_option("graph", poa_graph, "graph file")->required();
    poa->add_option("-k,--colors", poa_k, "number of colors")->required();
    poa->add_option("--budget", poa_budget, "max colorings examined");
    poa->add_option("--worst", poa_worst, "write worst stable coloring here");
    poa->add_option("--best", poa_best, "write best coloring here");

    std::string gen_family, gen_out;
    std::vector<std::string> gen_args;
    bool gen_directed = false;
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->add_option("family", gen_family, "poa-tight <k> | complete <q> | cycle <n> | random <n> <p> <seed>")
        ->required();
    gen->add_option("args", gen_args, "family parameters");
    gen->add_flag("--directed", gen_directed, "directed variant (complete)");
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    ReduceOpts reduce_opt;
    auto* reduce = app.add_subcommand("reduce", "construct a reduction instance");
    reduce->add_option("kind", reduce_opt.kind,
                       "kcolor-strict | sat-strict2 | bup-directed2 | directed2-directedk | proxy | to-directed")
        ->required();
    reduce->add_option("instance", reduce_opt.instance, "input file")->required();
    reduce->add_option("-k,--colors", reduce_opt.k, "number of colors");
    reduce->add_option("--copies", reduce_opt.copies, "paper | min | <N> (directed2-directedk)");
    reduce->add_option("-o,--out", reduce_opt.out_path, "output graph path (default stdout)");
    reduce->add_option("--roles", reduce_opt.roles_path, "write role sidecar here");
    reduce->add_option("--dot", reduce_opt.dot_path, "write DOT rendering here");

    ReduceOpts verify_opt;
    std::uint64_t verify_budget = kDefaultBudget;
    auto* verify = app.add_subcommand("verify", "check a reduction against its brute-force oracle");
    verify->add_option("kind", verify_opt.kind,
                       "kcolor-strict | sat-strict2 | bup-directed2 | directed2-directedk | proxy")
        ->required();
    verify->add_option("instance", verify_opt.instance, "input file")->required();
    verify->add_option("-k,--colors", verify_opt.k, "number of colors");
    verify->add_option("--copies", verify_opt.copies, "paper | min | <N>");
    verify->add_option("--budget", verify_budget, "max colorings examined (proxy)");

    std::string dot_graph, dot_coloring, dot_roles, dot_out;
    auto* dot = app.add_subcommand("dot", "emit a DOT rendering");
    dot->add_option("graph", dot_graph, "graph file")->required();
    dot->add_option("--coloring", dot_coloring, "coloring file");
    dot->add_option("--roles", dot_roles, "role sidecar file");
    dot->add_option("-o,--out", dot_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opt);
        if (check->parsed()) return cmd_check(check_graph, check_coloring, check_dot);
        if (enumerate->parsed())
            return cmd_enumerate(enum_graph, enum_k, enum_mode, enum_budget, enum_list, enum_orbits);
        if (poa->parsed()) return cmd_poa(poa_graph, poa_k, poa_budget, poa_worst, poa_best);
        if (gen->parsed()) return cmd_gen(gen_family, gen_args, gen_directed, gen_out);
        if (reduce->parsed()) return cmd_reduce(reduce_opt);
        if (verify->parsed()) return cmd_verify(verify_opt, verify_budget);
        if (dot->parsed()) return cmd_dot(dot_graph, dot_coloring, dot_roles, dot_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
