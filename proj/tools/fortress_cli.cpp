// fortress: zero forcing, forts, and well-failed classification from the
// command line.  Every subcommand reads one graph (--g6 / --edges / --family)
// except `verify`, which runs the whole property-check corpus.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fortress/report.hpp"
#include "fortress/verify.hpp"

namespace {

using fortress::Graph;
using fortress::ordered_json;
using fortress::VertexSet;

/// One graph source plus the knobs shared by the analysis subcommands.
struct GraphArgs {
    std::string g6;
    std::string edges_path;
    std::string family;
    int n = -1;
    int m = -1;
    std::vector<int> legs;
    std::vector<int> legs2;
    int max_exact = fortress::kDefaultExactGuard;
    bool json = false;
    bool dot = false;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
    cmd->add_option("--g6", args.g6, "graph6 string");
    cmd->add_option("--edges", args.edges_path, "edge-list file (first line: n m)");
    cmd->add_option("--family", args.family,
                    "family name: path|cycle|complete|complete_bipartite|star|"
                    "generalized_star|double_generalized_star|star222|petersen|"
                    "leafy_sample|star_removal_sample");
    cmd->add_option("--n", args.n, "family order parameter");
    cmd->add_option("--m", args.m, "first part size for complete_bipartite");
    cmd->add_option("--legs", args.legs, "leg lengths, comma separated")->delimiter(',');
    cmd->add_option("--legs2", args.legs2, "second-center leg lengths")->delimiter(',');
    cmd->add_option("--max-exact", args.max_exact,
                    "largest order for exponential searches")
        ->envname("FORTRESS_MAX_EXACT");
    cmd->add_flag("--json", args.json, "emit the JSON report");
    cmd->add_flag("--dot", args.dot, "print the graph in DOT format and exit");
}

int require_n(const GraphArgs& args) {
    if (args.n < 0)
        throw std::invalid_argument("--family " + args.family + " requires --n");
    return args.n;
}

Graph family_graph(const GraphArgs& args) {
    using fortress::FamilySpec;
    const std::string& f = args.family;
    if (f == "path") return generate(FamilySpec::path(require_n(args)));
    if (f == "cycle") return generate(FamilySpec::cycle(require_n(args)));
    if (f == "complete") return generate(FamilySpec::complete(require_n(args)));
    if (f == "complete_bipartite") {
        if (args.m < 0 || args.n < 0)
            throw std::invalid_argument("--family complete_bipartite requires --m and --n");
        return generate(FamilySpec::complete_bipartite(args.m, args.n));
    }
    if (f == "star") return generate(FamilySpec::star(require_n(args)));
    if (f == "generalized_star") {
        if (args.legs.empty())
            throw std::invalid_argument("--family generalized_star requires --legs");
        return generate(FamilySpec::generalized_star(args.legs));
    }
    if (f == "double_generalized_star") {
        if (args.legs.empty() || args.legs2.empty())
            throw std::invalid_argument(
                "--family double_generalized_star requires --legs and --legs2");
        return generate(FamilySpec::double_generalized_star(args.legs, args.legs2));
    }
    if (f == "star222") return generate(FamilySpec::star222());
    if (f == "petersen") return generate(FamilySpec::petersen());
    if (f == "leafy_sample") return fortress::sample_leafy_graph();
    if (f == "star_removal_sample") return fortress::sample_star_removal_tree();
    throw std::invalid_argument("unknown family: " + f);
}

Graph load_graph(const GraphArgs& args) {
    int sources = (!args.g6.empty() ? 1 : 0) + (!args.edges_path.empty() ? 1 : 0) +
                  (!args.family.empty() ? 1 : 0);
    if (sources != 1)
        throw std::invalid_argument("exactly one of --g6, --edges, --family is required");
    if (!args.g6.empty()) return fortress::parse_graph6(args.g6);
    if (!args.edges_path.empty()) {
        std::ifstream in(args.edges_path);
        if (!in) throw std::invalid_argument("cannot open edge list: " + args.edges_path);
        return fortress::read_edge_list(in);
    }
    return family_graph(args);
}

void emit(const GraphArgs& args, const ordered_json& doc,
          const std::string& text) {
    if (args.json)
        std::cout << doc.dump(2) << '\n';
    else
        std::cout << text;
}

ordered_json base_doc(const Graph& g) {
    ordered_json doc;
    doc["graph"] = fortress::to_graph6(g);
    doc["n"] = g.order();
    doc["m"] = g.edge_count();
    return doc;
}

/// Prints the DOT dump when requested; true means the command is done.
bool handle_dot(const GraphArgs& args, const Graph& g) {
    if (args.dot) std::cout << fortress::to_dot(g);
    return args.dot;
}

int run_classify(const GraphArgs& args) {
    Graph g = load_graph(args);
    if (handle_dot(args, g)) return 0;
    ordered_json doc = fortress::build_report(g, args.max_exact);
    emit(args, doc, fortress::render_text(doc));
    return 0;
}

int run_forts(const GraphArgs& args) {
    Graph g = load_graph(args);
    if (handle_dot(args, g)) return 0;
    fortress::FortReport forts = fortress::minimal_forts(g, args.max_exact);
    ordered_json doc = base_doc(g);
    doc["f_number"] = fortress::failed_zero_forcing_number(g, args.max_exact);
    doc["min_size"] = forts.min_size;
    doc["max_size"] = forts.max_size;
    doc["minimal_forts"] = fortress::detail::json_of(forts.minimal_forts);
    std::string text = "minimal forts of " + fortress::to_graph6(g) + " (" +
                       std::to_string(forts.minimal_forts.size()) + " total, sizes " +
                       std::to_string(forts.min_size) + ".." +
                       std::to_string(forts.max_size) + ")\n";
    for (const VertexSet& w : forts.minimal_forts) text += "  " + w.to_string() + "\n";
    emit(args, doc, text);
    return 0;
}

int run_zfs(const GraphArgs& args, const std::string& method) {
    Graph g = load_graph(args);
    if (handle_dot(args, g)) return 0;
    std::vector<VertexSet> direct, cover;
    if (method != "cover") direct = fortress::minimal_zero_forcing_sets(g, args.max_exact);
    if (method != "direct")
        cover = fortress::minimal_zero_forcing_sets_by_cover(g, args.max_exact);
    const std::vector<VertexSet>& sets = method == "cover" ? cover : direct;
    ordered_json doc = base_doc(g);
    doc["z_number"] = fortress::zero_forcing_number(g, args.max_exact);
    doc["method"] = method;
    doc["minimal_zfs"] = fortress::detail::json_of(sets);
    bool agree = true;
    if (method == "both") {
        agree = direct == cover;
        doc["agree"] = agree;
    }
    std::string text = "minimal zero forcing sets of " + fortress::to_graph6(g) + " (" +
                       std::to_string(sets.size()) + " total)\n";
    for (const VertexSet& s : sets) text += "  " + s.to_string() + "\n";
    if (method == "both")
        text += agree ? "direct and cover enumerations agree\n"
                      : "direct and cover enumerations DISAGREE\n";
    emit(args, doc, text);
    return agree ? 0 : 1;
}

int run_irrelevant(const GraphArgs& args) {
    Graph g = load_graph(args);
    if (handle_dot(args, g)) return 0;
    using fortress::IrrelevanceKind;
    VertexSet fort = irrelevant_vertices(g, IrrelevanceKind::fort, args.max_exact);
    VertexSet zf = irrelevant_vertices(g, IrrelevanceKind::zero_forcing, args.max_exact);
    VertexSet failed =
        irrelevant_vertices(g, IrrelevanceKind::failed_zero_forcing, args.max_exact);
    VertexSet universal = fortress::universal_fort_vertices(g, args.max_exact);
    ordered_json doc = base_doc(g);
    doc["irrelevant"] = {{"fort", fortress::detail::json_of(fort)},
                         {"zero_forcing", fortress::detail::json_of(zf)},
                         {"failed_zero_forcing", fortress::detail::json_of(failed)}};
    doc["universal"] = fortress::detail::json_of(universal);
    std::string text;
    text += "fort-irrelevant: " + fort.to_string() + "\n";
    text += "zero-forcing-irrelevant: " + zf.to_string() + "\n";
    text += "failed-zf-irrelevant: " + failed.to_string() + "\n";
    text += "universal fort vertices: " + universal.to_string() + "\n";
    emit(args, doc, text);
    return 0;
}

int run_tree(const GraphArgs& args) {
    Graph g = load_graph(args);
    if (handle_dot(args, g)) return 0;
    if (!fortress::is_tree(g)) throw std::invalid_argument("tree: input is not a tree");
    fortress::StarDecomposition dec = fortress::star_centers(g);
    fortress::TreeShape shape = fortress::tree_shape(g);
    ordered_json doc = base_doc(g);
    doc["tree_shape"] = fortress::detail::json_of_shape(shape);
    ordered_json layers = ordered_json::array();
    for (const fortress::StarLayer& layer : dec.layers)
        layers.push_back({{"centers", fortress::detail::json_of(layer.centers)},
                          {"residual", fortress::detail::json_of(layer.residual)}});
    doc["star_centers"] = {{"layers", std::move(layers)},
                           {"all_centers", fortress::detail::json_of(dec.all_centers)},
                           {"final_residual", fortress::detail::json_of(dec.final_residual)}};
    doc["well_failed"] = fortress::is_well_failed_tree_fastpath(g);
    doc["well_forced"] = fortress::is_well_forced_tree_fastpath(g);
    std::string text = "shape: " + std::string(fortress::shape_name(shape.tag)) + "\n";
    for (std::size_t i = 0; i < dec.layers.size(); ++i)
        text += "layer " + std::to_string(i) + " centers: " +
                dec.layers[i].centers.to_string() + "\n";
    text += "final residual: " + dec.final_residual.to_string() + "\n";
    text += "well_failed: " + std::string(doc["well_failed"].get<bool>() ? "true" : "false") +
            "\n";
    text += "well_forced: " + std::string(doc["well_forced"].get<bool>() ? "true" : "false") +
            "\n";
    emit(args, doc, text);
    return 0;
}

struct ConstructArgs {
    std::string kind;
    int start = -1;
    std::vector<int> leaves;
    std::vector<int> fort;
    int vertex = -1;
};

int run_construct(const GraphArgs& args, const ConstructArgs& c) {
    Graph g = load_graph(args);
    if (handle_dot(args, g)) return 0;
    ordered_json doc = base_doc(g);
    doc["kind"] = c.kind;
    if (c.kind == "spanning_path") {
        if (c.fort.empty() || c.vertex < 0)
            throw std::invalid_argument("construct spanning_path requires --fort and --vertex");
        VertexSet w = VertexSet::of(g.order(), c.fort);
        std::vector<int> path = fortress::fort_spanning_path(g, w, c.vertex);
        doc["path"] = path;
        std::string text = "path:";
        for (int v : path) text += " " + std::to_string(v);
        emit(args, doc, text + "\n");
        return 0;
    }
    VertexSet w(g.order());
    if (c.kind == "standard_path") {
        w = fortress::standard_path_fort(g, c.start);
    } else if (c.kind == "two_leg") {
        if (c.leaves.size() != 2)
            throw std::invalid_argument("construct two_leg requires --leaves a,b");
        w = fortress::standard_two_leg_fort(g,
                                            fortress::pendent_leg_of_leaf(g, c.leaves[0]),
                                            fortress::pendent_leg_of_leaf(g, c.leaves[1]));
    } else if (c.kind == "adjusted") {
        w = fortress::adjusted_fort(g);
    } else if (c.kind == "adjusted_pgs") {
        w = fortress::adjusted_pgs_fort(g);
    } else if (c.kind == "leaf_to_leaf") {
        if (c.leaves.size() != 2)
            throw std::invalid_argument("construct leaf_to_leaf requires --leaves a,b");
        w = fortress::leaf_to_leaf_fort(g, c.leaves[0], c.leaves[1]);
    } else {
        throw std::invalid_argument("unknown construct kind: " + c.kind);
    }
    bool minimal = fortress::is_minimal_fort(g, w);
    doc["fort"] = fortress::detail::json_of(w);
    doc["minimal"] = minimal;
    emit(args, doc,
         "fort: " + w.to_string() + (minimal ? " (minimal)\n" : " (NOT minimal)\n"));
    return minimal ? 0 : 1;
}

struct VerifyArgs {
    fortress::VerifyOptions opts;
    bool json = false;
};

int run_verify(const VerifyArgs& args) {
    fortress::VerifyReport report = fortress::verify_corpus(args.opts);
    if (args.json) {
        ordered_json doc;
        ordered_json checks = ordered_json::array();
        for (const fortress::CheckResult& c : report.checks)
            checks.push_back(
                {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
        doc["checks"] = std::move(checks);
        doc["all_passed"] = report.all_passed();
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const fortress::CheckResult& c : report.checks) {
            std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases
                      << " cases";
            if (!c.passed()) std::cout << ", " << c.failures.size() << " failures";
            std::cout << ")\n";
            std::size_t shown = 0;
            for (const std::string& f : c.failures) {
                if (++shown > 5) {
                    std::cout << "    ...\n";
                    break;
                }
                std::cout << "    " << f << '\n';
            }
        }
        std::cout << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << " ("
                  << report.total_cases() << " cases, " << report.total_failures()
                  << " failures)\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing, failed zero forcing, forts, and well-failed graphs"};
    app.require_subcommand(1);

    GraphArgs graph_args;
    ConstructArgs construct_args;
    std::string zfs_method = "direct";
    VerifyArgs verify_args;
    int exit_code = 0;

    CLI::App* classify = app.add_subcommand("classify", "full report for one graph");
    add_graph_options(classify, graph_args);
    classify->callback([&] { exit_code = run_classify(graph_args); });

    CLI::App* forts = app.add_subcommand("forts", "enumerate minimal forts");
    add_graph_options(forts, graph_args);
    forts->callback([&] { exit_code = run_forts(graph_args); });

    CLI::App* zfs = app.add_subcommand("zfs", "enumerate minimal zero forcing sets");
    add_graph_options(zfs, graph_args);
    zfs->add_option("--method", zfs_method, "direct|cover|both")
        ->check(CLI::IsMember({"direct", "cover", "both"}));
    zfs->callback([&] { exit_code = run_zfs(graph_args, zfs_method); });

    CLI::App* irrelevant = app.add_subcommand("irrelevant", "irrelevant-vertex sets");
    add_graph_options(irrelevant, graph_args);
    irrelevant->callback([&] { exit_code = run_irrelevant(graph_args); });

    CLI::App* tree = app.add_subcommand("tree", "star centers and tree shape");
    add_graph_options(tree, graph_args);
    tree->callback([&] { exit_code = run_tree(graph_args); });

    CLI::App* construct = app.add_subcommand("construct", "build a fort by a named coloring");
    add_graph_options(construct, graph_args);
    construct->add_option("--kind", construct_args.kind,
                          "standard_path|two_leg|adjusted|adjusted_pgs|leaf_to_leaf|"
                          "spanning_path")
        ->required();
    construct->add_option("--start", construct_args.start, "path endpoint for standard_path");
    construct->add_option("--leaves", construct_args.leaves, "two leaf vertices")
        ->delimiter(',');
    construct->add_option("--fort", construct_args.fort, "fort members for spanning_path")
        ->delimiter(',');
    construct->add_option("--vertex", construct_args.vertex,
                          "fort member the spanning path must visit");
    construct->callback([&] { exit_code = run_construct(graph_args, construct_args); });

    CLI::App* verify = app.add_subcommand("verify", "run the verification corpus");
    verify->add_option("--trees-max", verify_args.opts.trees_max,
                       "exhaustive tree corpus bound");
    verify->add_option("--random-trees", verify_args.opts.random_trees,
                       "number of random trees");
    verify->add_option("--random-tree-min", verify_args.opts.random_tree_min,
                       "smallest random tree");
    verify->add_option("--random-tree-max", verify_args.opts.random_tree_max,
                       "largest random tree");
    verify->add_option("--random-graphs", verify_args.opts.random_graphs,
                       "number of random graphs");
    verify->add_option("--random-graph-max", verify_args.opts.random_graph_max,
                       "largest random graph");
    verify->add_option("--samples", verify_args.opts.construction_samples,
                       "samples per coloring constructor");
    verify->add_option("--seed", verify_args.opts.seed, "corpus generation seed");
    verify->add_option("--jobs", verify_args.opts.jobs, "worker threads");
    verify->add_option("--max-exact", verify_args.opts.guard,
                       "largest order for exponential searches")
        ->envname("FORTRESS_MAX_EXACT");
    verify->add_flag("--json", verify_args.json, "emit the JSON report");
    verify->callback([&] { exit_code = run_verify(verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const fortress::GuardExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (raise --max-exact or FORTRESS_MAX_EXACT)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
