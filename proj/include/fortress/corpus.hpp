#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fortress/families.hpp"
#include "fortress/graph.hpp"
#include "fortress/tree_structure.hpp"
#include "fortress/trees.hpp"

namespace fortress {

/// A graph together with a short name for diagnostics.
struct NamedGraph {
    std::string name;
    Graph graph;
};

/// An 18-vertex tree whose star removal runs two full rounds and leaves a
/// single-edge residual; exercises layered star centers end to end.
inline Graph sample_star_removal_tree() {
    return from_edge_list(18, {{0, 2},
                               {1, 2},
                               {2, 3},
                               {3, 4},
                               {4, 5},
                               {5, 6},
                               {4, 7},
                               {7, 8},
                               {8, 9},
                               {8, 10},
                               {8, 11},
                               {8, 12},
                               {12, 13},
                               {13, 14},
                               {14, 15},
                               {15, 16},
                               {15, 17}});
}

/// A 13-vertex leafy graph containing a triangle: every non-leaf vertex has a
/// double pendant, yet the graph is not a tree.
inline Graph sample_leafy_graph() {
    return from_edge_list(13, {{0, 1},
                               {1, 2},
                               {2, 0},
                               {2, 3},
                               {0, 4},
                               {0, 5},
                               {1, 6},
                               {1, 7},
                               {1, 8},
                               {2, 9},
                               {2, 10},
                               {3, 11},
                               {3, 12}});
}

/// Named small instances of every supported family, plus the two fixtures.
inline std::vector<NamedGraph> family_corpus() {
    std::vector<NamedGraph> out;
    auto add = [&](std::string name, const FamilySpec& spec) {
        out.push_back({std::move(name), generate(spec)});
    };
    for (int n = 1; n <= 12; ++n) add("path-" + std::to_string(n), FamilySpec::path(n));
    for (int n = 3; n <= 12; ++n) add("cycle-" + std::to_string(n), FamilySpec::cycle(n));
    for (int n = 1; n <= 7; ++n) add("complete-" + std::to_string(n), FamilySpec::complete(n));
    for (int m = 1; m <= 5; ++m)
        for (int n = m; n <= 5; ++n)
            add("complete-bipartite-" + std::to_string(m) + "-" + std::to_string(n),
                FamilySpec::complete_bipartite(m, n));
    add("star222", FamilySpec::star222());
    add("petersen", FamilySpec::petersen());
    add("gen-star-2-2-3", FamilySpec::generalized_star({2, 2, 3}));
    add("gen-star-2-3-4", FamilySpec::generalized_star({2, 3, 4}));
    add("gen-star-1-2-3", FamilySpec::generalized_star({1, 2, 3}));
    add("gen-star-2-2-2-2", FamilySpec::generalized_star({2, 2, 2, 2}));
    add("double-star-22-22", FamilySpec::double_generalized_star({2, 2}, {2, 2}));
    add("double-star-23-22", FamilySpec::double_generalized_star({2, 3}, {2, 2}));
    add("double-star-222-22", FamilySpec::double_generalized_star({2, 2, 2}, {2, 2}));
    out.push_back({"star-removal-tree", sample_star_removal_tree()});
    out.push_back({"leafy-graph", sample_leafy_graph()});
    return out;
}

/// Every tree (up to isomorphism) with at most max_n vertices.
inline std::vector<NamedGraph> tree_corpus(int max_n) {
    std::vector<NamedGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        int i = 0;
        for (Graph& t : enumerate_trees(n))
            out.push_back({"tree-" + std::to_string(n) + "-" + std::to_string(i++),
                           std::move(t)});
    }
    return out;
}

/// Erdos-Renyi random graph G(n, p).
template <typename Rng>
Graph random_graph(int n, double p, Rng& rng) {
    if (n < 0) throw std::invalid_argument("random_graph: n must be >= 0");
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Random labeled trees with orders drawn uniformly from [min_n, max_n].
template <typename Rng>
std::vector<NamedGraph> random_tree_corpus(int count, int min_n, int max_n, Rng& rng) {
    std::uniform_int_distribution<int> pick_n(min_n, max_n);
    std::vector<NamedGraph> out;
    for (int i = 0; i < count; ++i)
        out.push_back({"random-tree-" + std::to_string(i),
                       random_labeled_tree(pick_n(rng), rng)});
    return out;
}

/// Random graphs over a spread of densities with orders in [1, max_n].
template <typename Rng>
std::vector<NamedGraph> random_graph_corpus(int count, int max_n, Rng& rng) {
    static constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::vector<NamedGraph> out;
    for (int i = 0; i < count; ++i)
        out.push_back({"random-graph-" + std::to_string(i),
                       random_graph(pick_n(rng), kDensities[i % 5], rng)});
    return out;
}

/// Random tree with no double pendants, by rejection sampling.  No such tree
/// exists on exactly three vertices.
template <typename Rng>
Graph random_double_pendant_free_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_double_pendant_free_tree: n must be >= 1");
    if (n == 3)
        throw std::invalid_argument(
            "random_double_pendant_free_tree: every tree on 3 vertices has a double pendant");
    for (int attempt = 0; attempt < 5000; ++attempt) {
        Graph t = random_labeled_tree(n, rng);
        if (!has_double_pendant(t)) return t;
    }
    throw std::runtime_error("random_double_pendant_free_tree: rejection limit reached");
}

/// Random generalized star with 3..4 legs of length 2..4 (no unit legs, so
/// the adjusted coloring applies).
template <typename Rng>
Graph random_generalized_star(Rng& rng) {
    std::uniform_int_distribution<int> pick_legs(3, 4);
    std::uniform_int_distribution<int> pick_len(2, 4);
    std::vector<int> legs(static_cast<std::size_t>(pick_legs(rng)));
    for (int& len : legs) len = pick_len(rng);
    return generate(FamilySpec::generalized_star(std::move(legs)));
}

/// Random double generalized star with 2..3 legs of length 2..4 per center.
template <typename Rng>
Graph random_double_generalized_star(Rng& rng) {
    std::uniform_int_distribution<int> pick_legs(2, 3);
    std::uniform_int_distribution<int> pick_len(2, 4);
    auto draw = [&] {
        std::vector<int> legs(static_cast<std::size_t>(pick_legs(rng)));
        for (int& len : legs) len = pick_len(rng);
        return legs;
    };
    return generate(FamilySpec::double_generalized_star(draw(), draw()));
}

}  // namespace fortress
