#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fortress/families.hpp"
#include "fortress/trees.hpp"

#include "oracle.hpp"

using fortress::FamilySpec;
using fortress::Graph;

TEST_CASE("tree recognition") {
    REQUIRE(fortress::is_tree(generate(FamilySpec::path(1))));
    REQUIRE(fortress::is_tree(generate(FamilySpec::path(7))));
    REQUIRE(fortress::is_tree(generate(FamilySpec::star(5))));
    REQUIRE(!fortress::is_tree(generate(FamilySpec::cycle(4))));
    REQUIRE(!fortress::is_tree(Graph(4, {{0, 1}, {2, 3}})));  // forest, not tree
    REQUIRE(!fortress::is_tree(generate(FamilySpec::complete(4))));
}

TEST_CASE("tree enumeration matches the census") {
    static constexpr int kCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        std::vector<Graph> trees = fortress::enumerate_trees(n);
        REQUIRE(static_cast<int>(trees.size()) == kCounts[n - 1]);
        std::set<std::string> forms;
        for (const Graph& t : trees) {
            REQUIRE(fortress::is_tree(t));
            forms.insert(fortress::tree_canonical_form(t));
        }
        REQUIRE(forms.size() == trees.size());
    }
}

TEST_CASE("canonical form is an isomorphism invariant") {
    std::mt19937_64 rng(11);
    for (const Graph& t : fortress::enumerate_trees(7)) {
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
        Graph relabeled(7, edges);
        REQUIRE(fortress::tree_canonical_form(relabeled) == fortress::tree_canonical_form(t));
    }
}

TEST_CASE("canonical form separates non-isomorphic trees") {
    std::vector<Graph> trees = fortress::enumerate_trees(8);
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = i + 1; j < trees.size(); ++j)
            if (fortress::tree_canonical_form(trees[i]) ==
                fortress::tree_canonical_form(trees[j]))
                REQUIRE(oracle::isomorphic_naive(trees[i], trees[j]));
}

TEST_CASE("random labeled trees are trees of the requested order") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 20; ++n) {
        Graph t = fortress::random_labeled_tree(n, rng);
        REQUIRE(t.order() == n);
        REQUIRE(fortress::is_tree(t));
    }
}

TEST_CASE("random labeled trees hit distinct shapes") {
    std::mt19937_64 rng(5);
    std::set<std::string> forms;
    for (int i = 0; i < 60; ++i)
        forms.insert(fortress::tree_canonical_form(fortress::random_labeled_tree(7, rng)));
    REQUIRE(forms.size() >= 5);  // 11 shapes exist; a fixed seed finds several
}
