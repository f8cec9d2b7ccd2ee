#include <catch2/catch_amalgamated.hpp>

#include "fortress/classify.hpp"
#include "fortress/corpus.hpp"

#include "oracle.hpp"

using fortress::Classification;
using fortress::ClassifyMethod;
using fortress::FamilySpec;
using fortress::Graph;
using fortress::VertexSet;

TEST_CASE("path family classification") {
    for (int n = 1; n <= 12; ++n) {
        Classification c = fortress::is_well_failed(generate(FamilySpec::path(n)));
        bool want = n <= 4 || n == 6;
        INFO("path on " << n);
        REQUIRE(c.well_failed == want);
        REQUIRE(c.method == ClassifyMethod::both_agree);
    }
}

TEST_CASE("cycle family classification") {
    for (int n = 3; n <= 12; ++n) {
        Classification c = fortress::is_well_failed(generate(FamilySpec::cycle(n)));
        INFO("cycle on " << n);
        REQUIRE(c.well_failed == (n <= 5 || n == 7));
        REQUIRE(c.method == ClassifyMethod::bruteforce);
    }
}

TEST_CASE("witnesses document a failed classification") {
    Classification c = fortress::is_well_failed(generate(FamilySpec::path(5)));
    REQUIRE(!c.well_failed);
    REQUIRE(c.fort_witnesses.size() == 2);
    REQUIRE(c.fort_witnesses[0].size() == 3);
    REQUIRE(c.fort_witnesses[1].size() == 4);
    REQUIRE(c.fort_witnesses[0] == VertexSet::of(5, {0, 2, 4}));
    REQUIRE(c.fort_witnesses[1] == VertexSet::of(5, {0, 1, 3, 4}));
    Graph p5 = generate(FamilySpec::path(5));
    for (const VertexSet& w : c.fort_witnesses) REQUIRE(fortress::is_minimal_fort(p5, w));
}

TEST_CASE("petersen is well-failed") {
    Classification c = fortress::is_well_failed(generate(FamilySpec::petersen()));
    REQUIRE(c.well_failed);
    REQUIRE(c.method == ClassifyMethod::bruteforce);
    REQUIRE(c.fort_witnesses.empty());
}

TEST_CASE("the three-legged spider is well-failed but not well-forced") {
    Classification c = fortress::is_well_failed(generate(FamilySpec::star222()));
    REQUIRE(c.well_failed);
    REQUIRE(!c.well_forced);
    REQUIRE(c.zfs_witnesses.size() == 2);
    REQUIRE(c.zfs_witnesses[0].size() == 2);
    REQUIRE(c.zfs_witnesses[1].size() == 3);
}

TEST_CASE("two-round sample tree fails fast and slow alike") {
    Graph t = fortress::sample_star_removal_tree();
    Classification c = fortress::is_well_failed(t);
    REQUIRE(!c.well_failed);
    REQUIRE(c.well_forced);
    REQUIRE(c.method == ClassifyMethod::both_agree);
    REQUIRE(!fortress::is_well_failed_tree_fastpath(t));
    REQUIRE(fortress::is_well_forced_tree_fastpath(t));
}

TEST_CASE("leafy sample graph is well-failed") {
    Classification c = fortress::is_well_failed(fortress::sample_leafy_graph());
    REQUIRE(c.well_failed);
}

TEST_CASE("well-forced verdicts on small paths") {
    REQUIRE(fortress::is_well_forced(generate(FamilySpec::path(1))));
    REQUIRE(fortress::is_well_forced(generate(FamilySpec::path(2))));
    REQUIRE(fortress::is_well_forced(generate(FamilySpec::path(3))));
    REQUIRE(!fortress::is_well_forced(generate(FamilySpec::path(4))));
    REQUIRE(!fortress::is_well_forced(generate(FamilySpec::path(5))));
}

TEST_CASE("fast path equals enumeration on every small tree") {
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : fortress::enumerate_trees(n)) {
            bool fast = fortress::is_well_failed_tree_fastpath(t);
            oracle::Family forts = oracle::minimal_forts_naive(t);
            bool brute = true;
            for (const auto& w : forts)
                brute = brute && w.size() == forts.begin()->size();
            INFO(fortress::tree_canonical_form(t));
            REQUIRE(fast == brute);

            bool fast_forced = fortress::is_well_forced_tree_fastpath(t);
            oracle::Family zfs = oracle::minimal_zfs_naive(t);
            bool brute_forced = true;
            for (const auto& s : zfs)
                brute_forced = brute_forced && s.size() == zfs.begin()->size();
            REQUIRE(fast_forced == brute_forced);
        }
}

TEST_CASE("fast path rejects non-trees") {
    REQUIRE_THROWS_AS(fortress::is_well_failed_tree_fastpath(generate(FamilySpec::cycle(4))),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(fortress::is_well_forced_tree_fastpath(generate(FamilySpec::cycle(4))),
                      std::invalid_argument);
}

TEST_CASE("disconnected graphs classify by enumeration only") {
    Graph two_edges(4, {{0, 1}, {2, 3}});
    Classification c = fortress::is_well_failed(two_edges);
    REQUIRE(c.method == ClassifyMethod::bruteforce);
    REQUIRE(c.well_failed);  // every minimal fort is one of the two edges
}

TEST_CASE("oversized non-trees are refused, oversized trees fall back") {
    Graph big_cycle = generate(FamilySpec::cycle(25));
    REQUIRE_THROWS_AS(fortress::is_well_failed(big_cycle), fortress::GuardExceeded);
    Graph big_path = generate(FamilySpec::path(40));
    Classification c = fortress::is_well_failed(big_path);
    REQUIRE(c.method == ClassifyMethod::tree_fastpath);
    REQUIRE(!c.well_failed);
    REQUIRE(!c.well_forced);
}

TEST_CASE("classification agrees with the size collapse identity") {
    for (const auto& [name, g] : fortress::family_corpus()) {
        if (g.order() > 12) continue;
        std::vector<VertexSet> forts = fortress::minimal_fort_family(g);
        int max_size = 0;
        for (const VertexSet& w : forts) max_size = std::max(max_size, w.size());
        bool collapse =
            g.order() - fortress::failed_zero_forcing_number(g) == max_size;
        INFO(name);
        REQUIRE(fortress::is_well_failed(g).well_failed == collapse);
    }
}
