#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fortress/families.hpp"
#include "fortress/forcing.hpp"

#include "oracle.hpp"

using fortress::FamilySpec;
using fortress::Graph;
using fortress::VertexSet;

TEST_CASE("closure walks a path from one end") {
    Graph p4 = generate(FamilySpec::path(4));
    fortress::ClosureTrace trace = closure(p4, VertexSet::of(4, {0}));
    REQUIRE(trace.final_blue == VertexSet::full(4));
    REQUIRE(trace.forces ==
            std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("closure stalls when every blue vertex has two white neighbors") {
    Graph p5 = generate(FamilySpec::path(5));
    VertexSet mid = VertexSet::of(5, {2});
    REQUIRE(closure(p5, mid).final_blue == mid);
    REQUIRE(fortress::is_stalled(p5, mid));
    REQUIRE(fortress::is_failed(p5, mid));
    REQUIRE(!fortress::is_zero_forcing_set(p5, mid));
}

TEST_CASE("closure matches the naive rescan on random graphs") {
    std::mt19937_64 rng(17);
    std::bernoulli_distribution edge(0.4), member(0.5);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        std::uint32_t mask = 0;
        for (int v = 0; v < n; ++v)
            if (member(rng)) mask |= 1u << v;
        std::uint32_t want = oracle::closure_naive(g, mask);
        VertexSet blue(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) blue.insert(v);
        REQUIRE(closure(g, blue).final_blue.to_vector() ==
                oracle::members_of(want, n));
    }
}

TEST_CASE("forcing parameters on small families") {
    using fortress::failed_zero_forcing_number;
    using fortress::zero_forcing_number;
    REQUIRE(zero_forcing_number(generate(FamilySpec::path(1))) == 1);
    REQUIRE(failed_zero_forcing_number(generate(FamilySpec::path(1))) == 0);
    REQUIRE(zero_forcing_number(generate(FamilySpec::path(6))) == 1);
    REQUIRE(failed_zero_forcing_number(generate(FamilySpec::path(6))) == 2);
    REQUIRE(zero_forcing_number(generate(FamilySpec::cycle(6))) == 2);
    REQUIRE(zero_forcing_number(generate(FamilySpec::complete(5))) == 4);
    REQUIRE(failed_zero_forcing_number(generate(FamilySpec::complete(5))) == 3);
    REQUIRE(zero_forcing_number(generate(FamilySpec::petersen())) == 5);
    REQUIRE(failed_zero_forcing_number(generate(FamilySpec::petersen())) == 6);
}

TEST_CASE("parameters match the naive search everywhere small") {
    std::mt19937_64 rng(23);
    std::bernoulli_distribution edge(0.45);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng)) edges.emplace_back(u, v);
        Graph g(n, edges);
        REQUIRE(fortress::zero_forcing_number(g) == oracle::zero_forcing_number_naive(g));
        REQUIRE(fortress::failed_zero_forcing_number(g) ==
                oracle::failed_zero_forcing_number_naive(g));
        REQUIRE(fortress::failed_zero_forcing_number(g) +
                    fortress::minimum_fort_size(g) ==
                n);
    }
}

TEST_CASE("fort predicate agrees with the stalled complement") {
    Graph star = generate(FamilySpec::star222());
    for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
        VertexSet w(7);
        for (int v = 0; v < 7; ++v)
            if (mask >> v & 1u) w.insert(v);
        bool direct = fortress::is_fort(star, w);
        bool via = w == VertexSet::full(7) || fortress::is_stalled(star, w.complement());
        REQUIRE(direct == via);
        REQUIRE(direct == oracle::is_fort_naive(star, mask));
    }
}

TEST_CASE("guard refuses oversized exact searches") {
    Graph big = generate(FamilySpec::path(25));
    REQUIRE_THROWS_AS(fortress::zero_forcing_number(big), fortress::GuardExceeded);
    REQUIRE_THROWS_AS(fortress::zero_forcing_number(big, 24), fortress::GuardExceeded);
    REQUIRE(fortress::zero_forcing_number(big, 30) == 1);
}

TEST_CASE("single vertex graph") {
    Graph k1 = generate(FamilySpec::complete(1));
    REQUIRE(fortress::zero_forcing_number(k1) == 1);
    REQUIRE(fortress::failed_zero_forcing_number(k1) == 0);
    REQUIRE(fortress::is_zero_forcing_set(k1, VertexSet::full(1)));
    REQUIRE(fortress::is_failed(k1, VertexSet(1)));
    REQUIRE(fortress::is_fort(k1, VertexSet::full(1)));
    REQUIRE(!fortress::is_fort(k1, VertexSet(1)));
}
