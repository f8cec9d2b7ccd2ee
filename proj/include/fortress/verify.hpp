#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "fortress/classify.hpp"
#include "fortress/corpus.hpp"
#include "fortress/graph6.hpp"

namespace fortress {

/// Corpus sizes, seed, and parallelism for verify_corpus.
struct VerifyOptions {
    int trees_max = 9;               ///< exhaustive tree corpus bound
    int random_trees = 500;          ///< seeded random trees
    int random_tree_min = 10;        ///< smallest random tree order
    int random_tree_max = 14;        ///< largest random tree order
    int random_graphs = 200;         ///< seeded random graphs
    int random_graph_max = 7;        ///< largest random graph order
    int construction_samples = 200;  ///< samples per coloring constructor
    std::uint64_t seed = 0;
    int jobs = 1;
    int guard = kDefaultExactGuard;
};

/// Outcome of one named property check.
struct CheckResult {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures;  ///< "name [graph6]: what went wrong"
    bool passed() const { return failures.empty(); }
};

/// Results of a whole verification run.
struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.passed(); });
    }
    int total_cases() const {
        int total = 0;
        for (const CheckResult& c : checks) total += c.cases;
        return total;
    }
    int total_failures() const {
        int total = 0;
        for (const CheckResult& c : checks) total += static_cast<int>(c.failures.size());
        return total;
    }
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string graph_tag(const NamedGraph& ng) {
    return ng.name + " [" + to_graph6(ng.graph) + "]";
}

/// Runs fn(item, failures) over the items, optionally across jobs threads;
/// failures are merged in item order, so the report is deterministic.
template <typename Fn>
void run_over(CheckResult& check, const std::vector<NamedGraph>& items, int jobs, Fn fn) {
    check.cases += static_cast<int>(items.size());
    std::vector<std::vector<std::string>> fails(items.size());
    auto run_one = [&](std::size_t i) {
        try {
            fn(items[i], fails[i]);
        } catch (const std::exception& e) {
            fails[i].push_back(graph_tag(items[i]) + ": exception: " + e.what());
        }
    };
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int workers = std::min<int>(jobs, static_cast<int>(items.size()));
        for (int j = 0; j < workers; ++j)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= items.size()) return;
                    run_one(i);
                }
            });
        for (std::thread& th : pool) th.join();
    }
    for (std::vector<std::string>& f : fails)
        check.failures.insert(check.failures.end(), f.begin(), f.end());
}

/// Closure computed by firing one arbitrarily chosen legal force at a time.
template <typename Rng>
VertexSet closure_randomized(const Graph& g, VertexSet blue, Rng& rng) {
    for (;;) {
        std::vector<int> targets;
        blue.for_each([&](int v) {
            int white = -1, count = 0;
            for (int u : g.neighbors(v))
                if (!blue.contains(u)) {
                    white = u;
                    ++count;
                }
            if (count == 1) targets.push_back(white);
        });
        if (targets.empty()) return blue;
        std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
        blue.insert(targets[pick(rng)]);
    }
}

inline bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

inline std::vector<int> leaves_of(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

/// True when v is a pendant sharing its neighbor with another pendant.
inline bool in_double_pendant(const Graph& g, int v) {
    if (g.degree(v) != 1) return false;
    int c = g.neighbors(v)[0];
    for (int u : g.neighbors(c))
        if (u != v && g.degree(u) == 1) return true;
    return false;
}

/// Members of `sets` with no proper superset in `sets`, canonically sorted.
inline std::vector<VertexSet> maximal_members(const std::vector<VertexSet>& sets) {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
            dominated = i != j && sets[i].is_subset_of(sets[j]) && !(sets[i] == sets[j]);
        if (!dominated) out.push_back(sets[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
    return out;
}

/// Members of `sets` with no proper subset in `sets`, canonically sorted.
inline std::vector<VertexSet> minimal_members(const std::vector<VertexSet>& sets) {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
            dominated = i != j && sets[j].is_subset_of(sets[i]) && !(sets[i] == sets[j]);
        if (!dominated) out.push_back(sets[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
    return out;
}

inline std::vector<VertexSet> canonical_sorted(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
    return sets;
}

/// Checks the fort-path post-conditions; returns an empty string on success.
inline std::string fort_path_defect(const Graph& t, const VertexSet& w, int x,
                                    const std::vector<int>& path) {
    if (path.empty()) return "empty path";
    std::vector<char> seen(static_cast<std::size_t>(t.order()), 0);
    for (int v : path) {
        if (v < 0 || v >= t.order()) return "vertex out of range";
        if (seen[static_cast<std::size_t>(v)]) return "repeated vertex";
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!t.has_edge(path[i], path[i + 1])) return "consecutive vertices not adjacent";
    if (std::find(path.begin(), path.end(), x) == path.end())
        return "path misses the requested vertex";
    if (!w.contains(path.front()) || !w.contains(path.back()))
        return "endpoint outside the fort";
    if (t.degree(path.front()) != 1 || t.degree(path.back()) != 1)
        return "endpoint is not a leaf";
    for (std::size_t i = 0; i < path.size(); ++i)
        if (!w.contains(path[i]) &&
            (!w.contains(path[i - 1]) || !w.contains(path[i + 1])))
            return "non-fort vertex lacks fort neighbors on both sides";
    return {};
}

/// True when every set in the family has the same cardinality.
inline bool sizes_uniform(const std::vector<VertexSet>& family) {
    for (const VertexSet& s : family)
        if (s.size() != family.front().size()) return false;
    return true;
}

}  // namespace detail

/// Runs every theorem/property suite over generated corpora and reports
/// structured pass/fail results with graph6 counterexamples.
inline VerifyReport verify_corpus(const VerifyOptions& opts = {}) {
    VerifyReport report;
    std::mt19937_64 rng(opts.seed);
    const int guard = opts.guard;
    const int exact = detail::effective_guard(guard);

    // --- corpora (generated up front with one seeded stream) ---
    std::vector<NamedGraph> families = family_corpus();
    std::vector<NamedGraph> trees = tree_corpus(opts.trees_max);
    std::vector<NamedGraph> rnd_trees = random_tree_corpus(
        opts.random_trees, opts.random_tree_min, opts.random_tree_max, rng);
    std::vector<NamedGraph> rnd_graphs =
        random_graph_corpus(opts.random_graphs, opts.random_graph_max, rng);

    std::vector<NamedGraph> all_graphs;
    for (const auto* src : {&families, &trees, &rnd_trees, &rnd_graphs})
        all_graphs.insert(all_graphs.end(), src->begin(), src->end());

    std::vector<NamedGraph> small7;
    for (const NamedGraph& ng : all_graphs)
        if (ng.graph.order() <= 7) small7.push_back(ng);

    std::vector<NamedGraph> tree_items = trees;
    tree_items.insert(tree_items.end(), rnd_trees.begin(), rnd_trees.end());

    std::vector<NamedGraph> dpf_trees;
    for (const NamedGraph& ng : trees)
        if (!has_double_pendant(ng.graph)) dpf_trees.push_back(ng);
    {
        int lo = std::max(4, opts.random_tree_min);
        int hi = std::max(lo, opts.random_tree_max);
        std::uniform_int_distribution<int> pick_n(lo, hi);
        for (int i = 0; i < 60; ++i)
            dpf_trees.push_back({"random-dpf-tree-" + std::to_string(i),
                                 random_double_pendant_free_tree(pick_n(rng), rng)});
    }

    // --- graph6-roundtrip: identity on families up to n = 60 ---
    {
        CheckResult check{"graph6-roundtrip", 0, {}};
        std::vector<NamedGraph> items;
        for (int n = 1; n <= 60; ++n)
            items.push_back({"path-" + std::to_string(n), generate(FamilySpec::path(n))});
        for (int n = 3; n <= 60; ++n)
            items.push_back({"cycle-" + std::to_string(n), generate(FamilySpec::cycle(n))});
        for (int n = 1; n <= 30; ++n)
            items.push_back({"complete-" + std::to_string(n), generate(FamilySpec::complete(n))});
        for (int m = 1; m <= 6; ++m)
            for (int n = m; n <= 6; ++n)
                items.push_back({"bipartite-" + std::to_string(m) + "-" + std::to_string(n),
                                 generate(FamilySpec::complete_bipartite(m, n))});
        items.push_back({"bipartite-30-30", generate(FamilySpec::complete_bipartite(30, 30))});
        items.push_back({"star-59", generate(FamilySpec::star(59))});
        items.push_back({"gen-star-5-7-9", generate(FamilySpec::generalized_star({5, 7, 9}))});
        items.push_back({"double-star-8-9-10-11",
                         generate(FamilySpec::double_generalized_star({8, 9}, {10, 11}))});
        for (const NamedGraph& ng : families) items.push_back(ng);
        for (std::size_t i = 0; i < rnd_graphs.size() && i < 50; ++i)
            items.push_back(rnd_graphs[i]);
        detail::run_over(check, items, opts.jobs, [](const NamedGraph& ng, auto& fail) {
            std::string enc = to_graph6(ng.graph);
            Graph back = parse_graph6(enc);
            if (!(back == ng.graph))
                fail.push_back(detail::graph_tag(ng) + ": graph6 round trip changed the graph");
            else if (to_graph6(back) != enc)
                fail.push_back(detail::graph_tag(ng) + ": graph6 re-encoding differs");
        });
        report.checks.push_back(std::move(check));
    }

    // --- tree-census: enumerate_trees matches the known counts ---
    {
        CheckResult check{"tree-census", 0, {}};
        static constexpr int kCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
        int limit = std::min(opts.trees_max, 10);
        for (int n = 1; n <= limit; ++n) {
            ++check.cases;
            std::vector<Graph> ts = enumerate_trees(n);
            if (static_cast<int>(ts.size()) != kCounts[n - 1])
                check.failures.push_back("enumerate_trees(" + std::to_string(n) + ") returned " +
                                         std::to_string(ts.size()) + ", expected " +
                                         std::to_string(kCounts[n - 1]));
            std::set<std::string> forms;
            for (const Graph& t : ts) {
                if (!is_tree(t))
                    check.failures.push_back("enumerate_trees(" + std::to_string(n) +
                                             ") produced a non-tree [" + to_graph6(t) + "]");
                forms.insert(tree_canonical_form(t));
            }
            if (forms.size() != ts.size())
                check.failures.push_back("enumerate_trees(" + std::to_string(n) +
                                         ") produced isomorphic duplicates");
        }
        report.checks.push_back(std::move(check));
    }

    // --- family-shapes: structural sanity of the generators ---
    {
        CheckResult check{"family-shapes", 0, {}};
        auto expect = [&](bool ok, const std::string& what) {
            ++check.cases;
            if (!ok) check.failures.push_back(what);
        };
        for (int n = 2; n <= 60; ++n)
            expect(static_cast<int>(detail::leaves_of(generate(FamilySpec::path(n))).size()) == 2,
                   "path-" + std::to_string(n) + " does not have exactly 2 leaves");
        {
            Graph s = generate(FamilySpec::star222());
            std::vector<int> degs;
            for (int v = 0; v < s.order(); ++v) degs.push_back(s.degree(v));
            std::sort(degs.begin(), degs.end());
            expect(degs == std::vector<int>{1, 1, 1, 2, 2, 2, 3},
                   "star222 degree multiset is not {3,2,2,2,1,1,1}");
            expect(tree_shape(s).tag == ShapeTag::star222, "star222 shape tag mismatch");
        }
        {
            Graph p = generate(FamilySpec::petersen());
            bool cubic = p.order() == 10 && p.edge_count() == 15;
            for (int v = 0; v < p.order(); ++v) cubic = cubic && p.degree(v) == 3;
            expect(cubic, "petersen is not 3-regular on 10 vertices");
        }
        for (int n = 1; n <= 8; ++n)
            expect(generate(FamilySpec::complete(n)).edge_count() == n * (n - 1) / 2,
                   "complete-" + std::to_string(n) + " edge count wrong");
        expect(tree_shape(generate(FamilySpec::path(5))).tag == ShapeTag::path,
               "path-5 shape tag mismatch");
        expect(tree_shape(generate(FamilySpec::generalized_star({2, 2, 3}))).tag ==
                   ShapeTag::generalized_star,
               "gen-star-2-2-3 shape tag mismatch");
        expect(tree_shape(generate(FamilySpec::double_generalized_star({2, 2}, {2, 2}))).tag ==
                   ShapeTag::double_generalized_star,
               "double-star-22-22 shape tag mismatch");
        expect(tree_shape(sample_star_removal_tree()).tag == ShapeTag::other,
               "star-removal fixture shape tag mismatch");
        expect(is_leafy(sample_leafy_graph()), "leafy fixture is not leafy");
        expect(!is_leafy(sample_star_removal_tree()), "star-removal fixture demands leafy=false");
        report.checks.push_back(std::move(check));
    }

    // --- closure-laws: extensivity, idempotence, monotonicity, order freedom ---
    {
        CheckResult check{"closure-laws", 0, {}};
        std::vector<NamedGraph> items = families;
        items.insert(items.end(), rnd_graphs.begin(), rnd_graphs.end());
        for (std::size_t i = 0; i < rnd_trees.size() && i < 100; ++i)
            items.push_back(rnd_trees[i]);
        detail::run_over(check, items, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            int n = g.order();
            std::mt19937_64 local(detail::fnv1a(ng.name, opts.seed));
            std::bernoulli_distribution flip(0.5);
            for (int round = 0; round < 20; ++round) {
                VertexSet s(n);
                for (int v = 0; v < n; ++v)
                    if (flip(local)) s.insert(v);
                ClosureTrace trace = closure(g, s);
                const VertexSet& cl = trace.final_blue;
                if (!s.is_subset_of(cl))
                    fail.push_back(detail::graph_tag(ng) + ": closure is not extensive");
                if (!(closure(g, cl).final_blue == cl))
                    fail.push_back(detail::graph_tag(ng) + ": closure is not idempotent");
                VertexSet t = s;
                for (int v = 0; v < n; ++v)
                    if (flip(local)) t.insert(v);
                if (!cl.is_subset_of(closure(g, t).final_blue))
                    fail.push_back(detail::graph_tag(ng) + ": closure is not monotone");
                for (int rep = 0; rep < 2; ++rep)
                    if (!(detail::closure_randomized(g, s, local) == cl))
                        fail.push_back(detail::graph_tag(ng) +
                                       ": closure depends on force order");
                // Replay the trace: every recorded force must be legal in turn.
                VertexSet replay = s;
                bool legal = true;
                for (auto [v, u] : trace.forces) {
                    int whites = 0;
                    bool hits = false;
                    for (int w : g.neighbors(v))
                        if (!replay.contains(w)) {
                            ++whites;
                            hits = hits || w == u;
                        }
                    legal = legal && replay.contains(v) && whites == 1 && hits;
                    replay.insert(u);
                }
                if (!legal || !(replay == cl))
                    fail.push_back(detail::graph_tag(ng) + ": force trace does not replay");
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- fort-complement: w fort ⇔ complement stalled or w = V (all subsets, n ≤ 7) ---
    {
        CheckResult check{"fort-complement", 0, {}};
        detail::run_over(check, small7, opts.jobs, [](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            int n = g.order();
            VertexSet full = VertexSet::full(n);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet w = detail::set_of(mask, n);
                bool lhs = is_fort(g, w);
                bool rhs = w == full || is_stalled(g, w.complement());
                if (lhs != rhs) {
                    fail.push_back(detail::graph_tag(ng) + ": fort/stalled mismatch at " +
                                   w.to_string());
                    return;
                }
                if (is_failed(g, w) == is_zero_forcing_set(g, w)) {
                    fail.push_back(detail::graph_tag(ng) + ": failed/forcing overlap at " +
                                   w.to_string());
                    return;
                }
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- equivalence-lemma: maximal failed = maximal stalled = fort complements ---
    {
        CheckResult check{"equivalence-lemma", 0, {}};
        detail::run_over(check, small7, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            int n = g.order();
            std::vector<VertexSet> failed, stalled, forts;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet s = detail::set_of(mask, n);
                if (is_failed(g, s)) failed.push_back(s);
                if (is_stalled(g, s)) stalled.push_back(s);
                if (is_fort(g, s)) forts.push_back(s);
            }
            std::vector<VertexSet> max_failed = detail::maximal_members(failed);
            std::vector<VertexSet> max_stalled = detail::maximal_members(stalled);
            std::vector<VertexSet> min_forts = detail::minimal_members(forts);
            std::vector<VertexSet> fort_complements;
            for (const VertexSet& w : min_forts) fort_complements.push_back(w.complement());
            fort_complements = detail::canonical_sorted(std::move(fort_complements));
            if (!(max_failed == max_stalled))
                fail.push_back(detail::graph_tag(ng) + ": maximal failed != maximal stalled");
            if (!(max_failed == fort_complements))
                fail.push_back(detail::graph_tag(ng) +
                               ": maximal failed != minimal fort complements");
            if (!(minimal_fort_family(g, guard) == min_forts))
                fail.push_back(detail::graph_tag(ng) +
                               ": minimal_fort_family differs from subset scan");
            if (!(maximal_failed_sets(g, guard) == max_failed))
                fail.push_back(detail::graph_tag(ng) +
                               ": maximal_failed_sets differs from subset scan");
        });
        report.checks.push_back(std::move(check));
    }

    // --- parameter-identity: F + min fort size = n, against direct search ---
    {
        CheckResult check{"parameter-identity", 0, {}};
        detail::run_over(check, all_graphs, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            int n = g.order();
            if (n > exact) return;
            int f = failed_zero_forcing_number(g, guard);
            int mf = minimum_fort_size(g, guard);
            if (f + mf != n)
                fail.push_back(detail::graph_tag(ng) + ": F + min fort size != n");
            if (n <= 14) {
                detail::MaskGraph mg(g);
                int best = -1;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
                    if (detail::closure_mask(mg, mask) != mg.all)
                        best = std::max(best, static_cast<int>(std::popcount(mask)));
                if (best != f)
                    fail.push_back(detail::graph_tag(ng) +
                                   ": F differs from direct maximum failed search");
                int z = zero_forcing_number(g, guard);
                int zbest = n;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
                    if (detail::closure_mask(mg, mask) == mg.all)
                        zbest = std::min(zbest, static_cast<int>(std::popcount(mask)));
                if (z != zbest)
                    fail.push_back(detail::graph_tag(ng) +
                                   ": Z differs from direct minimum search");
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- zfs-duality: direct minimal ZFS = minimal covers of minimal forts ---
    {
        CheckResult check{"zfs-duality", 0, {}};
        detail::run_over(check, all_graphs, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            if (g.order() > exact) return;
            std::vector<VertexSet> direct =
                detail::canonical_sorted(minimal_zero_forcing_sets(g, guard));
            std::vector<VertexSet> covers =
                detail::canonical_sorted(minimal_zero_forcing_sets_by_cover(g, guard));
            if (!(direct == covers)) {
                fail.push_back(detail::graph_tag(ng) + ": direct and cover ZFS families differ");
                return;
            }
            std::vector<VertexSet> forts = minimal_fort_family(g, guard);
            for (const VertexSet& s : direct)
                for (const VertexSet& w : forts)
                    if (!s.intersects(w)) {
                        fail.push_back(detail::graph_tag(ng) +
                                       ": minimal ZFS misses a minimal fort");
                        return;
                    }
            if (!direct.empty() &&
                direct.front().size() != zero_forcing_number(g, guard))
                fail.push_back(detail::graph_tag(ng) + ": Z != smallest minimal ZFS");
        });
        report.checks.push_back(std::move(check));
    }

    // --- irrelevance-agreement: fort-irrelevant = zero-forcing-irrelevant ---
    {
        CheckResult check{"irrelevance-agreement", 0, {}};
        detail::run_over(check, all_graphs, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            if (g.order() > exact) return;
            if (!(irrelevant_vertices(g, IrrelevanceKind::fort, guard) ==
                  irrelevant_vertices(g, IrrelevanceKind::zero_forcing, guard)))
                fail.push_back(detail::graph_tag(ng) +
                               ": fort and zero-forcing irrelevance differ");
        });
        report.checks.push_back(std::move(check));
    }

    // --- universal-fort-vertices: path endpoints, empty otherwise ---
    {
        CheckResult check{"universal-fort-vertices", 0, {}};
        detail::run_over(check, all_graphs, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            int n = g.order();
            if (n > exact) return;
            VertexSet universal = universal_fort_vertices(g, guard);
            VertexSet expected(n);
            if (detail::is_path_graph(g))
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) <= 1) expected.insert(v);
            if (!(universal == expected))
                fail.push_back(detail::graph_tag(ng) + ": universal fort vertices are " +
                               universal.to_string() + ", expected " + expected.to_string());
            if (!(irrelevant_vertices(g, IrrelevanceKind::failed_zero_forcing, guard) ==
                  universal))
                fail.push_back(detail::graph_tag(ng) +
                               ": failed-zf irrelevance != universal fort vertices");
        });
        report.checks.push_back(std::move(check));
    }

    // --- star-centers: residual fixed point; centers vs fort irrelevance ---
    {
        CheckResult check{"star-centers", 0, {}};
        detail::run_over(check, all_graphs, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            StarDecomposition dec = star_centers(g);
            auto [residual_graph, old_of_new] = induced_subgraph(g, dec.final_residual);
            if (!star_centers(residual_graph).all_centers.empty())
                fail.push_back(detail::graph_tag(ng) + ": star removal is not idempotent");
            VertexSet centers(g.order());
            for (const StarLayer& layer : dec.layers) centers |= layer.centers;
            if (!(centers == dec.all_centers))
                fail.push_back(detail::graph_tag(ng) + ": all_centers != union of layers");
            if (g.order() <= exact) {
                VertexSet irrelevant = irrelevant_vertices(g, IrrelevanceKind::fort, guard);
                if (!dec.all_centers.is_subset_of(irrelevant))
                    fail.push_back(detail::graph_tag(ng) +
                                   ": a star center is in some minimal fort");
                if (is_tree(g) && !(dec.all_centers == irrelevant))
                    fail.push_back(detail::graph_tag(ng) +
                                   ": tree fort-irrelevance != star centers");
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- star-removal-irrelevance: one round preserves fort irrelevance ---
    {
        CheckResult check{"star-removal-irrelevance", 0, {}};
        std::vector<NamedGraph> items = trees;
        items.push_back({"star-removal-tree", sample_star_removal_tree()});
        for (std::size_t i = 0; i < rnd_trees.size() && i < 100; ++i)
            items.push_back(rnd_trees[i]);
        detail::run_over(check, items, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& g = ng.graph;
            if (g.order() > exact) return;
            StarDecomposition dec = star_centers(g);
            if (dec.layers.empty()) return;
            auto [rest, old_of_new] = induced_subgraph(g, dec.layers[0].residual);
            if (rest.order() == 0) return;
            VertexSet before = irrelevant_vertices(g, IrrelevanceKind::fort, guard);
            VertexSet after = irrelevant_vertices(rest, IrrelevanceKind::fort, guard);
            for (std::size_t i = 0; i < old_of_new.size(); ++i)
                if (after.contains(static_cast<int>(i)) != before.contains(old_of_new[i])) {
                    fail.push_back(detail::graph_tag(ng) +
                                   ": star removal changed irrelevance of vertex " +
                                   std::to_string(old_of_new[i]));
                    return;
                }
        });
        report.checks.push_back(std::move(check));
    }

    // --- no-double-pendant-trees: every vertex in a fort; leaf-to-leaf works ---
    {
        CheckResult check{"no-double-pendant-trees", 0, {}};
        detail::run_over(check, dpf_trees, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& t = ng.graph;
            int n = t.order();
            if (n > exact) return;
            if (!irrelevant_vertices(t, IrrelevanceKind::fort, guard).empty())
                fail.push_back(detail::graph_tag(ng) +
                               ": vertex in no minimal fort despite no double pendants");
            if (n >= 3)
                for (const VertexSet& w : minimal_fort_family(t, guard))
                    if (w.size() < 3) {
                        fail.push_back(detail::graph_tag(ng) + ": minimal fort " +
                                       w.to_string() + " smaller than 3");
                        break;
                    }
            std::vector<int> leaves = detail::leaves_of(t);
            for (std::size_t i = 0; i < leaves.size(); ++i)
                for (std::size_t j = i + 1; j < leaves.size(); ++j) {
                    VertexSet w = leaf_to_leaf_fort(t, leaves[i], leaves[j]);
                    if (!w.contains(leaves[i]) || !w.contains(leaves[j]))
                        fail.push_back(detail::graph_tag(ng) +
                                       ": leaf-to-leaf fort misses a requested leaf");
                    else if (!is_minimal_fort(t, w))
                        fail.push_back(detail::graph_tag(ng) + ": leaf-to-leaf set " +
                                       w.to_string() + " is not a minimal fort");
                }
        });
        report.checks.push_back(std::move(check));
    }

    // --- fort-size-corollary: member outside a double pendant forces size ≥ 3 ---
    {
        CheckResult check{"fort-size-corollary", 0, {}};
        std::vector<NamedGraph> items;
        for (const NamedGraph& ng : trees)
            if (ng.graph.order() >= 3) items.push_back(ng);
        for (std::size_t i = 0; i < rnd_trees.size() && i < 100; ++i)
            items.push_back(rnd_trees[i]);
        detail::run_over(check, items, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& t = ng.graph;
            if (t.order() > exact) return;
            for (const VertexSet& w : minimal_fort_family(t, guard)) {
                if (w.size() >= 3) continue;
                bool ok = true;
                w.for_each([&](int v) { ok = ok && detail::in_double_pendant(t, v); });
                if (!ok) {
                    fail.push_back(detail::graph_tag(ng) + ": small minimal fort " +
                                   w.to_string() + " has a non-double-pendant member");
                    return;
                }
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- fort-paths: leaf-to-leaf path through every fort member ---
    {
        CheckResult check{"fort-paths", 0, {}};
        std::vector<NamedGraph> items;
        for (const NamedGraph& ng : trees)
            if (ng.graph.order() >= 2) items.push_back(ng);
        for (const NamedGraph& ng : dpf_trees)
            if (ng.graph.order() >= 2) items.push_back(ng);
        items.push_back({"star-removal-tree", sample_star_removal_tree()});
        detail::run_over(check, items, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& t = ng.graph;
            if (t.order() > exact) return;
            std::vector<VertexSet> forts = minimal_fort_family(t, guard);
            forts.push_back(t.vertex_set());  // the whole vertex set is a fort too
            for (const VertexSet& w : forts) {
                std::string defect;
                w.for_each([&](int x) {
                    if (!defect.empty()) return;
                    defect = detail::fort_path_defect(t, w, x, fort_spanning_path(t, w, x));
                });
                if (!defect.empty()) {
                    fail.push_back(detail::graph_tag(ng) + ": fort " + w.to_string() + ": " +
                                   defect);
                    return;
                }
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- constructions: every coloring constructor yields minimal forts ---
    {
        CheckResult check{"constructions", 0, {}};
        auto expect_minimal = [&](const Graph& g, const VertexSet& w, const std::string& what) {
            ++check.cases;
            if (!is_minimal_fort(g, w))
                check.failures.push_back(what + " [" + to_graph6(g) + "]: " + w.to_string() +
                                         " is not a minimal fort");
        };
        for (int i = 0; i < opts.construction_samples; ++i) {
            // Standard path coloring on a randomly relabeled path, both ends.
            int n = i % 16 + 1;
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (int j = 0; j + 1 < n; ++j) edges.emplace_back(perm[j], perm[j + 1]);
            Graph p(n, edges);
            int start = i % 2 == 0 ? -1 : perm[static_cast<std::size_t>(n) - 1];
            expect_minimal(p, standard_path_fort(p, start), "standard-path");
        }
        for (int i = 0; i < opts.construction_samples; ++i) {
            // Standard coloring on two legs sharing an attachment vertex.
            Graph t = i % 2 == 0 ? random_generalized_star(rng)
                                 : random_double_generalized_star(rng);
            if (t.order() > 16) {
                --i;  // resample; generators stay within bounds most draws
                continue;
            }
            std::vector<std::vector<int>> legs;
            for (int leaf : detail::leaves_of(t))
                legs.push_back(pendent_leg_of_leaf(t, leaf));
            std::shuffle(legs.begin(), legs.end(), rng);
            bool done = false;
            for (std::size_t a = 0; a < legs.size() && !done; ++a)
                for (std::size_t b = a + 1; b < legs.size() && !done; ++b)
                    if (detail::attach_vertex(t, legs[a]) ==
                        detail::attach_vertex(t, legs[b])) {
                        expect_minimal(t, standard_two_leg_fort(t, legs[a], legs[b]),
                                       "standard-two-leg");
                        done = true;
                    }
            if (!done) {
                ++check.cases;
                check.failures.push_back("standard-two-leg [" + to_graph6(t) +
                                         "]: no two legs share an attachment");
            }
        }
        for (int i = 0; i < opts.construction_samples; ++i) {
            Graph t = i % 10 == 0 ? generate(FamilySpec::star222())
                                  : random_generalized_star(rng);
            if (t.order() > 16) {
                --i;
                continue;
            }
            VertexSet adj = adjusted_fort(t);
            expect_minimal(t, adj, "adjusted");
            TreeShape shape = tree_shape(t);
            if (shape.tag == ShapeTag::generalized_star) {
                // The standard coloring on the two shortest legs is strictly
                // smaller, which is what makes these stars not well-failed.
                std::vector<std::vector<int>> legs = shape.stars[0].legs;
                std::sort(legs.begin(), legs.end(),
                          [](const auto& a, const auto& b) { return a.size() < b.size(); });
                VertexSet two = standard_two_leg_fort(t, legs[0], legs[1]);
                ++check.cases;
                if (two.size() >= adj.size())
                    check.failures.push_back("adjusted [" + to_graph6(t) +
                                             "]: adjusted fort is not strictly larger");
            }
        }
        for (int i = 0; i < opts.construction_samples; ++i) {
            Graph t = random_double_generalized_star(rng);
            if (t.order() > 16) {
                --i;
                continue;
            }
            expect_minimal(t, adjusted_pgs_fort(t), "adjusted-pgs");
        }
        {
            std::uniform_int_distribution<int> pick_n(4, 16);
            for (int i = 0; i < opts.construction_samples; ++i) {
                Graph t = random_double_pendant_free_tree(pick_n(rng), rng);
                std::vector<int> leaves = detail::leaves_of(t);
                std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
                std::size_t a = pick(rng), b = pick(rng);
                while (b == a) b = pick(rng);
                VertexSet w = leaf_to_leaf_fort(t, leaves[a], leaves[b]);
                expect_minimal(t, w, "leaf-to-leaf");
                ++check.cases;
                if (!w.contains(leaves[a]) || !w.contains(leaves[b]))
                    check.failures.push_back("leaf-to-leaf [" + to_graph6(t) +
                                             "]: fort misses a requested leaf");
            }
        }
        report.checks.push_back(std::move(check));
    }

    // --- tree-theorem: classifier fast path agrees with enumeration ---
    {
        CheckResult check{"tree-theorem", 0, {}};
        detail::run_over(check, tree_items, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& t = ng.graph;
            if (t.order() > exact) return;
            Classification c = is_well_failed(t, guard);
            if (c.method != ClassifyMethod::both_agree) {
                fail.push_back(detail::graph_tag(ng) + ": tree was not cross-checked");
                return;
            }
            if (!c.well_failed) {
                if (c.fort_witnesses.size() != 2 ||
                    c.fort_witnesses[0].size() == c.fort_witnesses[1].size() ||
                    !is_minimal_fort(t, c.fort_witnesses[0]) ||
                    !is_minimal_fort(t, c.fort_witnesses[1]))
                    fail.push_back(detail::graph_tag(ng) + ": bad fort witnesses");
            } else if (!c.fort_witnesses.empty()) {
                fail.push_back(detail::graph_tag(ng) + ": witnesses on a well-failed tree");
            }
        });
        report.checks.push_back(std::move(check));
    }

    // --- well-forced-rule: K_2 residual rule matches enumeration ---
    {
        CheckResult check{"well-forced-rule", 0, {}};
        detail::run_over(check, tree_items, opts.jobs, [&](const NamedGraph& ng, auto& fail) {
            const Graph& t = ng.graph;
            if (t.order() > exact) return;
            bool rule = is_well_forced_tree_fastpath(t);
            std::vector<VertexSet> zfs = minimal_zero_forcing_sets(t, guard);
            bool brute = detail::sizes_uniform(zfs);
            if (rule != brute) {
                fail.push_back(detail::graph_tag(ng) + ": residual rule says " +
                               (rule ? "well-forced" : "not well-forced") +
                               " but enumeration disagrees");
                return;
            }
            // A well-failed tree that is neither a path nor star222 is well-forced.
            bool well_failed = detail::sizes_uniform(minimal_fort_family(t, guard));
            ShapeTag tag = tree_shape(t).tag;
            if (well_failed && tag != ShapeTag::path && tag != ShapeTag::star222 && !brute)
                fail.push_back(detail::graph_tag(ng) +
                               ": well-failed non-path tree is not well-forced");
        });
        report.checks.push_back(std::move(check));
    }

    // --- family-laws: the classification theorems on named families ---
    {
        CheckResult check{"family-laws", 0, {}};
        auto expect = [&](bool ok, const std::string& what) {
            ++check.cases;
            if (!ok) check.failures.push_back(what);
        };
        for (int n = 1; n <= 12; ++n) {
            bool want = n <= 4 || n == 6;
            Classification c = is_well_failed(generate(FamilySpec::path(n)), guard);
            expect(c.well_failed == want && c.method == ClassifyMethod::both_agree,
                   "path-" + std::to_string(n) + " classification wrong");
        }
        for (int n = 3; n <= 12; ++n) {
            bool want = n <= 5 || n == 7;
            Classification c = is_well_failed(generate(FamilySpec::cycle(n)), guard);
            expect(c.well_failed == want && c.method == ClassifyMethod::bruteforce,
                   "cycle-" + std::to_string(n) + " classification wrong");
        }
        for (int n = 1; n <= 7; ++n) {
            Graph g = generate(FamilySpec::complete(n));
            std::vector<VertexSet> forts = minimal_fort_family(g, guard);
            bool ok = is_well_failed(g, guard).well_failed;
            if (n >= 2)
                ok = ok && static_cast<int>(forts.size()) == n * (n - 1) / 2 &&
                     detail::sizes_uniform(forts) && forts.front().size() == 2;
            expect(ok, "complete-" + std::to_string(n) + " fort structure wrong");
        }
        for (int m = 1; m <= 5; ++m)
            for (int n = m; n <= 5; ++n) {
                Graph g = generate(FamilySpec::complete_bipartite(m, n));
                std::vector<VertexSet> forts = minimal_fort_family(g, guard);
                int want = m + n >= 3 ? m * (m - 1) / 2 + n * (n - 1) / 2 : 1;
                expect(is_well_failed(g, guard).well_failed &&
                           static_cast<int>(forts.size()) == want &&
                           detail::sizes_uniform(forts) && forts.front().size() == 2,
                       "complete-bipartite-" + std::to_string(m) + "-" + std::to_string(n) +
                           " fort structure wrong");
            }
        {
            Graph g = generate(FamilySpec::petersen());
            expect(zero_forcing_number(g, guard) == 5, "petersen Z != 5");
            expect(failed_zero_forcing_number(g, guard) == 6, "petersen F != 6");
            std::vector<VertexSet> forts = minimal_fort_family(g, guard);
            expect(detail::sizes_uniform(forts) && forts.front().size() == 4,
                   "petersen has a minimal fort of size != 4");
            expect(is_well_failed(g, guard).well_failed, "petersen not well-failed");
        }
        {
            Graph g = generate(FamilySpec::star222());
            Classification c = is_well_failed(g, guard);
            std::vector<VertexSet> forts = minimal_fort_family(g, guard);
            expect(c.well_failed && detail::sizes_uniform(forts) && forts.front().size() == 4,
                   "star222 fort structure wrong");
            expect(!c.well_forced && c.zfs_witnesses.size() == 2,
                   "star222 should not be well-forced");
        }
        {
            Graph g = sample_leafy_graph();
            std::vector<VertexSet> forts = minimal_fort_family(g, guard);
            expect(is_well_failed(g, guard).well_failed && detail::sizes_uniform(forts) &&
                       forts.front().size() == 2,
                   "leafy fixture fort structure wrong");
        }
        for (const NamedGraph& ng : trees)
            if (is_leafy(ng.graph))
                expect(is_well_failed(ng.graph, guard).well_failed,
                       detail::graph_tag(ng) + " is leafy but not well-failed");
        {
            Graph g = sample_star_removal_tree();
            StarDecomposition dec = star_centers(g);
            expect(dec.layers.size() == 2 &&
                       dec.layers[0].centers == VertexSet::of(18, {2, 8, 15}) &&
                       dec.layers[1].centers == VertexSet::of(18, {4, 13}) &&
                       dec.final_residual == VertexSet::of(18, {5, 6}),
                   "star-removal fixture layers wrong");
            Classification c = is_well_failed(g, guard);
            expect(c.well_forced && !c.well_failed && c.method == ClassifyMethod::both_agree,
                   "star-removal fixture classification wrong");
        }
        // Well-failed agrees with both size-collapse formulations.
        for (const NamedGraph& ng : families) {
            const Graph& g = ng.graph;
            if (g.order() > exact || g.order() == 0) continue;
            std::vector<VertexSet> forts = minimal_fort_family(g, guard);
            if (forts.empty()) continue;
            bool wf = is_well_failed(g, guard).well_failed;
            int max_size = 0;
            for (const VertexSet& w : forts) max_size = std::max(max_size, w.size());
            bool collapse = g.order() - failed_zero_forcing_number(g, guard) == max_size;
            expect(wf == detail::sizes_uniform(forts) && wf == collapse,
                   detail::graph_tag(ng) + " well-failed size collapse mismatch");
        }
        report.checks.push_back(std::move(check));
    }

    return report;
}

}  // namespace fortress
