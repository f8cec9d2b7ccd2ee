// Acceptance gate: twelve pinned facts about the library, each printed as one
// PASS/FAIL line.  Exits nonzero if any line fails.  The first four carry
// hard wall-clock budgets; the rest are exact checks with no time bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fortress/report.hpp"
#include "fortress/verify.hpp"

using fortress::Classification;
using fortress::ClassifyMethod;
using fortress::FamilySpec;
using fortress::Graph;
using fortress::IrrelevanceKind;
using fortress::NamedGraph;
using fortress::VertexSet;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over budget of ") +
                  std::to_string(budget_seconds) + "s";
    }
    std::printf("%s %2d %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, label.c_str(), elapsed);
    if (!ok) {
        if (!detail.empty()) std::printf("        %s\n", detail.c_str());
        ++g_failures;
    }
}

std::vector<NamedGraph> acceptance_corpus() {
    std::vector<NamedGraph> corpus = fortress::family_corpus();
    for (NamedGraph& ng : fortress::tree_corpus(9)) corpus.push_back(std::move(ng));
    std::mt19937_64 rng(0);
    for (NamedGraph& ng : fortress::random_tree_corpus(500, 10, 14, rng))
        corpus.push_back(std::move(ng));
    for (NamedGraph& ng : fortress::random_graph_corpus(200, 7, rng))
        corpus.push_back(std::move(ng));
    return corpus;
}

bool is_path_graph(const Graph& g) {
    if (!fortress::is_tree(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

}  // namespace

int main() {
    const std::vector<NamedGraph> corpus = acceptance_corpus();

    criterion(1, "path uniformity law", 5.0, [](std::string& detail) {
        for (int n = 1; n <= 12; ++n) {
            bool want = n <= 4 || n == 6;
            if (fortress::is_well_failed(generate(FamilySpec::path(n))).well_failed != want) {
                detail = "path on " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(2, "cycle uniformity law", 5.0, [](std::string& detail) {
        for (int n = 3; n <= 12; ++n) {
            bool want = n <= 5 || n == 7;
            if (fortress::is_well_failed(generate(FamilySpec::cycle(n))).well_failed != want) {
                detail = "cycle on " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(3, "petersen parameters and fort spectrum", 10.0, [](std::string& detail) {
        Graph g = generate(FamilySpec::petersen());
        if (fortress::zero_forcing_number(g) != 5) { detail = "Z"; return false; }
        if (fortress::failed_zero_forcing_number(g) != 6) { detail = "F"; return false; }
        for (const VertexSet& w : fortress::minimal_fort_family(g))
            if (w.size() != 4) { detail = "fort " + w.to_string(); return false; }
        if (!fortress::is_well_failed(g).well_failed) { detail = "classification"; return false; }
        return true;
    });

    criterion(4, "tree rule against enumeration", 600.0, [](std::string& detail) {
        int checked = 0;
        for (int n = 1; n <= 9; ++n)
            for (const Graph& t : fortress::enumerate_trees(n)) {
                Classification c = fortress::is_well_failed(t);  // throws on disagreement
                if (c.method != ClassifyMethod::both_agree) {
                    detail = "uncrosschecked tree " + fortress::to_graph6(t);
                    return false;
                }
                ++checked;
            }
        if (checked < 94) {
            detail = "only " + std::to_string(checked) + " exhaustive trees";
            return false;
        }
        std::mt19937_64 rng(0);
        for (const NamedGraph& ng : fortress::random_tree_corpus(500, 10, 14, rng)) {
            Classification c = fortress::is_well_failed(ng.graph);
            if (c.method != ClassifyMethod::both_agree) {
                detail = ng.name;
                return false;
            }
        }
        return true;
    });

    criterion(5, "maximal failed = maximal stalled = fort complements", 0, [](std::string& detail) {
        std::vector<NamedGraph> small = fortress::family_corpus();
        std::mt19937_64 rng(0);
        for (NamedGraph& ng : fortress::random_graph_corpus(200, 7, rng))
            small.push_back(std::move(ng));
        for (const NamedGraph& ng : small) {
            const Graph& g = ng.graph;
            int n = g.order();
            if (n > 7) continue;
            std::vector<VertexSet> failed, stalled;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet s = fortress::detail::set_of(mask, n);
                if (fortress::is_failed(g, s)) failed.push_back(s);
                if (fortress::is_stalled(g, s)) stalled.push_back(s);
            }
            std::vector<VertexSet> max_failed = fortress::detail::maximal_members(failed);
            std::vector<VertexSet> max_stalled = fortress::detail::maximal_members(stalled);
            std::vector<VertexSet> complements;
            for (const VertexSet& w : fortress::minimal_fort_family(g))
                complements.push_back(w.complement());
            complements = fortress::detail::canonical_sorted(std::move(complements));
            if (!(max_failed == max_stalled) || !(max_failed == complements)) {
                detail = ng.name + " [" + fortress::to_graph6(g) + "]";
                return false;
            }
        }
        return true;
    });

    criterion(6, "fort irrelevance = forcing irrelevance (= star centers on trees)", 0,
              [&](std::string& detail) {
                  for (const NamedGraph& ng : corpus) {
                      const Graph& g = ng.graph;
                      VertexSet fort = irrelevant_vertices(g, IrrelevanceKind::fort);
                      if (!(fort == irrelevant_vertices(g, IrrelevanceKind::zero_forcing))) {
                          detail = ng.name;
                          return false;
                      }
                      if (fortress::is_tree(g) &&
                          !(fort == fortress::star_centers(g).all_centers)) {
                          detail = ng.name;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(7, "minimal forcing sets = minimal covers of minimal forts", 0,
              [&](std::string& detail) {
                  for (const NamedGraph& ng : corpus) {
                      std::vector<VertexSet> direct =
                          fortress::minimal_zero_forcing_sets(ng.graph);
                      std::vector<VertexSet> covers =
                          fortress::minimal_zero_forcing_sets_by_cover(ng.graph);
                      if (!(fortress::detail::canonical_sorted(std::move(direct)) ==
                            fortress::detail::canonical_sorted(std::move(covers)))) {
                          detail = ng.name;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(8, "failed number complements the smallest fort", 0, [&](std::string& detail) {
        for (const NamedGraph& ng : corpus) {
            const Graph& g = ng.graph;
            if (fortress::failed_zero_forcing_number(g) + fortress::minimum_fort_size(g) !=
                g.order()) {
                detail = ng.name;
                return false;
            }
        }
        return true;
    });

    criterion(9, "fort constructions are minimal forts", 0, [](std::string& detail) {
        std::mt19937_64 rng(0);
        int built = 0;
        auto fail = [&detail](const Graph& g, const char* kind) {
            detail = std::string(kind) + " on " + fortress::to_graph6(g);
            return false;
        };
        for (int i = 0; i < 200; ++i) {
            Graph t = i % 2 == 0 ? fortress::random_generalized_star(rng)
                                 : fortress::random_double_generalized_star(rng);
            if (t.order() > 16) { --i; continue; }
            std::vector<std::vector<int>> legs;
            for (int v = 0; v < t.order(); ++v)
                if (t.degree(v) == 1) legs.push_back(fortress::pendent_leg_of_leaf(t, v));
            bool done = false;
            for (std::size_t a = 0; a < legs.size() && !done; ++a)
                for (std::size_t b = a + 1; b < legs.size() && !done; ++b)
                    if (fortress::detail::attach_vertex(t, legs[a]) ==
                        fortress::detail::attach_vertex(t, legs[b])) {
                        if (!fortress::is_minimal_fort(
                                t, fortress::standard_two_leg_fort(t, legs[a], legs[b])))
                            return fail(t, "two-leg");
                        done = true;
                        ++built;
                    }
        }
        for (int i = 0; i < 200; ++i) {
            Graph t = fortress::random_generalized_star(rng);
            if (t.order() > 16) { --i; continue; }
            if (!fortress::is_minimal_fort(t, fortress::adjusted_fort(t)))
                return fail(t, "adjusted");
            ++built;
        }
        for (int i = 0; i < 200; ++i) {
            Graph t = fortress::random_double_generalized_star(rng);
            if (t.order() > 16) { --i; continue; }
            if (!fortress::is_minimal_fort(t, fortress::adjusted_pgs_fort(t)))
                return fail(t, "adjusted-pgs");
            ++built;
        }
        std::uniform_int_distribution<int> pick_n(4, 16);
        for (int i = 0; i < 200; ++i) {
            Graph t = fortress::random_double_pendant_free_tree(pick_n(rng), rng);
            std::vector<int> leaves;
            for (int v = 0; v < t.order(); ++v)
                if (t.degree(v) == 1) leaves.push_back(v);
            std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
            std::size_t a = pick(rng), b = pick(rng);
            while (b == a) b = pick(rng);
            VertexSet w = fortress::leaf_to_leaf_fort(t, leaves[a], leaves[b]);
            if (!w.contains(leaves[a]) || !w.contains(leaves[b]) ||
                !fortress::is_minimal_fort(t, w))
                return fail(t, "leaf-to-leaf");
            ++built;
        }
        if (built < 800) {
            detail = "only " + std::to_string(built) + " instances";
            return false;
        }
        return true;
    });

    criterion(10, "failed-forcing irrelevance marks path ends only", 0,
              [&](std::string& detail) {
                  for (const NamedGraph& ng : corpus) {
                      const Graph& g = ng.graph;
                      VertexSet got =
                          irrelevant_vertices(g, IrrelevanceKind::failed_zero_forcing);
                      VertexSet want(g.order());
                      if (is_path_graph(g))
                          for (int v = 0; v < g.order(); ++v)
                              if (g.degree(v) <= 1) want.insert(v);
                      if (!(got == want)) {
                          detail = ng.name;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(11, "complete and complete bipartite fort spectra", 0, [](std::string& detail) {
        for (int n = 1; n <= 7; ++n) {
            Graph g = generate(FamilySpec::complete(n));
            if (!fortress::is_well_failed(g).well_failed) {
                detail = "complete " + std::to_string(n);
                return false;
            }
            if (n >= 2)
                for (const VertexSet& w : fortress::minimal_fort_family(g))
                    if (w.size() != 2) {
                        detail = "complete " + std::to_string(n);
                        return false;
                    }
        }
        for (int m = 2; m <= 5; ++m)
            for (int n = m; n <= 5; ++n) {
                Graph g = generate(FamilySpec::complete_bipartite(m, n));
                if (!fortress::is_well_failed(g).well_failed) {
                    detail = "bipartite " + std::to_string(m) + "," + std::to_string(n);
                    return false;
                }
                for (const VertexSet& w : fortress::minimal_fort_family(g))
                    if (w.size() != 2) {
                        detail = "bipartite " + std::to_string(m) + "," + std::to_string(n);
                        return false;
                    }
            }
        return true;
    });

    criterion(12, "two-round sample tree layers and verdict", 0, [](std::string& detail) {
        Graph t = fortress::sample_star_removal_tree();
        fortress::StarDecomposition dec = fortress::star_centers(t);
        if (dec.layers.size() != 2 ||
            !(dec.layers[0].centers == VertexSet::of(18, {2, 8, 15})) ||
            !(dec.layers[1].centers == VertexSet::of(18, {4, 13})) ||
            !(dec.final_residual == VertexSet::of(18, {5, 6}))) {
            detail = "star removal layers";
            return false;
        }
        if (!fortress::is_well_failed(t).well_forced) {
            detail = "well-forced verdict";
            return false;
        }
        return true;
    });

    if (g_failures > 0) std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
