#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fortress/forcing.hpp"
#include "fortress/graph.hpp"

namespace fortress {

/// Which notion of irrelevance: a vertex is irrelevant when it lies in no
/// minimal fort / no minimal zero forcing set / no maximal failed set.
enum class IrrelevanceKind { fort, zero_forcing, failed_zero_forcing };

/// Catalog of all minimal forts plus the derived vertex classifications.
struct FortReport {
  std::vector<VertexSet> minimal_forts;  ///< canonical order (size, then members)
  int min_size = 0;
  int max_size = 0;
  VertexSet fort_irrelevant;      ///< in no minimal fort
  VertexSet zf_irrelevant;        ///< in no minimal zero forcing set
  VertexSet failed_zf_irrelevant; ///< in no maximal failed set
  VertexSet universal;            ///< in every minimal fort
};

/// Minimality via the closure criterion: w is a fort, and moving any single
/// member back to the complement makes the complement force everything.
/// Polynomial; works on graphs of any size.
inline bool is_minimal_fort(const Graph& g, const VertexSet& w) {
  if (!is_fort(g, w)) return false;
  VertexSet outside = w.complement();
  bool minimal = true;
  w.for_each([&](int x) {
    if (!minimal) return;
    VertexSet probe = outside;
    probe.insert(x);
    if (closure(g, probe).final_blue != g.vertex_set()) minimal = false;
  });
  return minimal;
}

namespace detail {

/// All minimal forts as masks, by ascending-cardinality subset scan.
/// Candidates containing a closed neighborhood N[v] with deg(v) >= 2 are
/// skipped: such a set is never a minimal fort.
inline std::vector<std::uint64_t> minimal_fort_masks(const Graph& g) {
  int n = g.order();
  MaskGraph mg(g);
  std::vector<std::uint64_t> closed;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 2)
      closed.push_back(mg.adj[static_cast<std::size_t>(v)] |
                       (std::uint64_t{1} << v));
  std::vector<std::uint64_t> out;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t w = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    std::uint64_t top = w << (n - k);
    for (;;) {
      bool pruned = false;
      for (std::uint64_t c : closed)
        if ((w & c) == c) {
          pruned = true;
          break;
        }
      if (!pruned && is_minimal_fort_mask(mg, w)) out.push_back(w);
      if (w == top) break;
      w = next_same_popcount(w);
    }
  }
  return out;
}

inline std::vector<VertexSet> sets_from_masks(const std::vector<std::uint64_t>& masks,
                                              int universe) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(set_of(m, universe));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace detail

/// Every minimal fort, in canonical order.
inline std::vector<VertexSet> minimal_fort_family(const Graph& g,
                                                  int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  if (g.order() == 0) return {};
  return detail::sets_from_masks(detail::minimal_fort_masks(g), g.order());
}

/// Maximal failed sets = complements of minimal forts.
inline std::vector<VertexSet> maximal_failed_sets(const Graph& g,
                                                  int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  std::vector<VertexSet> out;
  for (const VertexSet& w : minimal_fort_family(g, guard))
    out.push_back(w.complement());
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
  return out;
}

/// Direct enumeration of minimal zero forcing sets: S forces everything and
/// no S minus one vertex does.  Precomputes a forcing table over all masks
/// when that fits in memory.
inline std::vector<VertexSet> minimal_zero_forcing_sets(
    const Graph& g, int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  int n = g.order();
  detail::MaskGraph mg(g);
  std::vector<std::uint64_t> found;
  if (n <= 24) {
    std::vector<char> forces(std::size_t{1} << n, 0);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      forces[static_cast<std::size_t>(s)] = detail::closure_mask(mg, s) == mg.all;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      if (!forces[static_cast<std::size_t>(s)]) continue;
      bool minimal = true;
      for (std::uint64_t rest = s; rest != 0; rest &= rest - 1)
        if (forces[static_cast<std::size_t>(s & ~(rest & -rest))]) {
          minimal = false;
          break;
        }
      if (minimal) found.push_back(s);
    }
  } else {
    for (std::uint64_t s = 0;; ++s) {
      if (detail::closure_mask(mg, s) == mg.all) {
        bool minimal = true;
        for (std::uint64_t rest = s; rest != 0 && minimal; rest &= rest - 1)
          if (detail::closure_mask(mg, s & ~(rest & -rest)) == mg.all)
            minimal = false;
        if (minimal) found.push_back(s);
      }
      if (s == mg.all) break;
    }
  }
  return detail::sets_from_masks(found, n);
}

/// All minimal covers (hitting sets) of a family of vertex sets over
/// universe 0..n-1.  Branches on the first uncovered set; sibling elements
/// already branched on are banned in later branches, so each cover is
/// generated exactly once.  A final filter keeps exactly the minimal covers.
inline std::vector<VertexSet> minimal_covers(const std::vector<VertexSet>& family,
                                             int universe) {
  if (universe > 64)
    throw std::invalid_argument("minimal_covers: universe too large");
  std::vector<std::uint64_t> sets;
  sets.reserve(family.size());
  for (const VertexSet& s : family) {
    if (s.universe() != universe)
      throw std::invalid_argument("minimal_covers: universe mismatch");
    if (s.empty())
      throw std::invalid_argument("minimal_covers: empty set is uncoverable");
    sets.push_back(detail::mask_of(s));
  }

  std::vector<std::uint64_t> found;
  auto rec = [&](auto&& self, std::uint64_t chosen, std::uint64_t banned) -> void {
    std::uint64_t uncovered = 0;
    bool all_hit = true;
    for (std::uint64_t s : sets)
      if ((s & chosen) == 0) {
        uncovered = s;
        all_hit = false;
        break;
      }
    if (all_hit) {
      found.push_back(chosen);
      return;
    }
    std::uint64_t options = uncovered & ~banned;
    std::uint64_t seen = 0;
    while (options != 0) {
      std::uint64_t bit = options & -options;
      self(self, chosen | bit, banned | seen);
      seen |= bit;
      options &= options - 1;
    }
  };
  rec(rec, 0, 0);

  std::vector<std::uint64_t> minimal;
  for (std::uint64_t c : found) {
    bool ok = true;
    for (std::uint64_t rest = c; rest != 0 && ok; rest &= rest - 1) {
      std::uint64_t v = rest & -rest;
      bool witness = false;  // some set hit only through v
      for (std::uint64_t s : sets)
        if ((s & c) == v) {
          witness = true;
          break;
        }
      if (!witness) ok = false;
    }
    if (ok) minimal.push_back(c);
  }
  return detail::sets_from_masks(minimal, universe);
}

/// Cover-based enumeration of minimal zero forcing sets: the minimal covers
/// of the minimal-fort family are exactly the minimal zero forcing sets.
inline std::vector<VertexSet> minimal_zero_forcing_sets_by_cover(
    const Graph& g, int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  return minimal_covers(minimal_fort_family(g, guard), g.order());
}

namespace detail {

inline VertexSet union_of(const std::vector<VertexSet>& sets, int universe) {
  VertexSet out(universe);
  for (const VertexSet& s : sets) out |= s;
  return out;
}

inline VertexSet intersection_of(const std::vector<VertexSet>& sets, int universe) {
  if (sets.empty()) return VertexSet(universe);
  VertexSet out = VertexSet::full(universe);
  for (const VertexSet& s : sets) out &= s;
  return out;
}

}  // namespace detail

/// Vertices in every minimal fort.  Nonempty only on paths (the endpoints).
inline VertexSet universal_fort_vertices(const Graph& g,
                                         int guard = kDefaultExactGuard) {
  return detail::intersection_of(minimal_fort_family(g, guard), g.order());
}

/// Vertices outside every set of the requested kind.
inline VertexSet irrelevant_vertices(const Graph& g, IrrelevanceKind kind,
                                     int guard = kDefaultExactGuard) {
  switch (kind) {
    case IrrelevanceKind::fort:
      return detail::union_of(minimal_fort_family(g, guard), g.order()).complement();
    case IrrelevanceKind::zero_forcing:
      return detail::union_of(minimal_zero_forcing_sets(g, guard), g.order())
          .complement();
    case IrrelevanceKind::failed_zero_forcing:
      // In no maximal failed set = in every minimal fort.
      return universal_fort_vertices(g, guard);
  }
  throw std::invalid_argument("unknown irrelevance kind");
}

/// Full catalog: minimal forts plus the derived vertex classifications.
inline FortReport minimal_forts(const Graph& g, int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  int n = g.order();
  FortReport report;
  report.minimal_forts = minimal_fort_family(g, guard);
  report.min_size = report.minimal_forts.empty()
                        ? 0
                        : report.minimal_forts.front().size();
  report.max_size = report.minimal_forts.empty()
                        ? 0
                        : report.minimal_forts.back().size();
  report.fort_irrelevant =
      detail::union_of(report.minimal_forts, n).complement();
  report.zf_irrelevant =
      detail::union_of(minimal_zero_forcing_sets(g, guard), n).complement();
  report.universal = detail::intersection_of(report.minimal_forts, n);
  report.failed_zf_irrelevant = report.universal;
  return report;
}

}  // namespace fortress
