#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "fortress/graph.hpp"

namespace fortress {

/// Result of running the color-change process to a fixpoint.
struct ClosureTrace {
  VertexSet final_blue;
  /// (forcer, forced) pairs in firing order; each forced vertex appears once.
  std::vector<std::pair<int, int>> forces;
};

/// Runs the color-change rule from the start set until no blue vertex has
/// exactly one white neighbor.  Work queue with per-vertex white-neighbor
/// counts; O(n + m) amortized.
inline ClosureTrace closure(const Graph& g, const VertexSet& start) {
  int n = g.order();
  if (start.universe() != n)
    throw std::invalid_argument("closure: set does not match graph");
  std::vector<char> blue(static_cast<std::size_t>(n), 0);
  std::vector<int> white_nbrs(static_cast<std::size_t>(n), 0);
  start.for_each([&](int v) { blue[static_cast<std::size_t>(v)] = 1; });
  for (int v = 0; v < n; ++v) {
    int w = 0;
    for (int u : g.neighbors(v))
      if (!blue[static_cast<std::size_t>(u)]) ++w;
    white_nbrs[static_cast<std::size_t>(v)] = w;
  }

  ClosureTrace trace;
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (blue[static_cast<std::size_t>(v)] &&
        white_nbrs[static_cast<std::size_t>(v)] == 1)
      queue.push_back(v);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (white_nbrs[static_cast<std::size_t>(v)] != 1) continue;  // stale entry
    int forced = -1;
    for (int u : g.neighbors(v))
      if (!blue[static_cast<std::size_t>(u)]) {
        forced = u;
        break;
      }
    trace.forces.emplace_back(v, forced);
    blue[static_cast<std::size_t>(forced)] = 1;
    for (int u : g.neighbors(forced))
      if (--white_nbrs[static_cast<std::size_t>(u)] == 1 &&
          blue[static_cast<std::size_t>(u)])
        queue.push_back(u);
    if (white_nbrs[static_cast<std::size_t>(forced)] == 1) queue.push_back(forced);
  }

  trace.final_blue = VertexSet(n);
  for (int v = 0; v < n; ++v)
    if (blue[static_cast<std::size_t>(v)]) trace.final_blue.insert(v);
  return trace;
}

inline bool is_zero_forcing_set(const Graph& g, const VertexSet& s) {
  return closure(g, s).final_blue == g.vertex_set();
}

/// A failed set is any set that is not a zero forcing set.
inline bool is_failed(const Graph& g, const VertexSet& s) {
  return !is_zero_forcing_set(g, s);
}

/// A stalled set is a proper subset of V from which no force fires.
inline bool is_stalled(const Graph& g, const VertexSet& s) {
  if (s == g.vertex_set()) return false;
  return closure(g, s).final_blue == s;
}

/// A fort is a nonempty W where no outside vertex has exactly one neighbor
/// in W.  Equivalently: V minus W is stalled, or W = V.
inline bool is_fort(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.order())
    throw std::invalid_argument("is_fort: set does not match graph");
  if (w.empty()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (w.contains(v)) continue;
    int inside = 0;
    for (int u : g.neighbors(v))
      if (w.contains(u) && ++inside > 1) break;
    if (inside == 1) return false;
  }
  return true;
}

namespace detail {

/// Single-word bitmask view of a graph; backs all exponential searches.
struct MaskGraph {
  int n = 0;
  std::uint64_t all = 0;
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()) {
    if (n > 64)
      throw std::invalid_argument("mask kernels support at most 64 vertices");
    all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    adj.resize(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v))
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
};

inline std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  s.for_each([&m](int v) { m |= std::uint64_t{1} << v; });
  return m;
}

inline VertexSet set_of(std::uint64_t mask, int universe) {
  VertexSet s(universe);
  while (mask != 0) {
    s.insert(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

inline std::uint64_t closure_mask(const MaskGraph& g, std::uint64_t blue) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint64_t rest = blue; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint64_t white = g.adj[static_cast<std::size_t>(v)] & ~blue;
      if (white != 0 && (white & (white - 1)) == 0) {
        blue |= white;
        changed = true;
      }
    }
  }
  return blue;
}

inline bool is_fort_mask(const MaskGraph& g, std::uint64_t w) {
  if (w == 0) return false;
  for (std::uint64_t rest = g.all & ~w; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    std::uint64_t inside = g.adj[static_cast<std::size_t>(v)] & w;
    if (inside != 0 && (inside & (inside - 1)) == 0) return false;
  }
  return true;
}

/// Minimality via the closure criterion: W is a fort and restoring any single
/// member to the complement yields a zero forcing set.
inline bool is_minimal_fort_mask(const MaskGraph& g, std::uint64_t w) {
  if (!is_fort_mask(g, w)) return false;
  std::uint64_t outside = g.all & ~w;
  for (std::uint64_t rest = w; rest != 0; rest &= rest - 1) {
    std::uint64_t x = rest & -rest;
    if (closure_mask(g, outside | x) != g.all) return false;
  }
  return true;
}

/// Next subset mask of the same popcount (Gosper's hack).
inline std::uint64_t next_same_popcount(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

inline int effective_guard(int guard) { return guard < 64 ? guard : 64; }

inline void check_guard(const Graph& g, int guard) {
  int limit = effective_guard(guard);
  if (g.order() > limit) throw GuardExceeded(g.order(), limit);
}

/// Depth-first search for a zero forcing set of size exactly k.  Candidates
/// are only ever drawn outside the closure of the partial set: if v lies in
/// cl(S), then cl(S + v + rest) = cl(S + rest), so some minimum set avoids v.
inline bool zfs_of_size(const MaskGraph& g, std::uint64_t blue, int next_vertex,
                        int remaining) {
  if (blue == g.all) return true;
  if (remaining == 0) return false;
  for (int v = next_vertex; v < g.n; ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    if ((blue & bit) != 0) continue;
    if (zfs_of_size(g, closure_mask(g, blue | bit), v + 1, remaining - 1))
      return true;
  }
  return false;
}

}  // namespace detail

/// Z(g): minimum size of a set whose closure is all of V.
/// Refuses graphs larger than the guard.
inline int zero_forcing_number(const Graph& g, int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  if (g.order() == 0) return 0;
  detail::MaskGraph mg(g);
  for (int k = 1; k <= g.order(); ++k)
    if (detail::zfs_of_size(mg, 0, 0, k)) return k;
  return g.order();  // unreachable: V itself always forces
}

/// Smallest cardinality of any fort; V is always a fort, so this is defined
/// for every nonempty graph.
inline int minimum_fort_size(const Graph& g, int guard = kDefaultExactGuard) {
  detail::check_guard(g, guard);
  if (g.order() == 0)
    throw std::invalid_argument("minimum_fort_size: empty graph has no forts");
  detail::MaskGraph mg(g);
  for (int k = 1; k < g.order(); ++k) {
    std::uint64_t w = (std::uint64_t{1} << k) - 1;
    for (;;) {
      if (detail::is_fort_mask(mg, w)) return k;
      if (w == (((std::uint64_t{1} << k) - 1) << (g.order() - k))) break;
      w = detail::next_same_popcount(w);
    }
  }
  return g.order();
}

/// F(g): maximum size of a failed set, computed as n minus the minimum fort
/// size (every maximum failed set is stalled, and complements of stalled
/// sets are forts).
inline int failed_zero_forcing_number(const Graph& g,
                                      int guard = kDefaultExactGuard) {
  if (g.order() < 1)
    throw std::invalid_argument(
        "failed_zero_forcing_number: graph must have at least one vertex");
  detail::check_guard(g, guard);
  return g.order() - minimum_fort_size(g, guard);
}

}  // namespace fortress
