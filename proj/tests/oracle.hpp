#pragma once

// Slow, definition-level reimplementations used to cross-check the library.
// Everything here works from Graph adjacency alone and never calls the
// algorithms under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "fortress/graph.hpp"

namespace oracle {

using fortress::Graph;
using fortress::VertexSet;

using Members = std::vector<int>;
using Family = std::set<Members>;

inline Members members_of(std::uint32_t mask, int n) {
    Members out;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) out.push_back(v);
    return out;
}

inline Family family_of(const std::vector<VertexSet>& sets) {
    Family out;
    for (const VertexSet& s : sets) out.insert(s.to_vector());
    return out;
}

/// Closure by repeated full rescans of the definition.
inline std::uint32_t closure_naive(const Graph& g, std::uint32_t blue) {
    int n = g.order();
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!(blue >> v & 1u)) continue;
            int white = -1, count = 0;
            for (int u : g.neighbors(v))
                if (!(blue >> u & 1u)) {
                    white = u;
                    ++count;
                }
            if (count == 1) {
                blue |= 1u << white;
                changed = true;
            }
        }
    }
    return blue;
}

inline std::uint32_t full_mask(int n) { return n == 32 ? ~0u : (1u << n) - 1; }

inline bool is_fort_naive(const Graph& g, std::uint32_t w) {
    if (w == 0) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (w >> v & 1u) continue;
        int inside = 0;
        for (int u : g.neighbors(v))
            if (w >> u & 1u) ++inside;
        if (inside == 1) return false;
    }
    return true;
}

inline Family minimal_forts_naive(const Graph& g) {
    int n = g.order();
    std::vector<std::uint32_t> forts;
    for (std::uint32_t w = 1; w <= full_mask(n); ++w)
        if (is_fort_naive(g, w)) forts.push_back(w);
    Family out;
    for (std::uint32_t w : forts) {
        bool minimal = true;
        for (std::uint32_t x : forts)
            if (x != w && (x & w) == x) minimal = false;
        if (minimal) out.insert(members_of(w, n));
    }
    return out;
}

inline Family maximal_failed_naive(const Graph& g) {
    int n = g.order();
    std::uint32_t full = full_mask(n);
    std::vector<std::uint32_t> failed;
    for (std::uint32_t s = 0; s <= full; ++s)
        if (closure_naive(g, s) != full) failed.push_back(s);
    Family out;
    for (std::uint32_t s : failed) {
        bool maximal = true;
        for (std::uint32_t t : failed)
            if (t != s && (s & t) == s) maximal = false;
        if (maximal) out.insert(members_of(s, n));
    }
    return out;
}

inline Family minimal_zfs_naive(const Graph& g) {
    int n = g.order();
    std::uint32_t full = full_mask(n);
    std::vector<std::uint32_t> forcing;
    for (std::uint32_t s = 0; s <= full; ++s)
        if (closure_naive(g, s) == full) forcing.push_back(s);
    Family out;
    for (std::uint32_t s : forcing) {
        bool minimal = true;
        for (std::uint32_t t : forcing)
            if (t != s && (s & t) == t) minimal = false;
        if (minimal) out.insert(members_of(s, n));
    }
    return out;
}

inline int zero_forcing_number_naive(const Graph& g) {
    int n = g.order();
    std::uint32_t full = full_mask(n);
    int best = n;
    for (std::uint32_t s = 0; s <= full; ++s)
        if (closure_naive(g, s) == full)
            best = std::min(best, std::popcount(s));
    return best;
}

inline int failed_zero_forcing_number_naive(const Graph& g) {
    int n = g.order();
    std::uint32_t full = full_mask(n);
    int best = -1;
    for (std::uint32_t s = 0; s < full; ++s)
        if (closure_naive(g, s) != full)
            best = std::max(best, std::popcount(s));
    return best;
}

/// True when `perm` maps graph a onto graph b edge for edge (tried for all
/// permutations; fine for the tiny graphs the tests use it on).
inline bool isomorphic_naive(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v : a.neighbors(u))
                if (u < v && !b.has_edge(perm[static_cast<std::size_t>(u)],
                                         perm[static_cast<std::size_t>(v)])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle
