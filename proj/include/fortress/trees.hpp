#pragma once

#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fortress/graph.hpp"

namespace fortress {

inline bool is_connected(const Graph& g) {
  int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

/// The 1- or 2-vertex center of a tree, by iterated leaf removal.
inline std::vector<int> tree_centers(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("tree_centers: input is not a tree");
  int n = g.order();
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> frontier;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) frontier.push_back(v);
  }
  int remaining = n;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      removed[static_cast<std::size_t>(v)] = 1;
      --remaining;
      for (int u : g.neighbors(v))
        if (!removed[static_cast<std::size_t>(u)] &&
            --deg[static_cast<std::size_t>(u)] == 1)
          next.push_back(u);
    }
    frontier = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
  return centers;
}

namespace detail {

/// Appends the canonical encoding of the subtree at v (approached from p):
/// "(" + child encodings in sorted order + ")".
template <typename AdjFn>
void encode_rooted(AdjFn&& nbrs, int v, int p, std::string& out) {
  std::vector<std::string> kids;
  for (int u : nbrs(v))
    if (u != p) {
      std::string s;
      encode_rooted(nbrs, u, v, s);
      kids.push_back(std::move(s));
    }
  std::sort(kids.begin(), kids.end());
  out += '(';
  for (const auto& k : kids) out += k;
  out += ')';
}

/// Canonical form over a raw adjacency structure; centers precomputed.
template <typename AdjFn>
std::string canonical_from_centers(AdjFn&& nbrs, const std::vector<int>& centers) {
  if (centers.size() == 1) {
    std::string out = "U";
    encode_rooted(nbrs, centers[0], -1, out);
    return out;
  }
  std::string a, b;
  encode_rooted(nbrs, centers[0], centers[1], a);
  encode_rooted(nbrs, centers[1], centers[0], b);
  if (b < a) std::swap(a, b);
  return "B" + a + b;
}

}  // namespace detail

/// Isomorphism-invariant encoding of a tree, rooted at its center.
/// Equal strings <=> isomorphic trees.
inline std::string tree_canonical_form(const Graph& g) {
  std::vector<int> centers = tree_centers(g);  // validates tree-ness
  auto nbrs = [&g](int v) { return g.neighbors(v); };
  return detail::canonical_from_centers(nbrs, centers);
}

/// Decodes a Pruefer sequence over {0..k+1} into the labeled tree on k+2
/// vertices it encodes.
inline Graph prufer_decode(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int s : seq) {
    if (s < 0 || s >= n)
      throw std::invalid_argument("prufer_decode: entry out of range");
    ++deg[static_cast<std::size_t>(s)];
  }
  int ptr = 0;
  while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf, s);
    if (--deg[static_cast<std::size_t>(s)] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph(n, edges);
}

/// One representative per isomorphism class of trees on n vertices, found by
/// decoding every Pruefer sequence and deduplicating on the canonical form.
/// Exhaustive enumeration is capped at n = 10 (n^(n-2) labeled trees).
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_trees: n must be between 1 and 10");
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};

  std::vector<Graph> out;
  std::unordered_set<std::string> seen;

  // Reused decode buffers: degree array, adjacency, and the sequence odometer.
  std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> edges;
  auto nbrs = [&adj](int v) -> const std::vector<int>& {
    return adj[static_cast<std::size_t>(v)];
  };

  for (;;) {
    // Decode seq into edges (inlined to reuse buffers across iterations).
    edges.clear();
    std::fill(deg.begin(), deg.end(), 1);
    for (int s : seq) ++deg[static_cast<std::size_t>(s)];
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
      edges.emplace_back(leaf, s);
      if (--deg[static_cast<std::size_t>(s)] == 1 && s < ptr) {
        leaf = s;
      } else {
        ++ptr;
        while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
        leaf = ptr;
      }
    }
    edges.emplace_back(leaf, n - 1);

    for (auto& a : adj) a.clear();
    for (auto [u, v] : edges) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }

    // Leaf-strip to the center, then canonicalize.
    std::vector<int> cdeg(static_cast<std::size_t>(n));
    std::vector<int> frontier;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      cdeg[static_cast<std::size_t>(v)] =
          static_cast<int>(adj[static_cast<std::size_t>(v)].size());
      if (cdeg[static_cast<std::size_t>(v)] == 1) frontier.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
      std::vector<int> next;
      for (int v : frontier) {
        removed[static_cast<std::size_t>(v)] = 1;
        --remaining;
        for (int u : adj[static_cast<std::size_t>(v)])
          if (!removed[static_cast<std::size_t>(u)] &&
              --cdeg[static_cast<std::size_t>(u)] == 1)
            next.push_back(u);
      }
      frontier = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
      if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);

    std::string canon = detail::canonical_from_centers(nbrs, centers);
    if (seen.insert(std::move(canon)).second) out.emplace_back(n, edges);

    // Advance the odometer.
    int i = static_cast<int>(seq.size()) - 1;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1)
      seq[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Uniform random labeled tree on n vertices via a random Pruefer sequence.
template <typename Rng>
Graph random_labeled_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_labeled_tree: n must be >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<std::size_t>(n) - 2);
  for (auto& s : seq) s = pick(rng);
  return prufer_decode(seq);
}

}  // namespace fortress
