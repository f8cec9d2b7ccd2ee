#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "fortress/forcing.hpp"
#include "fortress/graph.hpp"
#include "fortress/trees.hpp"

namespace fortress {

/// One round of simultaneous star removals: the centers found in the round
/// and the vertices that survive it.
struct StarLayer {
  VertexSet centers;
  VertexSet residual;
};

/// Fixpoint of iterated star removals.
struct StarDecomposition {
  std::vector<StarLayer> layers;
  VertexSet all_centers;
  VertexSet final_residual;
};

/// A vertex with at least two pendent paths hanging off it; the legs run
/// from the center-adjacent vertex out to the leaf.
struct PendentGeneralizedStar {
  int center = -1;
  std::vector<std::vector<int>> legs;
};

enum class ShapeTag { path, generalized_star, double_generalized_star, star222, other };

inline const char* shape_name(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::path: return "path";
    case ShapeTag::generalized_star: return "generalized_star";
    case ShapeTag::double_generalized_star: return "double_generalized_star";
    case ShapeTag::star222: return "star222";
    case ShapeTag::other: return "other";
  }
  return "?";
}

/// Degree-census classification of a tree, with the star parameters when the
/// shape has any (one entry per high-degree center; empty for paths).
struct TreeShape {
  ShapeTag tag = ShapeTag::other;
  int order = 0;
  std::vector<PendentGeneralizedStar> stars;
};

/// True if some vertex has two or more degree-1 neighbors.
inline bool has_double_pendant(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    int pendants = 0;
    for (int u : g.neighbors(v))
      if (g.degree(u) == 1 && ++pendants >= 2) return true;
  }
  return false;
}

/// Iterated star removals: each round collects every vertex having >= 2
/// pendant neighbors, then removes those stars one at a time.  Pendants are
/// re-read between removals, so a vertex reduced to degree 1 mid-round is
/// swept up by a later center of the same round; the removed set does not
/// depend on the order the round's centers are processed in.
inline StarDecomposition star_centers(const Graph& g) {
  int n = g.order();
  StarDecomposition out;
  out.all_centers = VertexSet(n);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  auto alive_degree = [&](int v) {
    int d = 0;
    for (int u : g.neighbors(v))
      if (alive[static_cast<std::size_t>(u)]) ++d;
    return d;
  };
  for (;;) {
    VertexSet centers(n);
    for (int v = 0; v < n; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      int pendants = 0;
      for (int u : g.neighbors(v))
        if (alive[static_cast<std::size_t>(u)] && alive_degree(u) == 1) ++pendants;
      if (pendants >= 2) centers.insert(v);
    }
    if (centers.empty()) break;
    centers.for_each([&](int v) {
      for (int u : g.neighbors(v))
        if (alive[static_cast<std::size_t>(u)] && alive_degree(u) == 1)
          alive[static_cast<std::size_t>(u)] = 0;
      alive[static_cast<std::size_t>(v)] = 0;
    });
    VertexSet residual(n);
    for (int v = 0; v < n; ++v)
      if (alive[static_cast<std::size_t>(v)]) residual.insert(v);
    out.layers.push_back({centers, residual});
    out.all_centers |= centers;
  }
  out.final_residual = VertexSet(n);
  for (int v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) out.final_residual.insert(v);
  return out;
}

/// True iff every vertex of degree >= 2 has at least two degree-1 neighbors.
inline bool is_leafy(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    int pendants = 0;
    for (int u : g.neighbors(v))
      if (g.degree(u) == 1) ++pendants;
    if (pendants < 2) return false;
  }
  return true;
}

namespace detail {

/// A connected induced subtree of a host tree, given by an aliveness mask.
struct SubtreeView {
  const Graph& g;
  std::vector<char> alive;

  bool contains(int v) const { return alive[static_cast<std::size_t>(v)] != 0; }

  int degree(int v) const {
    int d = 0;
    for (int u : g.neighbors(v))
      if (contains(u)) ++d;
    return d;
  }

  template <typename F>
  void for_nbrs(int v, F&& f) const {
    for (int u : g.neighbors(v))
      if (contains(u)) f(u);
  }

  /// The unique alive neighbor of a degree-2 vertex other than prev.
  int other_nbr(int v, int prev) const {
    for (int u : g.neighbors(v))
      if (contains(u) && u != prev) return u;
    return -1;
  }
};

/// Walks from v into neighbor u; returns the pendent path [u..leaf] if every
/// vertex on the walk has degree <= 2, otherwise nullopt.
inline std::optional<std::vector<int>> leg_from(const SubtreeView& t, int v, int u) {
  std::vector<int> leg;
  int prev = v, cur = u;
  for (;;) {
    leg.push_back(cur);
    int d = t.degree(cur);
    if (d == 1) return leg;
    if (d > 2) return std::nullopt;
    int nxt = t.other_nbr(cur, prev);
    prev = cur;
    cur = nxt;
  }
}

/// The pendent generalized star centered at v, if v qualifies: all but at
/// most one branch must be a pendent path, and there must be >= 2 such legs.
inline std::optional<PendentGeneralizedStar> pgs_at(const SubtreeView& t, int v) {
  if (t.degree(v) < 3) return std::nullopt;
  PendentGeneralizedStar pgs;
  pgs.center = v;
  int branches = 0;
  t.for_nbrs(v, [&](int u) {
    ++branches;
    if (auto leg = leg_from(t, v, u)) pgs.legs.push_back(std::move(*leg));
  });
  int legs = static_cast<int>(pgs.legs.size());
  if (legs < branches - 1 || legs < 2) return std::nullopt;
  return pgs;
}

inline std::vector<int> high_vertices(const SubtreeView& t) {
  std::vector<int> out;
  for (int v = 0; v < t.g.order(); ++v)
    if (t.contains(v) && t.degree(v) >= 3) out.push_back(v);
  return out;
}

/// Vertices of the alive path in order, starting from the given endpoint.
inline std::vector<int> path_order_from(const SubtreeView& t, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (t.degree(cur) > (prev == -1 ? 0 : 1)) {
    int nxt = t.other_nbr(cur, prev);
    prev = cur;
    cur = nxt;
    order.push_back(cur);
  }
  return order;
}

/// Standard path coloring whites: 1-based odd positions plus the far end.
inline void add_path_whites(const std::vector<int>& order, VertexSet& out) {
  int n = static_cast<int>(order.size());
  for (int i = 1; i <= n; ++i)
    if (i % 2 == 1 || i == n) out.insert(order[static_cast<std::size_t>(i - 1)]);
}

/// Standard coloring whites of one leg [u1..uk]: odd positions plus the leaf.
inline void add_standard_leg_whites(const std::vector<int>& leg, VertexSet& out) {
  int k = static_cast<int>(leg.size());
  for (int i = 1; i <= k; ++i)
    if (i % 2 == 1 || i == k) out.insert(leg[static_cast<std::size_t>(i - 1)]);
}

/// Adjusted (pgs) alternation whites of one leg [u1..uk]: the pattern starts
/// blue at the center-adjacent vertex, so whites are the even positions,
/// and the leaf is white regardless.
inline void add_adjusted_leg_whites(const std::vector<int>& leg, VertexSet& out) {
  int k = static_cast<int>(leg.size());
  for (int i = 1; i <= k; ++i)
    if (i % 2 == 0 || i == k) out.insert(leg[static_cast<std::size_t>(i - 1)]);
}

}  // namespace detail

/// Every pendent generalized star of the tree, sorted by center index.
inline std::vector<PendentGeneralizedStar> pendent_generalized_stars(const Graph& t) {
  if (!is_tree(t))
    throw std::invalid_argument("pendent_generalized_stars: input is not a tree");
  detail::SubtreeView view{t, std::vector<char>(static_cast<std::size_t>(t.order()), 1)};
  std::vector<PendentGeneralizedStar> out;
  for (int v : detail::high_vertices(view))
    if (auto pgs = detail::pgs_at(view, v)) out.push_back(std::move(*pgs));
  return out;
}

/// Degree-census shape of a tree.
inline TreeShape tree_shape(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_shape: input is not a tree");
  detail::SubtreeView view{t, std::vector<char>(static_cast<std::size_t>(t.order()), 1)};
  std::vector<int> high = detail::high_vertices(view);
  TreeShape shape;
  shape.order = t.order();
  if (high.empty()) {
    shape.tag = ShapeTag::path;
    return shape;
  }
  if (high.size() == 1) {
    PendentGeneralizedStar star;
    star.center = high[0];
    view.for_nbrs(high[0], [&](int u) {
      star.legs.push_back(*detail::leg_from(view, high[0], u));
    });
    bool all_two = star.legs.size() == 3;
    for (const auto& leg : star.legs)
      if (leg.size() != 2) all_two = false;
    shape.tag = all_two ? ShapeTag::star222 : ShapeTag::generalized_star;
    shape.stars.push_back(std::move(star));
    return shape;
  }
  if (high.size() == 2 && t.has_edge(high[0], high[1])) {
    shape.tag = ShapeTag::double_generalized_star;
    for (int c : high) {
      PendentGeneralizedStar star;
      star.center = c;
      view.for_nbrs(c, [&](int u) {
        if (u == high[0] || u == high[1]) return;
        star.legs.push_back(*detail::leg_from(view, c, u));
      });
      shape.stars.push_back(std::move(star));
    }
    return shape;
  }
  shape.tag = ShapeTag::other;
  return shape;
}

/// The vertices of a path graph in path order (single vertex for K_1).
inline std::vector<int> path_vertices(const Graph& g, int start = -1) {
  if (!is_tree(g)) throw std::invalid_argument("path_vertices: input is not a path");
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2)
      throw std::invalid_argument("path_vertices: input is not a path");
  if (g.order() == 1) {
    if (start != -1 && start != 0)
      throw std::invalid_argument("path_vertices: start is not an endpoint");
    return {0};
  }
  std::vector<int> ends;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) ends.push_back(v);
  if (start == -1) start = ends[0];
  if (start != ends[0] && start != ends[1])
    throw std::invalid_argument("path_vertices: start is not an endpoint");
  detail::SubtreeView view{g, std::vector<char>(static_cast<std::size_t>(g.order()), 1)};
  return detail::path_order_from(view, start);
}

/// Whites of the standard coloring of a path: v1, v3, v5, ... plus the far
/// endpoint.  The orientation starts at `start` (default: smaller endpoint).
inline VertexSet standard_path_fort(const Graph& g, int start = -1) {
  std::vector<int> order = path_vertices(g, start);
  VertexSet out(g.order());
  detail::add_path_whites(order, out);
  return out;
}

/// The full pendent path containing a leaf, from the attachment vertex's
/// neighbor out to the leaf; fails on path graphs (no high-degree vertex).
inline std::vector<int> pendent_leg_of_leaf(const Graph& t, int leaf) {
  if (!is_tree(t)) throw std::invalid_argument("pendent_leg_of_leaf: not a tree");
  if (leaf < 0 || leaf >= t.order() || t.degree(leaf) != 1)
    throw std::invalid_argument("pendent_leg_of_leaf: vertex is not a leaf");
  std::vector<int> inward{leaf};
  int prev = -1, cur = leaf;
  while (t.degree(cur) <= 2) {
    int nxt = -1;
    for (int u : t.neighbors(cur))
      if (u != prev) nxt = u;
    if (nxt == -1) break;
    prev = cur;
    cur = nxt;
    if (t.degree(cur) >= 3) break;
    inward.push_back(cur);
  }
  if (t.degree(cur) < 3)
    throw std::invalid_argument("pendent_leg_of_leaf: tree has no high-degree vertex");
  std::reverse(inward.begin(), inward.end());
  return inward;
}

namespace detail {

/// Validates that `leg` is a pendent path listed from the center-adjacent
/// vertex to the leaf, and returns the vertex it hangs from.
inline int attach_vertex(const Graph& t, const std::vector<int>& leg) {
  if (leg.empty()) throw std::invalid_argument("leg must be nonempty");
  for (std::size_t i = 0; i < leg.size(); ++i) {
    int v = leg[i];
    if (v < 0 || v >= t.order())
      throw std::invalid_argument("leg vertex out of range");
    int expected = i + 1 < leg.size() ? 2 : 1;
    if (t.degree(v) != expected)
      throw std::invalid_argument("leg is not a pendent path");
    if (i + 1 < leg.size() && !t.has_edge(v, leg[i + 1]))
      throw std::invalid_argument("leg vertices are not consecutive");
  }
  int u1 = leg[0];
  if (leg.size() == 1) return t.neighbors(u1)[0];
  for (int u : t.neighbors(u1))
    if (u != leg[1]) return u;
  throw std::invalid_argument("leg has no attachment vertex");
}

}  // namespace detail

/// Whites of the standard coloring on two legs pendent from one common
/// high-degree vertex; everything else blue.
inline VertexSet standard_two_leg_fort(const Graph& t, const std::vector<int>& leg1,
                                       const std::vector<int>& leg2) {
  if (!is_tree(t)) throw std::invalid_argument("standard_two_leg_fort: not a tree");
  int a1 = detail::attach_vertex(t, leg1);
  int a2 = detail::attach_vertex(t, leg2);
  if (a1 != a2)
    throw std::invalid_argument(
        "standard_two_leg_fort: legs not pendent from a common vertex");
  for (int v : leg1)
    for (int u : leg2)
      if (u == v)
        throw std::invalid_argument("standard_two_leg_fort: legs overlap");
  if (t.degree(a1) < 3)
    throw std::invalid_argument(
        "standard_two_leg_fort: common vertex is not high-degree");
  VertexSet out(t.order());
  detail::add_standard_leg_whites(leg1, out);
  detail::add_standard_leg_whites(leg2, out);
  return out;
}

/// Whites of the adjusted coloring of a generalized star with no length-1
/// legs: the center plus, on each leg, the even positions and the leaf.
inline VertexSet adjusted_fort(const Graph& t) {
  TreeShape shape = tree_shape(t);
  if (shape.tag != ShapeTag::generalized_star && shape.tag != ShapeTag::star222)
    throw std::invalid_argument("adjusted_fort: input is not a generalized star");
  const PendentGeneralizedStar& star = shape.stars[0];
  for (const auto& leg : star.legs)
    if (leg.size() == 1)
      throw std::invalid_argument("adjusted_fort: leg of length one present");
  VertexSet out(t.order());
  out.insert(star.center);
  for (const auto& leg : star.legs) detail::add_adjusted_leg_whites(leg, out);
  return out;
}

/// Whites of the adjusted pgs colorings of both stars of a double
/// generalized star with no length-1 legs.
inline VertexSet adjusted_pgs_fort(const Graph& t) {
  TreeShape shape = tree_shape(t);
  if (shape.tag != ShapeTag::double_generalized_star)
    throw std::invalid_argument(
        "adjusted_pgs_fort: input is not a double generalized star");
  VertexSet out(t.order());
  for (const PendentGeneralizedStar& star : shape.stars) {
    for (const auto& leg : star.legs)
      if (leg.size() == 1)
        throw std::invalid_argument("adjusted_pgs_fort: leg of length one present");
    out.insert(star.center);
    for (const auto& leg : star.legs) detail::add_adjusted_leg_whites(leg, out);
  }
  return out;
}

namespace detail {

inline bool leg_contains(const std::vector<int>& leg, int v) {
  return std::find(leg.begin(), leg.end(), v) != leg.end();
}

/// Recursive minimal-fort construction through a pair of leaves of the alive
/// subtree.  Both targets are leaves of the alive subtree, which never has a
/// double pendant.
inline void leaf_to_leaf_rec(const Graph& g, std::vector<char> alive_mask, int a,
                             int b, VertexSet& out) {
  SubtreeView t{g, std::move(alive_mask)};
  std::vector<int> high = high_vertices(t);

  if (high.empty()) {
    // Alive subtree is a path with endpoints a and b.
    std::vector<int> order = path_order_from(t, std::min(a, b));
    add_path_whites(order, out);
    return;
  }

  if (high.size() == 1) {
    // Generalized star: standard coloring on the two legs holding a and b.
    auto star = pgs_at(t, high[0]);
    for (const auto& leg : star->legs)
      if (leg_contains(leg, a) || leg_contains(leg, b))
        add_standard_leg_whites(leg, out);
    return;
  }

  // Shrink the pendent generalized star with the smallest center index.
  // A tree with >= 2 high-degree vertices always has one.
  std::optional<PendentGeneralizedStar> star;
  for (int v : high)
    if ((star = pgs_at(t, v))) break;
  if (!star) throw std::logic_error("leaf_to_leaf_fort: no pendent star found");

  auto in_star = [&star](int v) {
    for (const auto& leg : star->legs)
      if (leg_contains(leg, v)) return true;
    return false;
  };
  if (in_star(a) && in_star(b)) {
    for (const auto& leg : star->legs)
      if (leg_contains(leg, a) || leg_contains(leg, b))
        add_standard_leg_whites(leg, out);
    return;
  }

  std::size_t kept = 0;
  for (std::size_t i = 1; i < star->legs.size(); ++i)
    if (star->legs[i].size() < star->legs[kept].size()) kept = i;
  int x = star->legs[kept].back();

  std::vector<char> next_alive = t.alive;
  for (std::size_t i = 0; i < star->legs.size(); ++i)
    if (i != kept)
      for (int v : star->legs[i]) next_alive[static_cast<std::size_t>(v)] = 0;

  int a2 = in_star(a) ? x : a;
  int b2 = in_star(b) ? x : b;
  VertexSet inner(g.order());
  leaf_to_leaf_rec(g, std::move(next_alive), a2, b2, inner);

  if (inner.contains(star->center)) {
    // Union with the adjusted pgs whites on the removed legs.
    out |= inner;
    for (std::size_t i = 0; i < star->legs.size(); ++i)
      if (i != kept) add_adjusted_leg_whites(star->legs[i], out);
    return;
  }
  if (a2 == a && b2 == b) {
    out |= inner;
    return;
  }
  // One target sits on a removed leg: swap the kept leg's whites for the
  // standard coloring of the target's leg.
  int target = in_star(a) ? a : b;
  VertexSet w = inner;
  for (int v : star->legs[kept]) w.erase(v);
  for (const auto& leg : star->legs)
    if (leg_contains(leg, target)) add_standard_leg_whites(leg, w);
  out |= w;
}

}  // namespace detail

/// A minimal fort containing two given leaves of a tree without double
/// pendants, built by the recursive star-shrinking construction.
inline VertexSet leaf_to_leaf_fort(const Graph& t, int leaf1, int leaf2) {
  if (!is_tree(t)) throw std::invalid_argument("leaf_to_leaf_fort: not a tree");
  if (has_double_pendant(t))
    throw std::invalid_argument("leaf_to_leaf_fort: double pendant present");
  for (int leaf : {leaf1, leaf2})
    if (leaf < 0 || leaf >= t.order() || t.degree(leaf) != 1)
      throw std::invalid_argument("leaf_to_leaf_fort: argument is not a leaf");
  if (leaf1 == leaf2)
    throw std::invalid_argument("leaf_to_leaf_fort: leaves must be distinct");
  VertexSet out(t.order());
  detail::leaf_to_leaf_rec(t, std::vector<char>(static_cast<std::size_t>(t.order()), 1),
                           leaf1, leaf2, out);
  return out;
}

/// A leaf-to-leaf path through x whose endpoints lie in the fort w and whose
/// non-fort vertices have both path neighbors in w.  Greedy two-sided walk:
/// from a fort vertex, step to a fort neighbor when one exists; otherwise
/// step through a non-fort neighbor, which must have a second fort neighbor.
inline std::vector<int> fort_spanning_path(const Graph& t, const VertexSet& w, int x) {
  if (!is_tree(t) || t.order() < 2)
    throw std::invalid_argument("fort_spanning_path: need a tree with >= 2 vertices");
  if (!is_fort(t, w)) throw std::invalid_argument("fort_spanning_path: w is not a fort");
  if (!w.contains(x)) throw std::invalid_argument("fort_spanning_path: x is not in w");

  // Extends from fort vertex c (never stepping back to prev / banned) until a
  // leaf is reached; returns the vertices appended after c.
  auto extend = [&](int c, int prev, int banned) {
    std::vector<int> out;
    for (;;) {
      int white_next = -1, blue_next = -1;
      for (int u : t.neighbors(c)) {
        if (u == prev || u == banned) continue;
        if (w.contains(u)) {
          if (white_next == -1) white_next = u;
        } else if (blue_next == -1) {
          blue_next = u;
        }
      }
      banned = -1;  // only constrains the first step
      if (white_next != -1) {
        out.push_back(white_next);
        prev = c;
        c = white_next;
        continue;
      }
      if (blue_next == -1) return out;  // c is a leaf
      int q = blue_next;
      int cont = -1;
      for (int u : t.neighbors(q))
        if (u != c && w.contains(u)) {
          cont = u;
          break;
        }
      // A non-fort vertex adjacent to a fort vertex has >= 2 fort neighbors.
      if (cont == -1) throw std::logic_error("fort_spanning_path: fort violated");
      out.push_back(q);
      out.push_back(cont);
      prev = q;
      c = cont;
    }
  };

  if (t.degree(x) == 1) {
    std::vector<int> path{x};
    for (int v : extend(x, -1, -1)) path.push_back(v);
    return path;
  }
  std::vector<int> side1 = extend(x, -1, -1);
  std::vector<int> side2 = extend(x, -1, side1.front());
  std::vector<int> path(side1.rbegin(), side1.rend());
  path.push_back(x);
  path.insert(path.end(), side2.begin(), side2.end());
  return path;
}

}  // namespace fortress
