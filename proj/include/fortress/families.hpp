#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fortress/graph.hpp"

namespace fortress {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  generalized_star,
  double_generalized_star,
  star222,
  petersen,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::star: return "star";
    case Family::generalized_star: return "generalized_star";
    case Family::double_generalized_star: return "double_generalized_star";
    case Family::star222: return "star222";
    case Family::petersen: return "petersen";
  }
  return "?";
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::path, Family::cycle, Family::complete,
                   Family::complete_bipartite, Family::star,
                   Family::generalized_star, Family::double_generalized_star,
                   Family::star222, Family::petersen})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

/// Parameters for one named graph family.
struct FamilySpec {
  Family family = Family::path;
  int n = 0;                 ///< order (path, cycle, complete, star) or second part size
  int m = 0;                 ///< first part size for complete_bipartite
  std::vector<int> legs;     ///< leg lengths (generalized_star; first center of double)
  std::vector<int> legs2;    ///< leg lengths of the second center (double only)

  static FamilySpec path(int n) { return {Family::path, n, 0, {}, {}}; }
  static FamilySpec cycle(int n) { return {Family::cycle, n, 0, {}, {}}; }
  static FamilySpec complete(int n) { return {Family::complete, n, 0, {}, {}}; }
  static FamilySpec complete_bipartite(int m, int n) {
    return {Family::complete_bipartite, n, m, {}, {}};
  }
  static FamilySpec star(int leaves) { return {Family::star, leaves, 0, {}, {}}; }
  static FamilySpec generalized_star(std::vector<int> legs) {
    return {Family::generalized_star, 0, 0, std::move(legs), {}};
  }
  static FamilySpec double_generalized_star(std::vector<int> legs,
                                            std::vector<int> legs2) {
    return {Family::double_generalized_star, 0, 0, std::move(legs), std::move(legs2)};
  }
  static FamilySpec star222() { return {Family::star222, 0, 0, {}, {}}; }
  static FamilySpec petersen() { return {Family::petersen, 0, 0, {}, {}}; }
};

namespace detail {

/// Appends a pendent path of `len` vertices hanging from `attach`; vertices
/// are numbered consecutively starting at `next`.  Returns the new `next`.
inline int append_leg(std::vector<std::pair<int, int>>& edges, int attach,
                      int len, int next) {
  int prev = attach;
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  return next;
}

}  // namespace detail

/// Builds the canonical labeled instance of a family.
inline Graph generate(const FamilySpec& spec) {
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case Family::path: {
      if (spec.n < 1) throw std::invalid_argument("path requires n >= 1");
      for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
      return Graph(spec.n, edges);
    }
    case Family::cycle: {
      if (spec.n < 3) throw std::invalid_argument("cycle requires n >= 3");
      for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(spec.n - 1, 0);
      return Graph(spec.n, edges);
    }
    case Family::complete: {
      if (spec.n < 1) throw std::invalid_argument("complete requires n >= 1");
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      return Graph(spec.n, edges);
    }
    case Family::complete_bipartite: {
      if (spec.m < 1 || spec.n < 1)
        throw std::invalid_argument("complete_bipartite requires m, n >= 1");
      for (int u = 0; u < spec.m; ++u)
        for (int v = 0; v < spec.n; ++v) edges.emplace_back(u, spec.m + v);
      return Graph(spec.m + spec.n, edges);
    }
    case Family::star: {
      if (spec.n < 1) throw std::invalid_argument("star requires >= 1 leaf");
      for (int v = 1; v <= spec.n; ++v) edges.emplace_back(0, v);
      return Graph(spec.n + 1, edges);
    }
    case Family::generalized_star: {
      if (spec.legs.size() < 3)
        throw std::invalid_argument("generalized star requires >= 3 legs");
      int next = 1;
      for (int len : spec.legs) {
        if (len < 1) throw std::invalid_argument("leg length must be positive");
        next = detail::append_leg(edges, 0, len, next);
      }
      return Graph(next, edges);
    }
    case Family::double_generalized_star: {
      if (spec.legs.size() < 2 || spec.legs2.size() < 2)
        throw std::invalid_argument(
            "double generalized star requires >= 2 legs per center");
      edges.emplace_back(0, 1);
      int next = 2;
      for (int len : spec.legs) {
        if (len < 1) throw std::invalid_argument("leg length must be positive");
        next = detail::append_leg(edges, 0, len, next);
      }
      for (int len : spec.legs2) {
        if (len < 1) throw std::invalid_argument("leg length must be positive");
        next = detail::append_leg(edges, 1, len, next);
      }
      return Graph(next, edges);
    }
    case Family::star222: {
      // Center 0; legs 0-1-2, 0-3-4, 0-5-6.
      return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    }
    case Family::petersen: {
      // Outer 5-cycle 0..4, inner vertices 5..9 with spokes i -- i+5 and the
      // inner pentagram joining inner vertices two apart.
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      return Graph(10, edges);
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace fortress
