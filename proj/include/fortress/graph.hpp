#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fortress {

/// Thrown when an exponential-time search is asked to run on a graph larger
/// than the configured guard.  Exact searches refuse; they never approximate.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(int order, int guard)
      : std::runtime_error("graph has " + std::to_string(order) +
                           " vertices, exceeding the exact-search guard of " +
                           std::to_string(guard)),
        order_(order),
        guard_(guard) {}

  int order() const { return order_; }
  int guard() const { return guard_; }

 private:
  int order_;
  int guard_;
};

/// Default cap on the order of graphs admitted to exponential-time searches.
inline constexpr int kDefaultExactGuard = 20;

/// A subset of the vertices 0..n-1 of a fixed universe, stored as a bitset.
/// Two sets compare equal only if they have the same universe and members.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe)
      : n_(universe), words_(word_count(universe), 0) {
    if (universe < 0) throw std::invalid_argument("negative universe size");
  }

  /// The set {0, ..., universe-1}.
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int v) const {
    return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }

  void insert(int v) {
    check_range(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check_range(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  /// Set difference: removes every member of `other`.
  VertexSet& operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
    return s;
  }

  bool operator==(const VertexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /// Calls f(v) for each member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        int v = static_cast<int>(i * 64) + std::countr_zero(w);
        f(v);
        w &= w - 1;
      }
    }
  }

  /// Smallest member, or -1 if empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  /// "{0, 2, 4}"
  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](int v) {
      if (!first_member) out += ", ";
      out += std::to_string(v);
      first_member = false;
    });
    out += "}";
    return out;
  }

  /// Orders sets of one universe by cardinality, then by ascending member
  /// list lexicographically.  Used everywhere a canonical order is needed.
  friend bool canonical_less(const VertexSet& a, const VertexSet& b) {
    a.check_same_universe(b);
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        // The set holding the smallest differing element comes first.
        return (a.words_[i] & (diff & -diff)) != 0;
      }
    }
    return false;
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
  }

  void check_range(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for universe of size " +
                                  std::to_string(n_));
  }

  void check_same_universe(const VertexSet& other) const {
    if (n_ != other.n_)
      throw std::invalid_argument("vertex sets have different universes");
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// An immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate edges are merged.
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" +
                                    std::to_string(u) + ", " +
                                    std::to_string(v) + ")");
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    m_ = 0;
    for (auto& nbrs : adj_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      m_ += static_cast<int>(nbrs.size());
    }
    m_ /= 2;
  }

  int order() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// All edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for graph of order " +
                                  std::to_string(n_));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

/// The subgraph induced by `keep`, relabeled 0..k-1 in ascending order of the
/// original labels.  Second result maps new label -> original label.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           const VertexSet& keep) {
  if (keep.universe() != g.order())
    throw std::invalid_argument("vertex set does not match graph");
  std::vector<int> old_of_new = keep.to_vector();
  std::vector<int> new_of_old(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i)
    new_of_old[static_cast<std::size_t>(old_of_new[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int nu = new_of_old[static_cast<std::size_t>(u)];
    int nv = new_of_old[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  return {Graph(static_cast<int>(old_of_new.size()), edges), std::move(old_of_new)};
}

/// Reads the text edge-list format: first line "n m", then m lines "u v".
inline Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header line");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

/// Writes the text edge-list format accepted by read_edge_list.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Graphviz DOT dump.
inline std::string to_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    out += ";\n";
  }
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace fortress
