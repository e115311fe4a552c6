#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "udim/error.hpp"

namespace udim {

using Vertex = std::size_t;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with unique string labels.
///
/// Vertices are numbered 0..V-1 in insertion order. Every adjacency list is
/// kept sorted so traversals visit neighbours in ascending index order, which
/// is what makes BFS-derived certificates reproducible.
class Graph {
 public:
  Graph() = default;

  /// Appends a vertex. Throws InvalidGraph if the label is taken.
  Vertex add_vertex(std::string label) {
    if (index_.contains(label)) {
      throw InvalidGraph("duplicate vertex label '" + label + "'");
    }
    const Vertex v = labels_.size();
    index_.emplace(label, v);
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    return v;
  }

  /// Adds the edge {u, v}. Self-loops and parallel edges throw InvalidGraph.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw InvalidGraph("self-loop at vertex '" + labels_[u] + "'");
    }
    if (adjacent(u, v)) {
      throw InvalidGraph("duplicate edge '" + labels_[u] + "' -- '" + labels_[v] + "'");
    }
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
    ++edge_count_;
  }

  void add_edge(std::string_view a, std::string_view b) { add_edge(require(a), require(b)); }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::ranges::binary_search(adjacency_[u], v);
  }

  const std::string& label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Vertex> find(std::string_view label) const {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    return std::nullopt;
  }

  /// Like find(), but throws InvalidGraph for an unknown label.
  Vertex require(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw InvalidGraph("unknown vertex label '" + std::string(label) + "'");
  }

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= labels_.size()) {
      throw InvalidGraph("vertex index " + std::to_string(v) + " out of range");
    }
  }

  static void insert_sorted(std::vector<Vertex>& list, Vertex v) {
    list.insert(std::ranges::upper_bound(list, v), v);
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::size_t edge_count_ = 0;
};

/// Anything with dense vertex indices and sorted neighbour lists. Graph and
/// VecNegGraph both model it, so the traversal code below serves both.
template <typename G>
concept AdjacencyGraph = requires(const G& g, Vertex v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::ranges::forward_range;
};

/// A vertex sequence; length is the number of steps.
struct Walk {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool closed() const noexcept { return !vertices.empty() && vertices.front() == vertices.back(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Proper 2-colouring plus component ids.
struct Bipartition {
  std::vector<int> color;
  std::vector<std::size_t> component;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

template <AdjacencyGraph G>
bool is_walk(const G& g, const Walk& walk) {
  if (walk.vertices.empty()) return false;
  for (Vertex v : walk.vertices) {
    if (v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    auto nb = g.neighbors(walk.vertices[i - 1]);
    if (!std::ranges::binary_search(nb, walk.vertices[i])) return false;
  }
  return true;
}

namespace detail {

inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

/// BFS forest over every component: roots are least unvisited indices,
/// neighbours are scanned in ascending order.
struct BfsForest {
  std::vector<int> color;
  std::vector<std::size_t> component;
  std::vector<Vertex> parent;
  std::vector<std::size_t> depth;
  std::vector<bool> component_bipartite;
  // First same-colour edge met, as (vertex being scanned, neighbour).
  std::optional<std::pair<Vertex, Vertex>> first_conflict;
  // First non-tree edge met, as (vertex being scanned, neighbour).
  std::optional<std::pair<Vertex, Vertex>> first_cross_edge;

  std::size_t component_count() const noexcept { return component_bipartite.size(); }
};

template <AdjacencyGraph G>
BfsForest bfs_forest(const G& g) {
  const std::size_t n = g.vertex_count();
  BfsForest f;
  f.color.assign(n, -1);
  f.component.assign(n, 0);
  f.parent.assign(n, kNoParent);
  f.depth.assign(n, 0);

  std::queue<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (f.color[root] != -1) continue;
    const std::size_t id = f.component_bipartite.size();
    f.component_bipartite.push_back(true);
    f.color[root] = 0;
    f.component[root] = id;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (f.color[v] == -1) {
          f.color[v] = 1 - f.color[u];
          f.component[v] = id;
          f.parent[v] = u;
          f.depth[v] = f.depth[u] + 1;
          queue.push(v);
          continue;
        }
        if (v != f.parent[u] && f.parent[v] != u && !f.first_cross_edge) {
          f.first_cross_edge = {u, v};
        }
        if (f.color[v] == f.color[u]) {
          f.component_bipartite[id] = false;
          if (!f.first_conflict) f.first_conflict = {u, v};
        }
      }
    }
  }
  return f;
}

/// Closed walk lca..u, v..lca through the BFS tree, closed by the edge u-v.
inline Walk tree_cycle(const BfsForest& f, Vertex u, Vertex v) {
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  Vertex a = u;
  Vertex b = v;
  while (f.depth[a] > f.depth[b]) {
    up.push_back(a);
    a = f.parent[a];
  }
  while (f.depth[b] > f.depth[a]) {
    down.push_back(b);
    b = f.parent[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = f.parent[a];
    b = f.parent[b];
  }
  Walk w;
  w.vertices.push_back(a);
  w.vertices.insert(w.vertices.end(), up.rbegin(), up.rend());
  w.vertices.insert(w.vertices.end(), down.begin(), down.end());
  w.vertices.push_back(a);
  return w;
}

}  // namespace detail

/// Either a proper 2-colouring or a closed walk of odd length.
///
/// The odd walk is read off the BFS tree at the first same-colour edge u-v:
/// lowest common ancestor down to u, across to v, back up to the ancestor.
template <AdjacencyGraph G>
std::variant<Bipartition, Walk> bipartition_or_odd_walk(const G& g) {
  auto f = detail::bfs_forest(g);
  if (f.first_conflict) {
    return detail::tree_cycle(f, f.first_conflict->first, f.first_conflict->second);
  }
  return Bipartition{std::move(f.color), std::move(f.component)};
}

/// Component ids numbered in order of each component's least vertex.
template <AdjacencyGraph G>
std::vector<std::size_t> connected_components(const G& g) {
  return detail::bfs_forest(g).component;
}

/// A simple cycle of g, if any.
template <AdjacencyGraph G>
std::optional<Walk> find_cycle(const G& g) {
  auto f = detail::bfs_forest(g);
  if (!f.first_cross_edge) return std::nullopt;
  return detail::tree_cycle(f, f.first_cross_edge->first, f.first_cross_edge->second);
}

template <AdjacencyGraph G>
bool contains_cycle(const G& g) {
  return find_cycle(g).has_value();
}

}  // namespace udim
