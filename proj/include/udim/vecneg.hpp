#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "udim/error.hpp"
#include "udim/graph.hpp"

namespace udim {

/// An edge of the base graph traversed from tail to head.
struct DirectedEdge {
  Vertex tail;
  Vertex head;

  DirectedEdge reversed() const noexcept { return {head, tail}; }

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

namespace detail {

inline void require_arc(const Graph& g, DirectedEdge e) {
  if (e.tail >= g.vertex_count() || e.head >= g.vertex_count()) {
    throw InvalidParameter("directed edge (" + std::to_string(e.tail) + "->" +
                           std::to_string(e.head) + ") refers to a missing vertex");
  }
  if (!g.adjacent(e.tail, e.head)) {
    throw InvalidParameter("directed edge " + g.label(e.tail) + "->" + g.label(e.head) +
                           " is not an edge of the graph");
  }
}

}  // namespace detail

/// Pairwise adjacency test in VecNeg(g), straight from the definition:
/// e2 is the reversal of e1, or A,B,C,D are distinct and ABCDA is a closed
/// 4-walk in g (e1 = A->B, e2 = C->D). In any planar unit-distance drawing
/// adjacent directed edges are opposite vectors.
inline bool vecneg_adjacent(const Graph& g, DirectedEdge e1, DirectedEdge e2) {
  detail::require_arc(g, e1);
  detail::require_arc(g, e2);
  if (e2 == e1.reversed()) return true;
  const Vertex a = e1.tail, b = e1.head, c = e2.tail, d = e2.head;
  const bool distinct = a != c && a != d && b != c && b != d;
  return distinct && g.adjacent(b, c) && g.adjacent(d, a);
}

/// VecNeg(G): one vertex per directed edge of the base graph, in canonical
/// (tail, head) order, with a BFS labelling of components and parities.
class VecNegGraph {
 public:
  explicit VecNegGraph(Graph base) : base_(std::move(base)) {
    const std::size_t n = base_.vertex_count();
    offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + base_.degree(v);
    arcs_.reserve(offsets_[n]);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : base_.neighbors(v)) arcs_.push_back({v, w});
    }

    adjacency_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto [a, b] = arcs_[i];
      auto& out = adjacency_[i];
      out.push_back(arc_index({b, a}));
      for (Vertex d : base_.neighbors(a)) {
        if (d == b) continue;
        for (Vertex c : base_.neighbors(b)) {
          if (c == a || c == d) continue;
          if (base_.adjacent(c, d)) out.push_back(arc_index({c, d}));
        }
      }
      std::ranges::sort(out);
    }
    forest_ = detail::bfs_forest(*this);
  }

  const Graph& base() const noexcept { return base_; }

  std::size_t vertex_count() const noexcept { return arcs_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& list : adjacency_) total += list.size();
    return total / 2;
  }

  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_.at(i); }

  std::span<const DirectedEdge> arcs() const noexcept { return arcs_; }
  DirectedEdge arc(std::size_t i) const { return arcs_.at(i); }

  /// Index of a directed edge; throws InvalidParameter if it is not one.
  std::size_t index_of(DirectedEdge e) const {
    detail::require_arc(base_, e);
    return arc_index(e);
  }

  std::size_t component(std::size_t i) const { return forest_.component.at(i); }
  int color(std::size_t i) const { return forest_.color.at(i); }
  std::size_t component_count() const noexcept { return forest_.component_count(); }
  bool component_bipartite(std::size_t c) const { return forest_.component_bipartite.at(c); }

  bool bipartite() const noexcept { return !forest_.first_conflict.has_value(); }

  /// The odd closed walk found by the labelling BFS, as arc indices.
  std::optional<Walk> odd_closed_walk() const {
    if (!forest_.first_conflict) return std::nullopt;
    return detail::tree_cycle(forest_, forest_.first_conflict->first, forest_.first_conflict->second);
  }

  /// Shortest walk between two arcs (ascending-index BFS), if connected.
  std::optional<Walk> shortest_walk(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> parent(arcs_.size(), detail::kNoParent);
    std::vector<bool> seen(arcs_.size(), false);
    std::queue<std::size_t> queue;
    seen.at(from) = true;
    queue.push(from);
    while (!queue.empty() && !seen.at(to)) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adjacency_[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        parent[v] = u;
        queue.push(v);
      }
    }
    if (!seen[to]) return std::nullopt;
    Walk w;
    for (std::size_t v = to; v != from; v = parent[v]) w.vertices.push_back(v);
    w.vertices.push_back(from);
    std::ranges::reverse(w.vertices);
    return w;
  }

 private:
  std::size_t arc_index(DirectedEdge e) const {
    auto nb = base_.neighbors(e.tail);
    return offsets_[e.tail] + static_cast<std::size_t>(std::ranges::lower_bound(nb, e.head) - nb.begin());
  }

  Graph base_;
  std::vector<std::size_t> offsets_;
  std::vector<DirectedEdge> arcs_;
  std::vector<std::vector<std::size_t>> adjacency_;
  detail::BfsForest forest_;
};

inline VecNegGraph build_vecneg(const Graph& g) { return VecNegGraph(g); }

enum class ObstructionKind { odd_closed_walk, even_apex_walk };

/// Certificate that dim(G) >= 3.
///
/// odd_closed_walk: a closed walk of odd length in VecNeg(G). Every step
/// negates the unit vector, so the first arc would equal its own negation.
/// even_apex_walk: an even walk from apex->a to apex->b with a != b, which
/// would force the two unit vectors out of the apex to coincide.
struct Obstruction {
  ObstructionKind kind = ObstructionKind::odd_closed_walk;
  std::vector<DirectedEdge> walk;
  // Meaningful for even_apex_walk only.
  Vertex apex = 0;
  Vertex a = 0;
  Vertex b = 0;

  std::size_t length() const noexcept { return walk.empty() ? 0 : walk.size() - 1; }

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

inline std::string to_string(ObstructionKind kind) {
  return kind == ObstructionKind::odd_closed_walk ? "odd_closed_walk" : "even_apex_walk";
}

/// Searches for either obstruction. The odd closed walk is tried first; the
/// apex condition is scanned over (F, A, B) in ascending index order with
/// A < B, and the first hit is reported with a shortest walk.
inline std::optional<Obstruction> find_obstruction(const VecNegGraph& vn) {
  const auto to_arcs = [&vn](const Walk& w) {
    std::vector<DirectedEdge> arcs;
    arcs.reserve(w.vertices.size());
    for (std::size_t i : w.vertices) arcs.push_back(vn.arc(i));
    return arcs;
  };

  if (auto odd = vn.odd_closed_walk()) {
    return Obstruction{ObstructionKind::odd_closed_walk, to_arcs(*odd)};
  }

  const Graph& g = vn.base();
  for (Vertex f = 0; f < g.vertex_count(); ++f) {
    auto nb = g.neighbors(f);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const std::size_t fa = vn.index_of({f, nb[i]});
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const std::size_t fb = vn.index_of({f, nb[j]});
        if (vn.component(fa) != vn.component(fb) || vn.color(fa) != vn.color(fb)) continue;
        auto walk = vn.shortest_walk(fa, fb);
        return Obstruction{ObstructionKind::even_apex_walk, to_arcs(*walk), f, nb[i], nb[j]};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Obstruction> find_obstruction(const Graph& g) {
  return find_obstruction(build_vecneg(g));
}

/// Re-checks a certificate against g using only the pairwise definition.
/// Arcs that are not directed edges of g throw InvalidParameter.
inline bool validate_obstruction(const Graph& g, const Obstruction& cert) {
  for (const auto& e : cert.walk) detail::require_arc(g, e);
  if (cert.walk.empty()) return false;
  for (std::size_t i = 1; i < cert.walk.size(); ++i) {
    if (!vecneg_adjacent(g, cert.walk[i - 1], cert.walk[i])) return false;
  }
  const std::size_t length = cert.length();
  switch (cert.kind) {
    case ObstructionKind::odd_closed_walk:
      return length % 2 == 1 && cert.walk.front() == cert.walk.back();
    case ObstructionKind::even_apex_walk:
      return length % 2 == 0 && cert.a != cert.b &&
             cert.walk.front() == DirectedEdge{cert.apex, cert.a} &&
             cert.walk.back() == DirectedEdge{cert.apex, cert.b};
  }
  return false;
}

/// The closed walk of length 2k-1 in VecNeg of mobius_ladder(k):
/// A1B1, B2A2, A2B2, ..., BkAk, AkBk, A1B1.
inline Obstruction mobius_ladder_certificate(std::size_t k) {
  if (k < 3) throw InvalidParameter("mobius_ladder_certificate: k must be >= 3");
  const auto a = [](std::size_t j) -> Vertex { return j - 1; };
  const auto b = [k](std::size_t j) -> Vertex { return k + j - 1; };
  Obstruction cert;
  cert.kind = ObstructionKind::odd_closed_walk;
  cert.walk.push_back({a(1), b(1)});
  for (std::size_t j = 2; j <= k; ++j) {
    cert.walk.push_back({b(j), a(j)});
    cert.walk.push_back({a(j), b(j)});
  }
  cert.walk.push_back({a(1), b(1)});
  return cert;
}

enum class BoundReason { trivial, has_cycle, vecneg_obstruction };

inline std::string to_string(BoundReason reason) {
  switch (reason) {
    case BoundReason::trivial:
      return "trivial";
    case BoundReason::has_cycle:
      return "has_cycle";
    case BoundReason::vecneg_obstruction:
      return "vecneg_obstruction";
  }
  return "unknown";
}

/// A sound lower bound on dim(g), never claimed tight.
struct LowerBound {
  int bound = 1;
  BoundReason reason = BoundReason::trivial;
  std::optional<Obstruction> obstruction;
  std::optional<Walk> cycle;
};

/// 3 with an obstruction if one exists, else 2 with a witness cycle, else 1.
/// Dimension one is reported for every forest, although stars with three or
/// more leaves already need the plane.
inline LowerBound lower_bound_dim(const Graph& g) {
  if (g.empty()) throw InvalidParameter("lower_bound_dim: graph is empty");
  if (auto cert = find_obstruction(g)) {
    return {3, BoundReason::vecneg_obstruction, std::move(cert), std::nullopt};
  }
  if (auto cycle = find_cycle(g)) {
    return {2, BoundReason::has_cycle, std::nullopt, std::move(cycle)};
  }
  return {};
}

}  // namespace udim
