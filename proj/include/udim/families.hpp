#pragma once

#include <cstddef>
#include <string>

#include "udim/error.hpp"
#include "udim/graph.hpp"

namespace udim {

/// Label of the Mycielskian apex.
inline constexpr std::string_view kApexLabel = "F";

/// C_n on labels "0".."n-1", i ~ i±1 (mod n).
inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle_graph: n must be >= 3, got " + std::to_string(n));
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  if (n < 2) throw InvalidParameter("complete_graph: n must be >= 2, got " + std::to_string(n));
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

/// Path on n vertices "0".."n-1". A one-vertex path has no edges.
inline Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidParameter("path_graph: n must be >= 1");
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// Möbius ladder on A1..Ak, B1..Bk (in that index order): rungs Aj-Bj,
/// rails Aj-Aj+1 and Bj-Bj+1, and the twisted closures A1-Bk, Ak-B1.
inline Graph mobius_ladder(std::size_t k) {
  if (k < 3) throw InvalidParameter("mobius_ladder: k must be >= 3, got " + std::to_string(k));
  Graph g;
  for (std::size_t j = 1; j <= k; ++j) g.add_vertex("A" + std::to_string(j));
  for (std::size_t j = 1; j <= k; ++j) g.add_vertex("B" + std::to_string(j));
  const auto a = [](std::size_t j) { return j - 1; };
  const auto b = [k](std::size_t j) { return k + j - 1; };
  for (std::size_t j = 1; j <= k; ++j) g.add_edge(a(j), b(j));
  for (std::size_t j = 1; j < k; ++j) {
    g.add_edge(a(j), a(j + 1));
    g.add_edge(b(j), b(j + 1));
  }
  g.add_edge(a(1), b(k));
  g.add_edge(a(k), b(1));
  return g;
}

/// The Mycielskian M(g).
///
/// Vertex layout: indices 0..V-1 are the copies (v,1) labelled "v", indices
/// V..2V-1 are the shadows (v,0) labelled "v'", and index 2V is the apex "F".
/// For every edge ab of g: (a,1)~(b,1), (a,0)~(b,1), (a,1)~(b,0); the apex
/// is adjacent to every shadow.
inline Graph mycielskian(const Graph& g) {
  if (g.empty()) throw InvalidParameter("mycielskian: input graph is empty");
  for (const auto& label : g.labels()) {
    if (label == kApexLabel || (!label.empty() && label.back() == '\'')) {
      throw LabelCollision("mycielskian: input label '" + label +
                           "' collides with the reserved apex/shadow labels");
    }
  }
  const std::size_t n = g.vertex_count();
  Graph m;
  for (const auto& label : g.labels()) m.add_vertex(label);
  for (const auto& label : g.labels()) m.add_vertex(label + "'");
  const Vertex apex = m.add_vertex(std::string(kApexLabel));

  for (const auto& [a, b] : g.edges()) {
    m.add_edge(a, b);
    m.add_edge(n + a, b);
    m.add_edge(a, n + b);
  }
  for (Vertex v = 0; v < n; ++v) m.add_edge(apex, n + v);
  return m;
}

}  // namespace udim
