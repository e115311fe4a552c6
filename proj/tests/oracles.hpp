#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "udim/graph.hpp"
#include "udim/vecneg.hpp"

namespace udim::testing {

/// G(n, p) with labels "v0".."v{n-1}".
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Dense adjacency matrix built from the edge list only.
inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Isomorphism by trying every vertex permutation.
inline bool isomorphic_brute_force(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  const auto a = adjacency_matrix(g);
  const auto b = adjacency_matrix(h);
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = 0; j < perm.size() && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool has_triangle_brute_force(const Graph& g) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (a[i][j] && a[j][k] && a[i][k]) return true;
      }
    }
  }
  return false;
}

/// VecNeg adjacency by enumerating every closed 4-walk A B C D A of g and
/// recording the pair {A->B, C->D} when the four vertices are distinct,
/// plus all reversal pairs.
inline std::vector<std::vector<bool>> vecneg_by_enumeration(const Graph& g, std::span<const DirectedEdge> arcs) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = g.vertex_count();
  const auto index = [&](Vertex t, Vertex h) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i].tail == t && arcs[i].head == h) return i;
    }
    return arcs.size();
  };
  std::vector<std::vector<bool>> out(arcs.size(), std::vector<bool>(arcs.size(), false));
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::size_t j = index(arcs[i].head, arcs[i].tail);
    out[i][j] = out[j][i] = true;
  }
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex q = 0; q < n; ++q) {
      for (Vertex r = 0; r < n; ++r) {
        for (Vertex s = 0; s < n; ++s) {
          if (!(a[p][q] && a[q][r] && a[r][s] && a[s][p])) continue;
          if (p == r || q == s) continue;  // p!=q etc. hold since there are no loops
          const std::size_t e1 = index(p, q);
          const std::size_t e2 = index(r, s);
          out[e1][e2] = out[e2][e1] = true;
        }
      }
    }
  }
  return out;
}

inline double euclid(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

/// Objective sum (|p_u - p_v|^2 - 1)^2 written independently of the library.
inline double edge_objective(const Graph& g, std::span<const double> x, std::size_t m) {
  double total = 0.0;
  for (const auto& [u, v] : g.edges()) {
    const double d = euclid(x.subspan(u * m, m), x.subspan(v * m, m));
    total += (d * d - 1.0) * (d * d - 1.0);
  }
  return total;
}

/// Central differences of edge_objective.
inline std::vector<double> finite_difference_gradient(const Graph& g, std::vector<double> x, std::size_t m,
                                                      double step) {
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double keep = x[i];
    x[i] = keep + step;
    const double up = edge_objective(g, x, m);
    x[i] = keep - step;
    const double down = edge_objective(g, x, m);
    x[i] = keep;
    grad[i] = (up - down) / (2.0 * step);
  }
  return grad;
}

/// Relative error |a - b| / max(|b|, floor) in the max norm.
inline double relative_error(std::span<const double> a, std::span<const double> b, double floor = 1.0) {
  double diff = 0.0;
  double scale = floor;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return diff / scale;
}

/// Minimum of the 1D triangle objective over a grid, with the first point
/// pinned at 0 (the objective is translation invariant).
inline double triangle_line_minimum_on_grid(double half_width, std::size_t steps) {
  double best = 1e300;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double a = -half_width + 2.0 * half_width * static_cast<double>(i) / static_cast<double>(steps);
    for (std::size_t j = 0; j <= steps; ++j) {
      const double b = -half_width + 2.0 * half_width * static_cast<double>(j) / static_cast<double>(steps);
      const double f = (a * a - 1) * (a * a - 1) + (b * b - 1) * (b * b - 1) +
                       ((a - b) * (a - b) - 1) * ((a - b) * (a - b) - 1);
      best = std::min(best, f);
    }
  }
  return best;
}

}  // namespace udim::testing
