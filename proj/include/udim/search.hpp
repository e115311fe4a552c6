#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "udim/embed.hpp"
#include "udim/error.hpp"
#include "udim/graph.hpp"
#include "udim/vecneg.hpp"

namespace udim {

/// Sum over edges of (|p_u - p_v|^2 - 1)^2. `coords` is row-major V x m.
inline double residual(const Graph& g, std::span<const double> coords, std::size_t m) {
  double total = 0.0;
  for (const auto& [u, v] : g.edges()) {
    double d2 = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      const double diff = coords[u * m + c] - coords[v * m + c];
      d2 += diff * diff;
    }
    total += (d2 - 1.0) * (d2 - 1.0);
  }
  return total;
}

inline double residual(const Graph& g, const Embedding& emb) {
  return residual(g, emb.coords(), emb.dimension());
}

/// Analytic gradient of residual(): d/dp_u = sum_{v~u} 4(|p_u-p_v|^2 - 1)(p_u - p_v).
inline std::vector<double> residual_gradient(const Graph& g, std::span<const double> coords, std::size_t m) {
  std::vector<double> grad(coords.size(), 0.0);
  for (const auto& [u, v] : g.edges()) {
    double d2 = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      const double diff = coords[u * m + c] - coords[v * m + c];
      d2 += diff * diff;
    }
    const double scale = 4.0 * (d2 - 1.0);
    for (std::size_t c = 0; c < m; ++c) {
      const double diff = coords[u * m + c] - coords[v * m + c];
      grad[u * m + c] += scale * diff;
      grad[v * m + c] -= scale * diff;
    }
  }
  return grad;
}

inline std::vector<double> residual_gradient(const Graph& g, const Embedding& emb) {
  return residual_gradient(g, emb.coords(), emb.dimension());
}

struct SearchConfig {
  std::size_t dimension = 2;
  std::size_t restarts = 50;
  std::size_t max_iterations = 2000;
  double success_tol = 1e-6;
  double separation_tol = 1e-3;
  std::uint64_t seed = 1;
  // Hinge radius used only while escaping a collapsed solution.
  double repulsion_radius = 0.25;
};

struct SearchResult {
  bool success = false;
  Embedding best_embedding;
  double best_residual = std::numeric_limits<double>::infinity();
  std::size_t restarts_used = 0;
  std::size_t iterations_total = 0;
};

inline constexpr double kInitBox = 1.5;
inline constexpr double kCoincidentKick = 1e-2;

namespace detail {

/// Which residual families a least-squares pass includes.
struct LeastSquaresTerms {
  // Non-adjacent pairs closer than this add (radius - |p_u - p_v|); 0 = off.
  double repulsion_radius = 0.0;
  // Planar only: for each VecNeg edge {A->B, C->D}, the vector
  // (p_B - p_A) + (p_D - p_C), which vanishes in every injective drawing.
  std::span<const std::array<Vertex, 4>> opposite_sides;
};

/// Levenberg-Marquardt on |p_u - p_v|^2 - 1 over the edges, plus whatever
/// guidance terms are switched on. Guidance is only used to steer away from
/// collapsed solutions; the caller always finishes with a plain pass.
/// Returns the iteration count; `x` is updated in place.
inline std::size_t levenberg_marquardt(const Graph& g, std::size_t m, Eigen::VectorXd& x,
                                       std::size_t max_iterations, double target,
                                       const LeastSquaresTerms& terms = {}) {
  const auto edges = g.edges();
  std::vector<Edge> pairs;
  if (terms.repulsion_radius > 0.0) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        if (!g.adjacent(u, v)) pairs.push_back({u, v});
      }
    }
  }
  const double radius = terms.repulsion_radius;
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto col = [m](Vertex v, std::size_t c) { return static_cast<Eigen::Index>(v * m + c); };

  const auto squared_gap = [&](const Eigen::VectorXd& p, Vertex u, Vertex v) {
    double d2 = 0.0;
    for (std::size_t c = 0; c < m; ++c) d2 += (p[col(u, c)] - p[col(v, c)]) * (p[col(u, c)] - p[col(v, c)]);
    return d2;
  };
  const auto side_sum = [&](const Eigen::VectorXd& p, const std::array<Vertex, 4>& s, std::size_t c) {
    return p[col(s[1], c)] - p[col(s[0], c)] + p[col(s[3], c)] - p[col(s[2], c)];
  };
  const auto cost_of = [&](const Eigen::VectorXd& p) {
    double cost = 0.0;
    for (const auto& e : edges) {
      const double r = squared_gap(p, e.u, e.v) - 1.0;
      cost += r * r;
    }
    for (const auto& e : pairs) {
      const double d = std::sqrt(squared_gap(p, e.u, e.v));
      if (d < radius) cost += (radius - d) * (radius - d);
    }
    for (const auto& s : terms.opposite_sides) {
      for (std::size_t c = 0; c < m; ++c) cost += side_sum(p, s, c) * side_sum(p, s, c);
    }
    return cost;
  };

  double cost = cost_of(x);
  double lambda = 1e-3;
  Eigen::MatrixXd jtj(n, n);
  Eigen::VectorXd jtr(n);
  Eigen::VectorXd trial(n);
  std::vector<std::pair<Eigen::Index, double>> row;
  // Adds one sparse Jacobian row and its residual to the normal equations.
  const auto accumulate = [&](double r) {
    for (const auto& [i, a] : row) {
      jtr[i] += a * r;
      for (const auto& [j, b] : row) jtj(i, j) += a * b;
    }
  };

  std::size_t it = 0;
  for (; it < max_iterations && cost > target; ++it) {
    jtj.setZero();
    jtr.setZero();
    for (const auto& e : edges) {
      row.clear();
      for (std::size_t c = 0; c < m; ++c) {
        const double diff = x[col(e.u, c)] - x[col(e.v, c)];
        row.emplace_back(col(e.u, c), 2.0 * diff);
        row.emplace_back(col(e.v, c), -2.0 * diff);
      }
      accumulate(squared_gap(x, e.u, e.v) - 1.0);
    }
    for (const auto& e : pairs) {
      const double d = std::sqrt(squared_gap(x, e.u, e.v));
      if (d >= radius || d < 1e-12) continue;
      row.clear();
      for (std::size_t c = 0; c < m; ++c) {
        const double unit = (x[col(e.u, c)] - x[col(e.v, c)]) / d;
        row.emplace_back(col(e.u, c), -unit);
        row.emplace_back(col(e.v, c), unit);
      }
      accumulate(radius - d);
    }
    for (const auto& s : terms.opposite_sides) {
      for (std::size_t c = 0; c < m; ++c) {
        row = {{col(s[1], c), 1.0}, {col(s[0], c), -1.0}, {col(s[3], c), 1.0}, {col(s[2], c), -1.0}};
        accumulate(side_sum(x, s, c));
      }
    }
    if (jtr.lpNorm<Eigen::Infinity>() < 1e-15) break;

    bool improved = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd lhs = jtj;
      lhs.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
      trial = x - lhs.ldlt().solve(jtr);
      const double trial_cost = cost_of(trial);
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        x.swap(trial);
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
  }
  return it;
}

/// Pushes apart vertices closer than `tol` by moving the later one.
inline bool separate_coincident(Eigen::VectorXd& x, std::size_t vertex_count, std::size_t m, double tol,
                                std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  bool moved = false;
  for (std::size_t u = 0; u < vertex_count; ++u) {
    for (std::size_t v = u + 1; v < vertex_count; ++v) {
      double d2 = 0.0;
      for (std::size_t c = 0; c < m; ++c) {
        const double diff = x[static_cast<Eigen::Index>(u * m + c)] - x[static_cast<Eigen::Index>(v * m + c)];
        d2 += diff * diff;
      }
      if (std::sqrt(d2) >= tol) continue;
      std::vector<double> dir(m);
      double norm = 0.0;
      while (norm < 1e-12) {
        norm = 0.0;
        for (double& d : dir) {
          d = normal(rng);
          norm += d * d;
        }
        norm = std::sqrt(norm);
      }
      for (std::size_t c = 0; c < m; ++c) {
        x[static_cast<Eigen::Index>(v * m + c)] += kCoincidentKick * dir[c] / norm;
      }
      moved = true;
    }
  }
  return moved;
}

inline Embedding to_embedding(const Eigen::VectorXd& x, std::size_t vertex_count, std::size_t m) {
  Embedding emb(vertex_count, m);
  std::copy(x.data(), x.data() + x.size(), emb.coords().begin());
  return emb;
}

}  // namespace detail

namespace detail {

/// Every non-reversal VecNeg edge {A->B, C->D} as {A, B, C, D}.
inline std::vector<std::array<Vertex, 4>> opposite_sides(const Graph& g) {
  const VecNegGraph vn = build_vecneg(g);
  std::vector<std::array<Vertex, 4>> out;
  for (std::size_t i = 0; i < vn.vertex_count(); ++i) {
    const DirectedEdge e1 = vn.arc(i);
    for (std::size_t j : vn.neighbors(i)) {
      const DirectedEdge e2 = vn.arc(j);
      if (i < j && e2 != e1.reversed()) out.push_back({e1.tail, e1.head, e2.tail, e2.head});
    }
  }
  return out;
}

}  // namespace detail

/// Multi-start least-squares search for a unit-distance drawing in R^m.
///
/// Restart k draws its start uniformly from [-1.5, 1.5]^m using seed ^ k,
/// so each restart is reproducible on its own. Restarts run in index order
/// and stop at the first verified drawing; otherwise the lowest residual
/// wins (ties to the lower index). A failed search means nothing was found,
/// not that no drawing exists.
///
/// In the plane the unit 4-cycles of an injective drawing are rhombi, so a
/// first pass also pulls opposite sides of every 4-cycle into parallel.
/// Without it random starts almost always collapse a 4-cycle onto a segment.
/// The final pass is always the plain edge objective, so the guidance never
/// biases edge lengths.
inline SearchResult search_embedding(const Graph& g, const SearchConfig& cfg) {
  if (cfg.dimension < 1) throw InvalidParameter("search_embedding: dimension must be >= 1");
  if (cfg.restarts < 1) throw InvalidParameter("search_embedding: restarts must be >= 1");
  if (!(cfg.success_tol > 0.0) || !(cfg.separation_tol > 0.0)) {
    throw InvalidParameter("search_embedding: tolerances must be positive");
  }
  if (g.empty()) throw InvalidParameter("search_embedding: graph is empty");

  const std::size_t m = cfg.dimension;
  const std::size_t nv = g.vertex_count();
  // Far below success_tol in edge-length terms: |d - 1| ~ |d^2 - 1| / 2.
  const double target = std::pow(1e-2 * cfg.success_tol, 2);
  const auto sides = m == 2 ? detail::opposite_sides(g) : std::vector<std::array<Vertex, 4>>{};

  SearchResult result;
  for (std::size_t k = 0; k < cfg.restarts; ++k) {
    std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(k));
    std::uniform_real_distribution<double> box(-kInitBox, kInitBox);
    Eigen::VectorXd x(static_cast<Eigen::Index>(nv * m));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = box(rng);

    std::size_t iterations = 0;
    if (!sides.empty()) {
      iterations += detail::levenberg_marquardt(g, m, x, cfg.max_iterations, 0.0, {.opposite_sides = sides});
    }
    iterations += detail::levenberg_marquardt(g, m, x, cfg.max_iterations, target);
    if (detail::separate_coincident(x, nv, m, cfg.separation_tol, rng)) {
      iterations += detail::levenberg_marquardt(
          g, m, x, cfg.max_iterations, 0.0, {.repulsion_radius = cfg.repulsion_radius, .opposite_sides = sides});
      iterations += detail::levenberg_marquardt(g, m, x, cfg.max_iterations, target);
    }
    result.iterations_total += iterations;
    result.restarts_used = k + 1;

    Embedding emb = detail::to_embedding(x, nv, m);
    const double cost = residual(g, emb);
    const bool ok = verify_embedding(g, emb, cfg.success_tol, cfg.separation_tol).ok;
    if (ok || cost < result.best_residual || result.best_embedding.dimension() == 0) {
      result.best_embedding = std::move(emb);
      result.best_residual = cost;
    }
    if (ok) {
      result.success = true;
      break;
    }
  }
  return result;
}

}  // namespace udim
