#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "udim/error.hpp"
#include "udim/families.hpp"
#include "udim/graph.hpp"

namespace udim {

/// Points in R^m, one per vertex of a graph, stored row-major.
class Embedding {
 public:
  Embedding() = default;
  Embedding(std::size_t vertex_count, std::size_t dimension)
      : dimension_(dimension), coords_(vertex_count * dimension, 0.0) {
    if (dimension == 0) throw InvalidParameter("embedding dimension must be positive");
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t vertex_count() const noexcept { return dimension_ == 0 ? 0 : coords_.size() / dimension_; }

  std::span<double> point(Vertex v) { return std::span(coords_).subspan(v * dimension_, dimension_); }
  std::span<const double> point(Vertex v) const {
    return std::span(coords_).subspan(v * dimension_, dimension_);
  }

  std::span<double> coords() noexcept { return coords_; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<double> coords_;
};

inline double distance(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(sum);
}

struct VerificationReport {
  double max_edge_residual = 0.0;
  double min_pair_separation = std::numeric_limits<double>::infinity();
  bool ok = false;
};

inline constexpr double kExactEdgeTolerance = 1e-9;
inline constexpr double kDefaultSeparationTolerance = 1e-6;

/// Checks every edge has length 1 within tol_edge and every pair of distinct
/// vertices is at least tol_sep apart. Non-edges may sit at unit distance.
inline VerificationReport verify_embedding(const Graph& g, const Embedding& emb,
                                           double tol_edge = kExactEdgeTolerance,
                                           double tol_sep = kDefaultSeparationTolerance) {
  if (emb.dimension() == 0) throw InvalidParameter("verify_embedding: embedding has dimension 0");
  if (emb.vertex_count() != g.vertex_count()) {
    throw InvalidParameter("verify_embedding: embedding has " + std::to_string(emb.vertex_count()) +
                           " points for " + std::to_string(g.vertex_count()) + " vertices");
  }
  if (!(tol_edge > 0.0) || !(tol_sep > 0.0)) {
    throw InvalidParameter("verify_embedding: tolerances must be positive");
  }
  VerificationReport report;
  bool finite = std::ranges::all_of(emb.coords(), [](double x) { return std::isfinite(x); });
  for (const auto& [u, v] : g.edges()) {
    report.max_edge_residual =
        std::max(report.max_edge_residual, std::abs(distance(emb.point(u), emb.point(v)) - 1.0));
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      report.min_pair_separation = std::min(report.min_pair_separation, distance(emb.point(u), emb.point(v)));
    }
  }
  report.ok = finite && report.max_edge_residual <= tol_edge && report.min_pair_separation >= tol_sep;
  return report;
}

/// Regular n-gon with unit sides: vertex j at angle 2*pi*j/n.
inline Embedding embed_cycle_polygon(std::size_t n) {
  if (n < 3) throw InvalidParameter("embed_cycle_polygon: n must be >= 3");
  const double radius = 1.0 / (2.0 * std::sin(std::numbers::pi / static_cast<double>(n)));
  Embedding emb(n, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    emb.point(j)[0] = radius * std::cos(angle);
    emb.point(j)[1] = radius * std::sin(angle);
  }
  return emb;
}

/// Unit-edge regular simplex on n points in R^(n-1). Point k sits above the
/// centroid of points 0..k-1 along the new axis k-1.
inline Embedding embed_complete_simplex(std::size_t n) {
  if (n < 2) throw InvalidParameter("embed_complete_simplex: n must be >= 2");
  const std::size_t m = n - 1;
  Embedding emb(n, m);
  std::vector<double> centroid(m, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    // centroid of points 0..k-1
    std::ranges::fill(centroid, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < m; ++c) centroid[c] += emb.point(i)[c];
    }
    for (double& c : centroid) c /= static_cast<double>(k);
    const double r = distance(centroid, emb.point(0));
    auto p = emb.point(k);
    std::ranges::copy(centroid, p.begin());
    p[k - 1] = std::sqrt(1.0 - r * r);
  }
  return emb;
}

/// Points on a line at 0, 1, 2, ...
inline Embedding embed_path_line(std::size_t n) {
  if (n < 1) throw InvalidParameter("embed_path_line: n must be >= 1");
  Embedding emb(n, 1);
  for (std::size_t j = 0; j < n; ++j) emb.point(j)[0] = static_cast<double>(j);
  return emb;
}

/// A graph together with a drawing of it.
struct EmbeddedGraph {
  Graph graph;
  Embedding embedding;
};

/// Planar M(C10): apex at the origin, shadow j at e^{i*pi*j/5}, copy j at
/// phi * e^{i*pi*j/5}. Unit inner-to-outer edges rely on cos 36° = phi/2.
inline EmbeddedGraph embed_mycielski_c10() {
  constexpr std::size_t n = 10;
  const double phi = std::numbers::phi;
  EmbeddedGraph out{mycielskian(cycle_graph(n)), Embedding(2 * n + 1, 2)};
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = std::numbers::pi * static_cast<double>(j) / 5.0;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    out.embedding.point(j)[0] = phi * c;
    out.embedding.point(j)[1] = phi * s;
    out.embedding.point(n + j)[0] = c;
    out.embedding.point(n + j)[1] = s;
  }
  return out;
}

/// Three-layer construction for M(C_n) in R^3.
///
/// Copies sit on a circle of radius outer_radius at height `height`, shadows
/// on a circle of radius inner_radius at height 0, apex at (0, 0, -apex_depth).
/// Copy j and shadow j share the angle 2*pi*step*j/n; step is coprime to n.
struct RingParameters {
  std::size_t n = 0;
  std::size_t step = 1;
  double outer_radius = 0.0;
  double inner_radius = 0.0;
  double height = 0.0;
  double apex_depth = 0.0;
};

inline constexpr double kMinInnerRadius = 1e-3;
inline constexpr double kMinRingHeight = 1e-6;

/// Height that makes shadow j to copy j±1 a unit edge, or nullopt when the
/// in-plane gap already exceeds 1.
inline std::optional<double> ring_height(std::size_t n, std::size_t step, double inner_radius) {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(step) / static_cast<double>(n);
  const double outer = 1.0 / (2.0 * std::sin(theta / 2.0));
  const double planar = outer * outer + inner_radius * inner_radius - 2.0 * outer * inner_radius * std::cos(theta);
  if (planar > 1.0) return std::nullopt;
  return std::sqrt(1.0 - planar);
}

/// Inner radii (before clamping to (0, 1]) for which ring_height exists:
/// [R cos(theta) - sin(theta/2), R cos(theta) + sin(theta/2)].
inline std::pair<double, double> inner_radius_interval(std::size_t n, std::size_t step) {
  const double half = std::numbers::pi * static_cast<double>(step) / static_cast<double>(n);
  const double outer = 1.0 / (2.0 * std::sin(half));
  const double centre = outer * std::cos(2.0 * half);
  return {centre - std::sin(half), centre + std::sin(half)};
}

/// Angular step for the rings. With step 1 the copies form a unit-side
/// regular n-gon, but then the inner radius must exceed R - 1 while the apex
/// edge caps it at 1, which only works for n <= 9. Larger n use the least
/// step >= n/4 coprime to n, keeping sin(pi*step/n) well above sin(pi/10).
inline std::size_t ring_step(std::size_t n) {
  if (n < 3) throw InvalidParameter("ring_step: n must be >= 3");
  if (n < 10) return 1;
  for (std::size_t q = (n + 3) / 4; 2 * q < n; ++q) {
    if (std::gcd(q, n) == 1) return q;
  }
  throw InvalidParameter("ring_step: no admissible step for n = " + std::to_string(n));
}

inline RingParameters ring_parameters(std::size_t n) {
  const std::size_t step = ring_step(n);
  const auto [low_raw, high_raw] = inner_radius_interval(n, step);
  const double lo = std::max(kMinInnerRadius, low_raw);
  const double hi = std::min(1.0, high_raw);
  if (!(lo < hi)) {
    throw InvalidParameter("ring_parameters: empty inner-radius interval for n = " + std::to_string(n));
  }
  double rho = lo + 0.5 * (hi - lo);
  auto h = ring_height(n, step, rho);
  for (int i = 0; i < 64 && (!h || *h < kMinRingHeight); ++i) {
    rho = lo + 0.5 * (rho - lo);
    h = ring_height(n, step, rho);
  }
  if (!h || *h < kMinRingHeight) {
    throw InvalidParameter("ring_parameters: could not separate layers for n = " + std::to_string(n));
  }
  RingParameters p;
  p.n = n;
  p.step = step;
  p.outer_radius = 1.0 / (2.0 * std::sin(std::numbers::pi * static_cast<double>(step) / static_cast<double>(n)));
  p.inner_radius = rho;
  p.height = *h;
  p.apex_depth = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  return p;
}

/// Unit-distance drawing of M(C_n) in R^3 from ring_parameters(n).
inline EmbeddedGraph embed_mycielski_cycle_3d(std::size_t n) {
  if (n < 3) throw InvalidParameter("embed_mycielski_cycle_3d: n must be >= 3");
  const RingParameters p = ring_parameters(n);
  EmbeddedGraph out{mycielskian(cycle_graph(n)), Embedding(2 * n + 1, 3)};
  for (std::size_t j = 0; j < n; ++j) {
    // Reduce before converting so the angle stays exact for large n.
    const std::size_t turns = (p.step * j) % n;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) / static_cast<double>(n);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    auto outer = out.embedding.point(j);
    outer[0] = p.outer_radius * c;
    outer[1] = p.outer_radius * s;
    outer[2] = p.height;
    auto inner = out.embedding.point(n + j);
    inner[0] = p.inner_radius * c;
    inner[1] = p.inner_radius * s;
    inner[2] = 0.0;
  }
  out.embedding.point(2 * n)[2] = -p.apex_depth;
  return out;
}

}  // namespace udim
