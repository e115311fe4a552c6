#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "udim/embed.hpp"
#include "udim/error.hpp"
#include "udim/graph.hpp"
#include "udim/vecneg.hpp"

namespace udim {

// ---------------------------------------------------------------------------
// Edge lists
//
// One "u v" pair per line, whitespace separated. '#' starts a comment line,
// blank lines are skipped, and a line holding a single label declares a
// vertex (needed for isolated vertices and to pin vertex order). Vertices
// are numbered by first appearance.
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(std::string_view text) {
  Graph g;
  const auto vertex = [&g](const std::string& label) {
    if (auto v = g.find(label)) return *v;
    return g.add_vertex(label);
  };
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      vertex(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("expected 'labelU labelV', got " + std::to_string(tokens.size()) + " fields", line_no);
    }
    if (tokens[0] == tokens[1]) throw ParseError("self-loop at '" + tokens[0] + "'", line_no);
    const Vertex u = vertex(tokens[0]);
    const Vertex v = vertex(tokens[1]);
    if (g.adjacent(u, v)) {
      throw ParseError("duplicate edge '" + tokens[0] + "' -- '" + tokens[1] + "'", line_no);
    }
    g.add_edge(u, v);
  }
  return g;
}

/// Canonical text: edges sorted by (larger index, smaller index) and written
/// smaller first. Single-label lines are emitted only where first-appearance
/// order would otherwise differ from the index order, so parsing the output
/// reproduces g exactly.
inline std::string write_edge_list(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  std::ranges::sort(edges, [](const Edge& a, const Edge& b) {
    return std::tie(a.v, a.u) < std::tie(b.v, b.u);
  });
  std::string out;
  std::vector<bool> seen(g.vertex_count(), false);
  Vertex next = 0;  // every index below `next` has been written
  const auto declare_up_to = [&](Vertex limit) {
    for (; next < limit; ++next) {
      if (!seen[next]) {
        out += g.label(next) + "\n";
        seen[next] = true;
      }
    }
  };
  for (const auto& [u, v] : edges) {
    // v is new here; u is fine unseen only if it is the sole gap below v.
    bool gap_besides_u = false;
    for (Vertex w = next; w < v; ++w) {
      if (!seen[w] && w != u) {
        gap_besides_u = true;
        break;
      }
    }
    if (gap_besides_u) declare_up_to(v);
    out += g.label(u) + " " + g.label(v) + "\n";
    seen[u] = seen[v] = true;
    while (next < seen.size() && seen[next]) ++next;
  }
  declare_up_to(g.vertex_count());
  return out;
}

// ---------------------------------------------------------------------------
// Embedding JSON: {"dimension": m, "points": {label: [x, ...]}, "edges"?: [[u, v], ...]}
// Points keep vertex order. The optional edge list lets a drawing travel
// without its graph file.
// ---------------------------------------------------------------------------

using ordered_json = nlohmann::ordered_json;

inline ordered_json embedding_to_json(const Graph& g, const Embedding& emb, bool with_edges = false) {
  if (emb.vertex_count() != g.vertex_count()) {
    throw InvalidParameter("embedding has " + std::to_string(emb.vertex_count()) + " points for " +
                           std::to_string(g.vertex_count()) + " vertices");
  }
  ordered_json doc;
  doc["dimension"] = emb.dimension();
  ordered_json points = ordered_json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto p = emb.point(v);
    points[g.label(v)] = std::vector<double>(p.begin(), p.end());
  }
  doc["points"] = std::move(points);
  if (with_edges) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    doc["edges"] = std::move(edges);
  }
  return doc;
}

/// Doubles are written in shortest round-trip form, so parsing restores them bit for bit.
inline std::string write_embedding_json(const Graph& g, const Embedding& emb, bool with_edges = false) {
  return embedding_to_json(g, emb, with_edges).dump(2) + "\n";
}

namespace detail {

inline ordered_json parse_json(std::string_view text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

inline Embedding embedding_from_points(const ordered_json& doc, const Graph& g) {
  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("points")) {
    throw ParseError("embedding JSON needs 'dimension' and 'points'");
  }
  const auto& dim = doc["dimension"];
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw ParseError("embedding 'dimension' must be a positive integer");
  }
  const std::size_t m = dim.get<std::size_t>();
  const auto& points = doc["points"];
  if (!points.is_object()) throw ParseError("embedding 'points' must be an object");
  if (points.size() != g.vertex_count()) {
    throw ParseError("embedding has " + std::to_string(points.size()) + " points for " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  Embedding emb(g.vertex_count(), m);
  for (const auto& [label, coords] : points.items()) {
    const auto v = g.find(label);
    if (!v) throw ParseError("embedding point '" + label + "' is not a vertex of the graph");
    if (!coords.is_array() || coords.size() != m) {
      throw ParseError("point '" + label + "' does not have " + std::to_string(m) + " coordinates");
    }
    auto p = emb.point(*v);
    for (std::size_t c = 0; c < m; ++c) {
      if (!coords[c].is_number()) throw ParseError("point '" + label + "' has a non-numeric coordinate");
      p[c] = coords[c].get<double>();
    }
  }
  return emb;
}

}  // namespace detail

/// Reads a drawing of `g`; every vertex must appear exactly once.
inline Embedding parse_embedding_json(std::string_view text, const Graph& g) {
  return detail::embedding_from_points(detail::parse_json(text, "embedding"), g);
}

/// Reads a self-contained drawing: the graph comes from the point order and
/// the "edges" array (absent means no edges).
inline EmbeddedGraph parse_embedded_graph_json(std::string_view text) {
  const auto doc = detail::parse_json(text, "embedding");
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_object()) {
    throw ParseError("embedding JSON needs a 'points' object");
  }
  Graph g;
  for (const auto& [label, coords] : doc["points"].items()) g.add_vertex(label);
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError("each edge must be a pair of labels");
      }
      try {
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
      } catch (const InvalidGraph& err) {
        throw ParseError(err.what());
      }
    }
  }
  Embedding emb = detail::embedding_from_points(doc, g);
  return {std::move(g), std::move(emb)};
}

// ---------------------------------------------------------------------------
// Certificates: {"kind", "walk": [[tail, head], ...], "apex"?, "a"?, "b"?}
// All vertices by label, so a certificate survives re-reading the graph.
// ---------------------------------------------------------------------------

inline ordered_json obstruction_to_json(const Graph& g, const Obstruction& cert) {
  ordered_json doc;
  doc["kind"] = to_string(cert.kind);
  doc["length"] = cert.length();
  ordered_json walk = ordered_json::array();
  for (const auto& e : cert.walk) walk.push_back({g.label(e.tail), g.label(e.head)});
  doc["walk"] = std::move(walk);
  if (cert.kind == ObstructionKind::even_apex_walk) {
    doc["apex"] = g.label(cert.apex);
    doc["a"] = g.label(cert.a);
    doc["b"] = g.label(cert.b);
  }
  return doc;
}

inline Obstruction obstruction_from_json(const ordered_json& doc, const Graph& g) {
  const auto vertex = [&g](const ordered_json& j) {
    if (!j.is_string()) throw ParseError("certificate vertices must be labels");
    const auto v = g.find(j.get<std::string>());
    if (!v) throw ParseError("certificate names unknown vertex '" + j.get<std::string>() + "'");
    return *v;
  };
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("walk") || !doc["walk"].is_array()) {
    throw ParseError("certificate JSON needs 'kind' and 'walk'");
  }
  Obstruction cert;
  const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  if (kind == "odd_closed_walk") {
    cert.kind = ObstructionKind::odd_closed_walk;
  } else if (kind == "even_apex_walk") {
    cert.kind = ObstructionKind::even_apex_walk;
    if (!doc.contains("apex") || !doc.contains("a") || !doc.contains("b")) {
      throw ParseError("even_apex_walk certificate needs 'apex', 'a' and 'b'");
    }
    cert.apex = vertex(doc["apex"]);
    cert.a = vertex(doc["a"]);
    cert.b = vertex(doc["b"]);
  } else {
    throw ParseError("unknown certificate kind '" + kind + "'");
  }
  for (const auto& step : doc["walk"]) {
    if (!step.is_array() || step.size() != 2) throw ParseError("walk steps must be [tail, head] pairs");
    cert.walk.push_back({vertex(step[0]), vertex(step[1])});
  }
  return cert;
}

inline std::string write_obstruction_json(const Graph& g, const Obstruction& cert) {
  return obstruction_to_json(g, cert).dump(2) + "\n";
}

inline Obstruction parse_obstruction_json(std::string_view text, const Graph& g) {
  return obstruction_from_json(detail::parse_json(text, "certificate"), g);
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

inline constexpr double kSvgSize = 600.0;
inline constexpr double kSvgMargin = 0.05;
inline constexpr double kSvgVertexRadius = 3.0;

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x == 0.0 ? 0.0 : x);  // no "-0.000"
  return buf;
}

}  // namespace detail

/// Fixed 600x600 drawing. 2D points are used as is; 3D points are projected
/// to (x + 0.45 y, z + 0.25 y). The bounding box is scaled uniformly into
/// the canvas with a 5% margin, y pointing up.
inline std::string render_svg(const Graph& g, const Embedding& emb) {
  const std::size_t m = emb.dimension();
  if (m != 2 && m != 3) {
    throw InvalidParameter("render_svg: unsupported dimension " + std::to_string(m) + " (need 2 or 3)");
  }
  if (emb.vertex_count() != g.vertex_count()) {
    throw InvalidParameter("render_svg: embedding does not match graph");
  }
  std::vector<std::array<double, 2>> flat(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto p = emb.point(v);
    flat[v] = m == 2 ? std::array{p[0], p[1]} : std::array{p[0] + 0.45 * p[1], p[2] + 0.25 * p[1]};
  }
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  if (!flat.empty()) {
    lo_x = hi_x = flat[0][0];
    lo_y = hi_y = flat[0][1];
    for (const auto& [x, y] : flat) {
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double usable = kSvgSize * (1.0 - 2.0 * kSvgMargin);
  const double scale = span > 0.0 ? usable / span : 1.0;
  const double cx = 0.5 * (lo_x + hi_x);
  const double cy = 0.5 * (lo_y + hi_y);
  const auto sx = [&](double x) { return kSvgSize / 2.0 + (x - cx) * scale; };
  const auto sy = [&](double y) { return kSvgSize / 2.0 - (y - cy) * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  out += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (const auto& [u, v] : g.edges()) {
    out += "<line x1=\"" + detail::fixed(sx(flat[u][0])) + "\" y1=\"" + detail::fixed(sy(flat[u][1])) +
           "\" x2=\"" + detail::fixed(sx(flat[v][0])) + "\" y2=\"" + detail::fixed(sy(flat[v][1])) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"black\">\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "<circle cx=\"" + detail::fixed(sx(flat[v][0])) + "\" cy=\"" + detail::fixed(sy(flat[v][1])) +
           "\" r=\"" + detail::fixed(kSvgVertexRadius) + "\"/>\n";
  }
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "<text x=\"" + detail::fixed(sx(flat[v][0]) + 4.0) + "\" y=\"" + detail::fixed(sy(flat[v][1]) - 4.0) +
           "\">" + detail::xml_escape(g.label(v)) + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace udim
