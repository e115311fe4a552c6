#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udim/embed.hpp"
#include "udim/families.hpp"
#include "udim/graph.hpp"
#include "udim/io.hpp"
#include "udim/search.hpp"
#include "udim/vecneg.hpp"

namespace udim::cli {

/// Exit codes: 0 success, 1 semantic failure, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_sink(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

/// Generated family graph by name.
inline Graph family_graph(const std::string& family, std::size_t n) {
  if (family == "cycle") return cycle_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "path") return path_graph(n);
  if (family == "mobius_ladder" || family == "mobius-ladder") return mobius_ladder(n);
  if (family == "mycielski-cycle") return mycielskian(cycle_graph(n));
  throw InvalidParameter("unknown family '" + family + "'");
}

/// Closed-form drawing for a family; `dim` 0 picks the natural dimension.
inline EmbeddedGraph family_embedding(const std::string& family, std::size_t n, std::size_t dim) {
  const auto want = [&](std::size_t natural) {
    if (dim != 0 && dim != natural) {
      throw InvalidParameter("no closed-form " + std::to_string(dim) + "D embedding for " + family + " " +
                             std::to_string(n) + " (available: " + std::to_string(natural) + "D)");
    }
  };
  if (family == "cycle") {
    want(2);
    return {cycle_graph(n), embed_cycle_polygon(n)};
  }
  if (family == "complete") {
    if (n < 2) throw InvalidParameter("complete: n must be >= 2");
    want(n - 1);
    return {complete_graph(n), embed_complete_simplex(n)};
  }
  if (family == "path") {
    want(1);
    return {path_graph(n), embed_path_line(n)};
  }
  if (family == "mycielski-cycle") {
    if (dim == 2 || (dim == 0 && n == 10)) {
      if (n != 10) throw InvalidParameter("the closed-form planar Mycielskian drawing exists only for n = 10");
      return embed_mycielski_c10();
    }
    want(3);
    return embed_mycielski_cycle_3d(n);
  }
  throw InvalidParameter("no closed-form embedding for family '" + family + "'");
}

/// The generator call that reproduces g exactly, if any.
struct Recognized {
  std::string family;
  std::size_t n = 0;
};

inline std::optional<Recognized> recognize_family(const Graph& g) {
  const std::size_t v = g.vertex_count();
  const auto try_family = [&](const std::string& family, std::size_t n) -> std::optional<Recognized> {
    try {
      if (family_graph(family, n) == g) return Recognized{family, n};
    } catch (const InvalidParameter&) {
    }
    return std::nullopt;
  };
  for (const char* family : {"path", "cycle", "complete"}) {
    if (auto r = try_family(family, v)) return r;
  }
  if (v % 2 == 0) {
    if (auto r = try_family("mobius_ladder", v / 2)) return r;
  }
  if (v % 2 == 1) {
    if (auto r = try_family("mycielski-cycle", v / 2)) return r;
  }
  return std::nullopt;
}

inline ordered_json check_report(const Graph& g) {
  const LowerBound lb = lower_bound_dim(g);
  ordered_json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  doc["lower_bound"] = lb.bound;
  doc["reason"] = to_string(lb.reason);
  doc["certificate"] = lb.obstruction ? obstruction_to_json(g, *lb.obstruction) : ordered_json(nullptr);
  if (lb.cycle) {
    ordered_json cycle = ordered_json::array();
    for (Vertex v : lb.cycle->vertices) cycle.push_back(g.label(v));
    doc["cycle"] = std::move(cycle);
  }
  return doc;
}

inline ordered_json report_json(const VerificationReport& r) {
  ordered_json doc;
  doc["max_edge_residual"] = r.max_edge_residual;
  doc["min_pair_separation"] = std::isfinite(r.min_pair_separation) ? ordered_json(r.min_pair_separation)
                                                                     : ordered_json(nullptr);
  doc["ok"] = r.ok;
  return doc;
}

/// Graph plus drawing from `verify`/`plot` positionals: either
/// [graph, embedding] or a single self-contained embedding.
inline EmbeddedGraph load_drawing(const std::vector<std::string>& files, std::istream& in) {
  if (files.size() == 1) return parse_embedded_graph_json(read_source(files[0], in));
  if (files[0] == "-" && files[1] == "-") throw InvalidParameter("only one input may come from stdin");
  Graph g = parse_edge_list(read_source(files[0], in));
  Embedding emb = parse_embedding_json(read_source(files[1], in), g);
  return {std::move(g), std::move(emb)};
}

struct DimReport {
  LowerBound lower;
  int upper = 0;
  std::string upper_source;
};

/// Lower bound from the VecNeg/cycle tests; upper bound from a verified
/// closed form when g is a known family, else from search starting at the
/// lower bound, else the simplex bound V - 1.
inline DimReport dim_report(const Graph& g, const SearchConfig& base, std::size_t extra_dims) {
  DimReport r{lower_bound_dim(g), 0, {}};
  const std::size_t v = g.vertex_count();
  const int trivial_upper = v <= 2 ? 1 : static_cast<int>(v - 1);

  if (auto fam = recognize_family(g); fam && fam->family != "mobius_ladder") {
    auto drawing = family_embedding(fam->family, fam->n, 0);
    if (drawing.graph == g && verify_embedding(g, drawing.embedding).ok) {
      r.upper = static_cast<int>(drawing.embedding.dimension());
      r.upper_source = "closed form (" + fam->family + " " + std::to_string(fam->n) + ")";
      return r;
    }
  }
  for (int m = r.lower.bound; m < trivial_upper && m <= r.lower.bound + static_cast<int>(extra_dims); ++m) {
    SearchConfig cfg = base;
    cfg.dimension = static_cast<std::size_t>(m);
    if (search_embedding(g, cfg).success) {
      r.upper = m;
      r.upper_source = "search (" + std::to_string(m) + "D, verified)";
      return r;
    }
  }
  r.upper = std::max(trivial_upper, r.lower.bound);
  r.upper_source = "simplex (" + std::to_string(v) + " vertices)";
  return r;
}

inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Bounds the unit-distance dimension of graphs.", "udim"};
  app.require_subcommand(1);

  std::string family;
  std::size_t size = 0;
  std::string input;
  std::string output;
  std::size_t dim = 0;
  SearchConfig search_cfg;
  double tol_edge = kExactEdgeTolerance;
  double tol_sep = kDefaultSeparationTolerance;
  std::vector<std::string> files;
  std::size_t extra_dims = 1;

  auto* gen = app.add_subcommand("gen", "Emit a family graph as an edge list");
  gen->add_option("family", family, "cycle | complete | path | mobius_ladder")->required();
  gen->add_option("n", size, "Family size parameter")->required();
  gen->add_option("-o,--output", output, "Output file");

  auto* myc = app.add_subcommand("mycielski", "Mycielskian of an edge list");
  myc->add_option("input", input, "Edge list (default: stdin)");
  myc->add_option("-o,--output", output, "Output file");

  auto* check = app.add_subcommand("check", "Lower bound with certificate (JSON)");
  check->add_option("input", input, "Edge list (default: stdin)");
  check->add_option("-o,--output", output, "Output file");

  auto* embed = app.add_subcommand("embed", "Closed-form embedding (JSON)");
  embed->add_option("family", family, "cycle | complete | path | mycielski-cycle")->required();
  embed->add_option("n", size, "Family size parameter")->required();
  embed->add_option("--dim", dim, "Target dimension (default: the construction's own)");
  embed->add_option("-o,--output", output, "Output file");

  auto* search = app.add_subcommand("search", "Numerical embedding search (JSON)");
  search->add_option("input", input, "Edge list (default: stdin)");
  search->add_option("--dim", search_cfg.dimension, "Target dimension")->required()->check(CLI::PositiveNumber);
  search->add_option("--restarts", search_cfg.restarts, "Random restarts")->capture_default_str();
  search->add_option("--seed", search_cfg.seed, "Base seed")->capture_default_str();
  search->add_option("--max-iterations", search_cfg.max_iterations, "Iterations per pass")->capture_default_str();
  search->add_option("--success-tol", search_cfg.success_tol, "Edge tolerance")->capture_default_str();
  search->add_option("--separation-tol", search_cfg.separation_tol, "Injectivity tolerance")
      ->capture_default_str();
  search->add_option("-o,--output", output, "Output file");

  auto* verify = app.add_subcommand("verify", "Check an embedding; exit 0 iff it is a unit-distance drawing");
  verify->add_option("files", files, "[graph] embedding ('-' for stdin)")->required()->expected(1, 2);
  verify->add_option("--tol-edge", tol_edge, "Edge-length tolerance")->capture_default_str();
  verify->add_option("--tol-sep", tol_sep, "Minimum vertex separation")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Render an embedding as SVG");
  plot->add_option("files", files, "[graph] embedding ('-' for stdin)")->required()->expected(1, 2);
  plot->add_option("-o,--output", output, "Output SVG (default: stdout)");

  auto* dimc = app.add_subcommand("dim", "Report lower <= dim <= upper");
  dimc->add_option("input", input, "Edge list (default: stdin)");
  dimc->add_option("--restarts", search_cfg.restarts, "Search restarts")->capture_default_str();
  dimc->add_option("--seed", search_cfg.seed, "Search seed")->capture_default_str();
  dimc->add_option("--extra-dims", extra_dims, "Dimensions above the lower bound to search")
      ->capture_default_str();

  std::vector<const char*> argv{"udim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return kUsage;
  }

  try {
    if (*gen) {
      if (family == "mycielski-cycle") throw InvalidParameter("unknown family 'mycielski-cycle'");
      write_sink(output, write_edge_list(family_graph(family, size)), io.out);
    } else if (*myc) {
      write_sink(output, write_edge_list(mycielskian(parse_edge_list(read_source(input, io.in)))), io.out);
    } else if (*check) {
      const Graph g = parse_edge_list(read_source(input, io.in));
      write_sink(output, check_report(g).dump(2) + "\n", io.out);
    } else if (*embed) {
      const auto drawing = family_embedding(family, size, dim);
      write_sink(output, write_embedding_json(drawing.graph, drawing.embedding, true), io.out);
    } else if (*search) {
      const Graph g = parse_edge_list(read_source(input, io.in));
      const SearchResult r = search_embedding(g, search_cfg);
      if (!r.success) {
        io.err << "no embedding found in " << search_cfg.dimension << "D after " << r.restarts_used
               << " restarts (best residual " << r.best_residual << ")\n";
        return kFailure;
      }
      write_sink(output, write_embedding_json(g, r.best_embedding, true), io.out);
    } else if (*verify) {
      const auto drawing = load_drawing(files, io.in);
      const auto report = verify_embedding(drawing.graph, drawing.embedding, tol_edge, tol_sep);
      io.out << report_json(report).dump(2) << "\n";
      return report.ok ? kOk : kFailure;
    } else if (*plot) {
      const auto drawing = load_drawing(files, io.in);
      write_sink(output, render_svg(drawing.graph, drawing.embedding), io.out);
    } else if (*dimc) {
      const Graph g = parse_edge_list(read_source(input, io.in));
      const auto r = dim_report(g, search_cfg, extra_dims);
      io.out << "lower_bound: " << r.lower.bound << " (" << to_string(r.lower.reason) << ")\n";
      io.out << "upper_bound: " << r.upper << " (" << r.upper_source << ")\n";
      if (r.lower.bound == r.upper) {
        io.out << "dim = " << r.upper << "\n";
      } else {
        io.out << r.lower.bound << " <= dim <= " << r.upper << "\n";
      }
    }
  } catch (const Error& e) {
    io.err << "udim: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace udim::cli
