// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "udim/cli.hpp"
#include "udim/udim.hpp"

namespace {

using namespace udim;

// Every graph any criterion touched, with what was learned about it.
struct CorpusEntry {
  Graph graph;
  bool obstructed = false;
  bool checked_obstruction = false;
  std::size_t lowest_verified_dim = 0;  // 0 = none
};

std::map<std::string, CorpusEntry> corpus;

void note_graph(const std::string& name, const Graph& g) {
  corpus.try_emplace(name, CorpusEntry{g});
}

void note_obstruction(const std::string& name, const Graph& g, bool obstructed) {
  note_graph(name, g);
  auto& e = corpus.at(name);
  e.obstructed = e.obstructed || obstructed;
  e.checked_obstruction = true;
}

void note_embedding(const std::string& name, const Graph& g, std::size_t dim) {
  note_graph(name, g);
  auto& e = corpus.at(name);
  if (e.lowest_verified_dim == 0 || dim < e.lowest_verified_dim) e.lowest_verified_dim = dim;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome timed(double limit, const std::function<Outcome()>& body, double& elapsed) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  elapsed = seconds_since(t0);
  if (o.ok && elapsed >= limit) return fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit));
  return o;
}

std::string mc(std::size_t n) { return "M(C" + std::to_string(n) + ")"; }

Outcome criterion_1() {
  for (std::size_t n = 3; n <= 30; ++n) {
    const Graph g = mycielskian(cycle_graph(n));
    const auto doc = cli::check_report(g);
    const int bound = doc["lower_bound"].get<int>();
    const bool has_cert = !doc["certificate"].is_null();
    note_obstruction(mc(n), g, has_cert);
    if (n == 10) {
      if (bound != 2 || has_cert) return fail("M(C10): bound " + std::to_string(bound));
      continue;
    }
    if (bound != 3 || !has_cert) return fail(mc(n) + ": bound " + std::to_string(bound));
    const Obstruction cert = obstruction_from_json(doc["certificate"], g);
    if (!validate_obstruction(g, cert)) return fail(mc(n) + ": certificate does not validate");
  }
  return {true, "n=3..30: bound 3 with valid certificate, n=10: bound 2"};
}

Outcome criterion_2() {
  const auto [g, e] = embed_mycielski_c10();
  const auto r = verify_embedding(g, e, 1e-12, 0.6);
  if (g.edge_count() != 40) return fail("edge count " + std::to_string(g.edge_count()));
  if (!r.ok || r.max_edge_residual > 1e-12 || r.min_pair_separation < 0.6) {
    return fail("residual " + std::to_string(r.max_edge_residual) + " sep " + std::to_string(r.min_pair_separation));
  }
  note_embedding(mc(10), g, 2);
  const auto dim = cli::dim_report(g, {}, 1);
  if (dim.lower.bound != 2 || dim.upper != 2) {
    return fail("dim interval [" + std::to_string(dim.lower.bound) + "," + std::to_string(dim.upper) + "]");
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max residual %.2e, min separation %.4f, dim interval [2,2]", r.max_edge_residual,
                r.min_pair_separation);
  return {true, buf};
}

Outcome criterion_3() {
  double worst = 0.0;
  for (std::size_t n = 3; n <= 200; ++n) {
    const auto [g, e] = embed_mycielski_cycle_3d(n);
    const auto r = verify_embedding(g, e, 1e-9, 1e-6);
    if (!r.ok) return fail(mc(n) + ": residual " + std::to_string(r.max_edge_residual));
    worst = std::max(worst, r.max_edge_residual);
    if (n <= 30) note_embedding(mc(n), g, 3);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "n=3..200 verified, worst residual %.2e", worst);
  return {true, buf};
}

Outcome criterion_4() {
  for (std::size_t k = 3; k <= 15; ++k) {
    const Graph g = mobius_ladder(k);
    const std::string name = "M_" + std::to_string(k);
    const auto cert = find_obstruction(g);
    note_obstruction(name, g, cert.has_value());
    if (!cert || cert->kind != ObstructionKind::odd_closed_walk) return fail(name + ": no odd closed walk");
    if (!validate_obstruction(g, *cert)) return fail(name + ": found walk does not validate");
    const Obstruction explicit_walk = mobius_ladder_certificate(k);
    if (explicit_walk.length() != 2 * k - 1 || !validate_obstruction(g, explicit_walk)) {
      return fail(name + ": explicit walk rejected");
    }
  }
  return {true, "k=3..15: odd closed walks found, explicit length-(2k-1) walks valid"};
}

Outcome criterion_5() {
  for (std::size_t n = 3; n <= 100; ++n) {
    const Graph g = cycle_graph(n);
    if (!verify_embedding(g, embed_cycle_polygon(n)).ok) return fail("polygon " + std::to_string(n));
    note_embedding("C" + std::to_string(n), g, 2);
    const auto doc = cli::check_report(g);
    note_obstruction("C" + std::to_string(n), g, !doc["certificate"].is_null());
    if (doc["lower_bound"] != 2 || !doc["certificate"].is_null()) return fail("check C" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    const Graph g = complete_graph(n);
    if (!verify_embedding(g, embed_complete_simplex(n)).ok) return fail("simplex " + std::to_string(n));
    note_embedding("K" + std::to_string(n), g, n - 1);
  }
  return {true, "polygons n=3..100, simplices n=2..12, check C_n bound 2"};
}

Outcome criterion_6() {
  std::size_t arcs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = testing::random_graph(1 + seed % 12, 0.4, 0xACCE55 + seed);
    const VecNegGraph vn = build_vecneg(g);
    note_obstruction("random#" + std::to_string(seed), g, find_obstruction(vn).has_value());
    arcs += vn.vertex_count();
    for (std::size_t i = 0; i < vn.vertex_count(); ++i) {
      const auto nb = vn.neighbors(i);
      for (std::size_t j = 0; j < vn.vertex_count(); ++j) {
        if (std::ranges::binary_search(nb, j) != vecneg_adjacent(g, vn.arc(i), vn.arc(j))) {
          return fail("seed " + std::to_string(seed) + " arcs " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
  }
  return {true, "200 graphs, " + std::to_string(arcs) + " arcs, adjacency identical"};
}

Outcome criterion_7() {
  const auto [g, e] = embed_mycielski_c10();
  const VecNegGraph vn = build_vecneg(g);
  double worst = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < vn.vertex_count(); ++i) {
    for (std::size_t j : vn.neighbors(i)) {
      const auto a = vn.arc(i);
      const auto b = vn.arc(j);
      double s2 = 0.0;
      for (std::size_t c = 0; c < 2; ++c) {
        const double s = (e.point(a.head)[c] - e.point(a.tail)[c]) + (e.point(b.head)[c] - e.point(b.tail)[c]);
        s2 += s * s;
      }
      worst = std::max(worst, std::sqrt(s2));
      ++pairs;
    }
  }
  if (worst > 1e-9) return fail("largest |AB + CD| = " + std::to_string(worst));
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu adjacent pairs, largest |AB + CD| = %.2e", pairs / 2, worst);
  return {true, buf};
}

Outcome criterion_8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  double worst = 0.0;
  const std::vector<std::pair<std::string, Graph>> graphs{
      {"C5", cycle_graph(5)}, {"K4", complete_graph(4)}, {mc(5), mycielskian(cycle_graph(5))}};
  for (const auto& [name, g] : graphs) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x(g.vertex_count() * 2);
      for (double& v : x) v = box(rng);
      const double err = testing::relative_error(residual_gradient(g, x, 2),
                                                 testing::finite_difference_gradient(g, x, 2, 1e-5));
      worst = std::max(worst, err);
      if (err > 1e-6) return fail(name + " trial " + std::to_string(trial) + ": " + std::to_string(err));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "60 configurations, worst relative error %.2e", worst);
  return {true, buf};
}

Outcome criterion_9() {
  const Graph g = mycielskian(cycle_graph(10));
  const SearchConfig cfg;
  const SearchResult r = search_embedding(g, cfg);
  const auto report = verify_embedding(g, r.best_embedding, cfg.success_tol, cfg.separation_tol);
  if (!r.success || !report.ok || report.max_edge_residual > 1e-6) {
    return fail("M(C10) 2D search failed, best residual " + std::to_string(r.best_residual));
  }
  note_embedding(mc(10), g, 2);

  SearchConfig line = cfg;
  line.dimension = 1;
  const Graph tri = complete_graph(3);
  const SearchResult t = search_embedding(tri, line);
  if (t.success) {
    note_embedding("C3", tri, 1);
    return fail("C3 reported embeddable on a line");
  }
  if (!(t.best_residual > 1e-2)) return fail("C3 1D best residual " + std::to_string(t.best_residual));
  SearchConfig plane = cfg;
  plane.restarts = 5;
  if (search_embedding(tri, plane).success) note_embedding("C3", tri, 2);

  char buf[160];
  std::snprintf(buf, sizeof buf, "M(C10) 2D found on restart %zu (edge residual %.1e); C3 1D best residual %.4f",
                r.restarts_used, report.max_edge_residual, t.best_residual);
  return {true, buf};
}

Outcome criterion_10() {
  // Short planar searches on the small obstructed graphs, on top of the
  // embeddings recorded by the other criteria.
  SearchConfig probe;
  probe.restarts = 3;
  probe.max_iterations = 500;
  std::size_t probed = 0;
  for (auto& [name, entry] : corpus) {
    if (!entry.checked_obstruction) note_obstruction(name, entry.graph, find_obstruction(entry.graph).has_value());
    if (!entry.obstructed || entry.graph.vertex_count() > 25) continue;
    ++probed;
    if (search_embedding(entry.graph, probe).success) note_embedding(name, entry.graph, 2);
  }
  std::size_t obstructed = 0;
  for (const auto& [name, entry] : corpus) {
    if (!entry.obstructed) continue;
    ++obstructed;
    if (entry.lowest_verified_dim != 0 && entry.lowest_verified_dim <= 2) {
      return fail(name + " has an obstruction and a verified " + std::to_string(entry.lowest_verified_dim) +
                  "D embedding");
    }
  }
  return {true, std::to_string(corpus.size()) + " graphs, " + std::to_string(obstructed) + " obstructed, " +
                    std::to_string(probed) + " probed by planar search, no conflicts"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;
    Outcome (*body)();
  };
  const double none = 1e9;
  const Criterion criteria[] = {{1, 5.0, criterion_1}, {2, none, criterion_2}, {3, 5.0, criterion_3},
                                {4, none, criterion_4}, {5, none, criterion_5}, {6, none, criterion_6},
                                {7, none, criterion_7}, {8, none, criterion_8}, {9, 30.0, criterion_9},
                                {10, none, criterion_10}};
  int failures = 0;
  for (const auto& c : criteria) {
    double elapsed = 0.0;
    Outcome o;
    try {
      o = timed(c.limit, c.body, elapsed);
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, elapsed, o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
