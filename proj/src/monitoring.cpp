#include "demkit/monitoring.hpp"

#include <algorithm>
#include <cstdlib>

#include <json.hpp>

#include "demkit/cover.hpp"

namespace demkit {

namespace {

void check_cap(const Graph& g, const SolverLimits& limits, const char* what) {
  if (g.order() > limits.max_n || g.order() > kMaxMaskVertices) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.order()) +
                      " vertices exceeds cap " + std::to_string(limits.max_n));
  }
}

bool on_shortest_path_from(const Graph& g, Vertex x, const Edge& e) {
  const auto du = g.distance(x, e.u).hops();
  const auto dv = g.distance(x, e.v).hops();
  return du + 1 == dv || dv + 1 == du;
}

bool row_changes(const Graph& g, Vertex x, EdgeId e) {
  const auto without = distances_from(g, x, e);
  const auto with = g.distances().row(x);
  return !std::equal(with.begin(), with.end(), without.begin());
}

}  // namespace

std::vector<DetectingPair> monitored_pairs(const Graph& g, const std::vector<Vertex>& m,
                                           EdgeId e) {
  if (e < 0 || e >= g.size()) throw InputError("edge id " + std::to_string(e) + " out of range");
  std::vector<Vertex> probes = m;
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  std::vector<DetectingPair> out;
  for (Vertex x : probes) {
    if (x < 0 || x >= g.order()) throw InputError("probe " + std::to_string(x) + " out of range");
    const auto without = distances_from(g, x, e);
    for (Vertex y = 0; y < g.order(); ++y) {
      if (g.distance(x, y) != without[y]) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<EdgeId> monitored_edges(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw InputError("probe " + std::to_string(x) + " out of range");
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (on_shortest_path_from(g, x, g.edge(e)) && row_changes(g, x, e)) out.push_back(e);
  }
  return out;
}

MonitorMatrix::MonitorMatrix(int n, int m) : n_(n), m_(m), rows_(n), columns_(m, 0) {}

void MonitorMatrix::set(Vertex x, EdgeId e) {
  if (columns_[e] & bit(x)) return;
  columns_[e] |= bit(x);
  auto& row = rows_[x];
  row.insert(std::upper_bound(row.begin(), row.end(), e), e);
}

MonitorMatrix monitor_matrix(const Graph& g, const SolverLimits& limits) {
  check_cap(g, limits, "monitor matrix");
  MonitorMatrix mm(g.order(), g.size());
  for (Vertex x = 0; x < g.order(); ++x) {
    for (EdgeId e : monitored_edges(g, x)) mm.set(x, e);
  }
  return mm;
}

bool is_dem_set(const MonitorMatrix& mm, VertexMask m) {
  return std::all_of(mm.columns().begin(), mm.columns().end(),
                     [m](VertexMask col) { return (col & m) != 0; });
}

bool is_dem_set(const Graph& g, const std::vector<Vertex>& m) {
  const VertexMask mask = to_mask(m, g.order());
  SolverLimits unlimited;
  unlimited.max_n = kMaxMaskVertices;
  return is_dem_set(monitor_matrix(g, unlimited), mask);
}

std::vector<Vertex> greedy_dem(const MonitorMatrix& mm) {
  std::vector<char> covered(mm.edges(), 0);
  int remaining = mm.edges();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    Vertex best = -1;
    int best_gain = 0;
    for (Vertex x = 0; x < mm.vertices(); ++x) {
      int gain = 0;
      for (EdgeId e : mm.row(x)) gain += !covered[e];
      if (gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    for (EdgeId e : mm.row(best)) covered[e] = 1;
    remaining -= best_gain;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<Vertex> greedy_dem(const Graph& g) {
  SolverLimits unlimited;
  unlimited.max_n = kMaxMaskVertices;
  return greedy_dem(monitor_matrix(g, unlimited));
}

DemResult dem_number(const Graph& g, bool enumerate_all, const SolverLimits& limits) {
  check_cap(g, limits, "dem");
  const MonitorMatrix mm = monitor_matrix(g, limits);
  DemResult out;
  out.n = g.order();
  out.m = g.size();
  HittingSetSolver solver(g.order(), mm.columns());

  VertexMask incumbent = to_mask(greedy_dem(mm), g.order());
  const CoverResult cover = vertex_cover_number(g, limits);
  if (cover.value < popcount(incumbent)) incumbent = to_mask(cover.witness, g.order());

  const auto opt = solver.solve(incumbent);
  out.value = opt.value;
  out.witness = to_vertices(opt.witness);
  out.nodes_explored = opt.nodes;
  if (enumerate_all) {
    std::vector<std::vector<Vertex>> sets;
    for (VertexMask s : solver.enumerate(opt.value, limits.max_enumerated, &out.nodes_explored)) {
      sets.push_back(to_vertices(s));
    }
    out.all_minimum_sets = std::move(sets);
  }
  return out;
}

std::string to_json(const DemResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["dem"] = r.value;
  j["witness"] = r.witness;
  if (r.all_minimum_sets) j["all_minimum_sets"] = *r.all_minimum_sets;
  j["nodes_explored"] = r.nodes_explored;
  return j.dump();
}

}  // namespace demkit
