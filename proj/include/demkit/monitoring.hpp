#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "demkit/graph.hpp"
#include "demkit/hitting_set.hpp"
#include "demkit/limits.hpp"

namespace demkit {

/// (probe x, target y) with d_G(x, y) != d_{G-e}(x, y).
using DetectingPair = std::pair<Vertex, Vertex>;

/// P(M, e): all detecting pairs for edge e with the probe drawn from m.
/// Sorted by (probe, target). A bridge counts: Infinite differs from every
/// finite distance.
std::vector<DetectingPair> monitored_pairs(const Graph& g, const std::vector<Vertex>& m,
                                           EdgeId e);

/// EM(x): ids of the edges monitored by probe x, ascending.
///
/// Only edges (u, v) with |d(x,u) - d(x,v)| == 1 lie on a shortest path from
/// x; every other edge is skipped without a BFS.
std::vector<EdgeId> monitored_edges(const Graph& g, Vertex x);

/// The V x E relation "x monitors e", kept in both orientations.
class MonitorMatrix {
 public:
  MonitorMatrix(int n, int m);

  int vertices() const { return n_; }
  int edges() const { return m_; }

  bool monitors(Vertex x, EdgeId e) const { return (columns_[e] & bit(x)) != 0; }
  /// Probes monitoring edge e.
  VertexMask column(EdgeId e) const { return columns_[e]; }
  const std::vector<VertexMask>& columns() const { return columns_; }
  /// Edges monitored by x, ascending.
  const std::vector<EdgeId>& row(Vertex x) const { return rows_[x]; }

  void set(Vertex x, EdgeId e);

  friend bool operator==(const MonitorMatrix&, const MonitorMatrix&) = default;

 private:
  int n_;
  int m_;
  std::vector<std::vector<EdgeId>> rows_;
  std::vector<VertexMask> columns_;
};

/// Throws CapExceeded above limits.max_n vertices.
MonitorMatrix monitor_matrix(const Graph& g, const SolverLimits& limits = {});

bool is_dem_set(const MonitorMatrix& mm, VertexMask m);
/// Throws InputError for ids outside the graph.
bool is_dem_set(const Graph& g, const std::vector<Vertex>& m);

struct DemResult {
  int n = 0;
  int m = 0;
  int value = 0;
  std::vector<Vertex> witness;  // lexicographically smallest
  std::optional<std::vector<std::vector<Vertex>>> all_minimum_sets;
  std::int64_t nodes_explored = 0;
};

/// Exact dem(G) as a minimum hitting set of the monitor-matrix columns.
/// With enumerate_all, every minimum DEM set is listed (lexicographic order).
/// Throws CapExceeded above limits.max_n vertices or limits.max_enumerated sets.
DemResult dem_number(const Graph& g, bool enumerate_all = false,
                     const SolverLimits& limits = {});

/// Greedy set cover: repeatedly add the vertex monitoring the most unmonitored
/// edges, lowest id on ties. Returned ascending.
std::vector<Vertex> greedy_dem(const Graph& g);
std::vector<Vertex> greedy_dem(const MonitorMatrix& mm);

/// {"n":..,"m":..,"dem":..,"witness":[..],"all_minimum_sets":[[..]],"nodes_explored":..}
/// all_minimum_sets appears only when enumerated.
std::string to_json(const DemResult& r);

}  // namespace demkit
