#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demkit/graph.hpp"
#include "demkit/limits.hpp"

namespace demkit {

/// Brute-force reference solvers for the distance-based parameters that the
/// DEM number is compared against. All search subsets by increasing size in
/// lexicographic order, so the witness is the lexicographically first
/// minimum set. Each throws CapExceeded above limits.comparison_max_n.

struct DimensionResult {
  int value = 0;
  std::vector<Vertex> witness;
};

/// Every vertex pair u != v has some s in S with d(u,s) != d(v,s).
bool is_resolving_set(const Graph& g, const std::vector<Vertex>& s);
/// Every edge pair is separated, with d(e,s) = min(d(a,s), d(b,s)) for e = ab.
bool is_edge_resolving_set(const Graph& g, const std::vector<Vertex>& s);
/// Every vertex pair u,v has s in S with v on a shortest u-s path or u on a
/// shortest v-s path.
bool is_strong_resolving_set(const Graph& g, const std::vector<Vertex>& s);

DimensionResult metric_dimension(const Graph& g, const SolverLimits& limits = {});
DimensionResult edge_metric_dimension(const Graph& g, const SolverLimits& limits = {});
DimensionResult strong_metric_dimension(const Graph& g, const SolverLimits& limits = {});

/// One row of the comparison table; a parameter is empty when its solver cap
/// was exceeded.
struct ComparisonRow {
  std::string graph;
  int n = 0;
  int m = 0;
  std::optional<DimensionResult> dem;
  std::optional<DimensionResult> dim;
  std::optional<DimensionResult> edim;
  std::optional<DimensionResult> dim_s;
};

ComparisonRow compare_parameters(const std::string& name, const Graph& g,
                                 const SolverLimits& limits = {});

/// Header "graph,n,m,dem,dim,edim,dim_s" then one line per row; a capped
/// value prints as "NA". Commas inside the graph name become ';'.
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

}  // namespace demkit
