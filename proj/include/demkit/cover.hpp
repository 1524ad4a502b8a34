#pragma once

#include <vector>

#include "demkit/graph.hpp"
#include "demkit/limits.hpp"

namespace demkit {

struct CoverResult {
  int value = 0;
  std::vector<Vertex> witness;  // lexicographically smallest minimum cover
  std::int64_t nodes_explored = 0;
};

/// Throws InputError for ids outside the graph.
bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& s);

/// Exact c(G) by branch and bound. Throws CapExceeded when
/// g.order() > limits.max_n.
CoverResult vertex_cover_number(const Graph& g, const SolverLimits& limits = {});

}  // namespace demkit
