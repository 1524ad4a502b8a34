#pragma once

#include <utility>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

enum class Factor { kG, kH, kBoth };

/// Where a product vertex came from.
///
/// join:      G vertex j -> {kG, 0, j};  H vertex j -> {kH, 0, j}
/// corona:    G vertex i -> {kG, i, i};  copy i of H, vertex j -> {kH, i, j}
/// cluster:   copy i of H, vertex j -> {kH, i, j}; the root of copy i is
///            G vertex i and is tagged {kG, i, root}
/// cartesian: (u_i, v_j) -> {kBoth, i, j}
struct Origin {
  Factor factor;
  int copy;
  int index;

  friend bool operator==(const Origin&, const Origin&) = default;
};

class ProductVertexMap {
 public:
  ProductVertexMap() = default;
  ProductVertexMap(int g_order, int h_order, std::vector<Origin> origins)
      : g_order_(g_order), h_order_(h_order), origins_(std::move(origins)) {}

  int g_order() const { return g_order_; }
  int h_order() const { return h_order_; }
  const Origin& origin(Vertex v) const { return origins_[v]; }
  const std::vector<Origin>& origins() const { return origins_; }

  /// Product vertex with the given (copy, index); -1 when absent.
  Vertex find(int copy, int index) const;

  /// Vertices with fixed copy i, ordered by index (the H_i layer / copy).
  std::vector<Vertex> copy_vertices(int copy) const;
  /// Vertices with fixed index j, ordered by copy (the G_j layer).
  std::vector<Vertex> index_vertices(int index) const;

 private:
  int g_order_ = 0;
  int h_order_ = 0;
  std::vector<Origin> origins_;
};

struct Product {
  Graph graph;
  ProductVertexMap map;
};

Product join(const Graph& g, const Graph& h);
Product corona(const Graph& g, const Graph& h);
/// Rooted product; throws InputError when root is not a vertex of h.
Product cluster(const Graph& g, const Graph& h, Vertex root = 0);
/// Vertex (u_i, v_j) gets id i * |V(h)| + j.
Product cartesian(const Graph& g, const Graph& h);

/// Subgraph of `g` induced by `vertices`, relabeled 0..k-1 in the given order.
/// Throws InputError if the induced subgraph is disconnected.
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace demkit
