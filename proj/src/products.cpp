#include "demkit/products.hpp"

#include <algorithm>

namespace demkit {

Vertex ProductVertexMap::find(int copy, int index) const {
  for (Vertex v = 0; v < static_cast<Vertex>(origins_.size()); ++v) {
    if (origins_[v].copy == copy && origins_[v].index == index) return v;
  }
  return -1;
}

std::vector<Vertex> ProductVertexMap::copy_vertices(int copy) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(origins_.size()); ++v) {
    if (origins_[v].copy == copy) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
    return origins_[a].index < origins_[b].index;
  });
  return out;
}

std::vector<Vertex> ProductVertexMap::index_vertices(int index) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(origins_.size()); ++v) {
    if (origins_[v].index == index) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
    return origins_[a].copy < origins_[b].copy;
  });
  return out;
}

Product join(const Graph& g, const Graph& h) {
  const int m = g.order();
  const int n = h.order();
  std::vector<Edge> edges = g.edges();
  for (const auto& e : h.edges()) edges.push_back({e.u + m, e.v + m});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
  std::vector<Origin> origins;
  for (int i = 0; i < m; ++i) origins.push_back({Factor::kG, 0, i});
  for (int j = 0; j < n; ++j) origins.push_back({Factor::kH, 0, j});
  return {Graph(m + n, std::move(edges)), ProductVertexMap(m, n, std::move(origins))};
}

Product corona(const Graph& g, const Graph& h) {
  const int m = g.order();
  const int n = h.order();
  std::vector<Edge> edges = g.edges();
  std::vector<Origin> origins;
  for (int i = 0; i < m; ++i) origins.push_back({Factor::kG, i, i});
  for (int i = 0; i < m; ++i) {
    const int base = m + i * n;
    for (int j = 0; j < n; ++j) {
      origins.push_back({Factor::kH, i, j});
      edges.push_back({i, base + j});
    }
    for (const auto& e : h.edges()) edges.push_back({base + e.u, base + e.v});
  }
  return {Graph(m * (1 + n), std::move(edges)), ProductVertexMap(m, n, std::move(origins))};
}

Product cluster(const Graph& g, const Graph& h, Vertex root) {
  if (root < 0 || root >= h.order()) {
    throw InputError("cluster root " + std::to_string(root) + " is not a vertex of H");
  }
  const int m = g.order();
  const int n = h.order();
  std::vector<Edge> edges;
  std::vector<Origin> origins;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      origins.push_back({j == root ? Factor::kG : Factor::kH, i, j});
    }
    for (const auto& e : h.edges()) edges.push_back({i * n + e.u, i * n + e.v});
  }
  for (const auto& e : g.edges()) edges.push_back({e.u * n + root, e.v * n + root});
  return {Graph(m * n, std::move(edges)), ProductVertexMap(m, n, std::move(origins))};
}

Product cartesian(const Graph& g, const Graph& h) {
  const int m = g.order();
  const int n = h.order();
  std::vector<Edge> edges;
  std::vector<Origin> origins;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) origins.push_back({Factor::kBoth, i, j});
    for (const auto& e : h.edges()) edges.push_back({i * n + e.u, i * n + e.v});
  }
  for (const auto& e : g.edges()) {
    for (int j = 0; j < n; ++j) edges.push_back({e.u * n + j, e.v * n + j});
  }
  return {Graph(m * n, std::move(edges)), ProductVertexMap(m, n, std::move(origins))};
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> local(g.order(), -1);
  for (int k = 0; k < static_cast<int>(vertices.size()); ++k) local[vertices[k]] = k;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace demkit
