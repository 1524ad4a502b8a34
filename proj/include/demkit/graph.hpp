#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace demkit {

using Vertex = int;
using EdgeId = int;

/// Raised for malformed input: bad edge lists, invalid family parameters,
/// graphs that violate the simple/connected contract.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an instance is larger than a configured solver cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop count, or Infinite when the endpoints are disconnected.
/// Infinite orders after every finite value.
class Distance {
 public:
  static constexpr std::uint32_t kInfiniteHops =
      std::numeric_limits<std::uint32_t>::max();

  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}

  static constexpr Distance Infinite() { return Distance(kInfiniteHops); }

  constexpr bool is_infinite() const { return hops_ == kInfiniteHops; }
  constexpr std::uint32_t hops() const { return hops_; }

  friend constexpr auto operator<=>(const Distance&, const Distance&) = default;

 private:
  std::uint32_t hops_ = kInfiniteHops;
};

std::string to_string(Distance d);

/// Dense n x n table of distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  Distance& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
  std::span<const Distance> row(Vertex u) const {
    return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
  }

 private:
  size_t index(Vertex u, Vertex v) const {
    return static_cast<size_t>(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<Distance> d_;
};

/// Immutable simple connected undirected graph on vertices 0..n-1.
///
/// Edge ids follow the sorted (min endpoint, max endpoint) order, so they are
/// stable for a given edge set. All-pairs distances are computed once at
/// construction.
class Graph {
 public:
  struct Neighbor {
    Vertex vertex;
    EdgeId edge;
  };

  /// Throws InputError on loops, out-of-range endpoints, duplicate edges,
  /// n == 0, label count mismatch, or a disconnected result.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  std::span<const Neighbor> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool has_labels() const { return !labels_.empty(); }
  /// Display label; the decimal id when the graph carries no labels.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  const DistanceMatrix& distances() const { return dist_; }
  Distance distance(Vertex u, Vertex v) const { return dist_(u, v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Neighbor>> adj_;
  DistanceMatrix dist_;
};

/// Parses "u v" lines; '#' starts a comment line; blank lines are ignored.
/// Duplicate edges are merged. Vertices are 0..max id.
Graph parse_edge_list(std::string_view text);

/// Writes the edge list in canonical sorted order, one "u v" per line,
/// preceded by a comment line with the vertex and edge counts.
std::string write_edge_list(const Graph& g);

DistanceMatrix all_pairs_distances(const Graph& g);

/// BFS distances from `source`, optionally in g minus the edge `removed`.
std::vector<Distance> distances_from(const Graph& g, Vertex source,
                                     std::optional<EdgeId> removed = {});

int eccentricity(const Graph& g, Vertex v);
int radius(const Graph& g);
int diameter(const Graph& g);

bool is_tree(const Graph& g);

/// Repeatedly strips degree-1 vertices. Returns nullopt when nothing is left
/// (exactly when g is a tree). Labels of surviving vertices are kept; an
/// unlabeled input yields labels holding the original ids.
std::optional<Graph> base_graph(const Graph& g);

/// Structural recognizers used by the formula registry.
bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);

}  // namespace demkit
