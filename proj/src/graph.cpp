#include "demkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

namespace demkit {

std::string to_string(Distance d) {
  return d.is_infinite() ? "inf" : std::to_string(d.hops());
}

namespace {

// Returns a vertex not reachable from 0, or -1 when connected.
Vertex find_unreached(int n, const std::vector<std::vector<Graph::Neighbor>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : adj[v]) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        stack.push_back(nb.vertex);
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) return v;
  }
  return -1;
}

std::vector<Distance> bfs(int n, const std::vector<std::vector<Graph::Neighbor>>& adj,
                          Vertex source, EdgeId removed) {
  std::vector<Distance> dist(n, Distance::Infinite());
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = Distance(0);
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const Distance next(dist[v].hops() + 1);
    for (const auto& nb : adj[v]) {
      if (nb.edge == removed || !dist[nb.vertex].is_infinite()) continue;
      dist[nb.vertex] = next;
      queue.push_back(nb.vertex);
    }
  }
  return dist;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ <= 0) throw InputError("graph has no vertices");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw InputError("label count does not match vertex count");
  }
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw InputError("loop edge at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) +
                       " " + std::to_string(e.v));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw InputError("parallel edge " + std::to_string(dup->u) + " " +
                     std::to_string(dup->v));
  }
  adj_.resize(n_);
  for (EdgeId id = 0; id < size(); ++id) {
    adj_[edges_[id].u].push_back({edges_[id].v, id});
    adj_[edges_[id].v].push_back({edges_[id].u, id});
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  if (const Vertex lost = find_unreached(n_, adj_); lost >= 0) {
    throw InputError("graph is disconnected: vertex 0 and vertex " +
                     std::to_string(lost) + " lie in different components");
  }
  dist_ = DistanceMatrix(n_);
  for (Vertex s = 0; s < n_; ++s) {
    const auto row = bfs(n_, adj_, s, -1);
    for (Vertex t = 0; t < n_; ++t) dist_.at(s, t) = row[t];
  }
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int max_id = -1;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tok[2];
    std::string extra;
    if (!(fields >> tok[0] >> tok[1]) || (fields >> extra)) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected two vertex ids");
    }
    int ids[2];
    for (int k = 0; k < 2; ++k) {
      const auto* b = tok[k].data();
      const auto* end = b + tok[k].size();
      auto [ptr, ec] = std::from_chars(b, end, ids[k]);
      if (ec != std::errc() || ptr != end || ids[k] < 0) {
        throw InputError("line " + std::to_string(line_no) +
                         ": not a vertex id: '" + tok[k] + "'");
      }
    }
    if (ids[0] == ids[1]) {
      throw InputError("line " + std::to_string(line_no) + ": loop edge at vertex " +
                       std::to_string(ids[0]));
    }
    edges.push_back({std::min(ids[0], ids[1]), std::max(ids[0], ids[1])});
    max_id = std::max({max_id, ids[0], ids[1]});
  }
  if (edges.empty()) throw InputError("edge list is empty");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(max_id + 1, std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << " m=" << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto row = distances_from(g, s);
    for (Vertex t = 0; t < g.order(); ++t) d.at(s, t) = row[t];
  }
  return d;
}

std::vector<Distance> distances_from(const Graph& g, Vertex source,
                                     std::optional<EdgeId> removed) {
  std::vector<Distance> dist(g.order(), Distance::Infinite());
  std::deque<Vertex> queue{source};
  dist[source] = Distance(0);
  const EdgeId skip = removed.value_or(-1);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(v)) {
      if (nb.edge == skip || !dist[nb.vertex].is_infinite()) continue;
      dist[nb.vertex] = Distance(dist[v].hops() + 1);
      queue.push_back(nb.vertex);
    }
  }
  return dist;
}

int eccentricity(const Graph& g, Vertex v) {
  const auto row = g.distances().row(v);
  return static_cast<int>(std::max_element(row.begin(), row.end())->hops());
}

int radius(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, eccentricity(g, v));
  return best;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1; }

std::optional<Graph> base_graph(const Graph& g) {
  if (is_tree(g)) return std::nullopt;
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    alive[v] = 0;
    for (const auto& nb : g.neighbors(v)) {
      if (alive[nb.vertex] && --deg[nb.vertex] == 1) leaves.push_back(nb.vertex);
    }
  }
  std::vector<Vertex> new_id(n, -1);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    new_id[v] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (alive[e.u] && alive[e.v]) edges.push_back({new_id[e.u], new_id[e.v]});
  }
  const int order = static_cast<int>(labels.size());
  return Graph(order, std::move(edges), std::move(labels));
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace demkit
