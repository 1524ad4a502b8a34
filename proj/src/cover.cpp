#include "demkit/cover.hpp"

#include <algorithm>
#include <string>

#include "demkit/hitting_set.hpp"

namespace demkit {

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& s) {
  const VertexMask m = to_mask(s, g.order());
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [m](const Edge& e) { return (m & (bit(e.u) | bit(e.v))) != 0; });
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g) {}

  int run(std::int64_t& nodes) {
    best_ = g_.order();  // V(G) itself covers every edge
    search(0, 0, nodes);
    return best_;
  }

 private:
  // Greedy maximal matching among uncovered edges.
  int matching_bound(VertexMask cover) const {
    VertexMask matched = cover;
    int size = 0;
    for (const auto& e : g_.edges()) {
      if (!(matched & (bit(e.u) | bit(e.v)))) {
        matched |= bit(e.u) | bit(e.v);
        ++size;
      }
    }
    return size;
  }

  int live_degree(Vertex v, VertexMask cover) const {
    int d = 0;
    for (const auto& nb : g_.neighbors(v)) d += !(cover & bit(nb.vertex));
    return d;
  }

  void search(VertexMask cover, int size, std::int64_t& nodes) {
    ++nodes;
    if (size + matching_bound(cover) >= best_) return;
    // Uncovered edge with the largest endpoint degree sum.
    const Edge* pick = nullptr;
    int pick_score = -1;
    for (const auto& e : g_.edges()) {
      if (cover & (bit(e.u) | bit(e.v))) continue;
      const int score = live_degree(e.u, cover) + live_degree(e.v, cover);
      if (score > pick_score) {
        pick = &e;
        pick_score = score;
      }
    }
    if (!pick) {
      best_ = size;
      return;
    }
    const Edge e = *pick;
    search(cover | bit(e.u), size + 1, nodes);
    search(cover | bit(e.v), size + 1, nodes);
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

CoverResult vertex_cover_number(const Graph& g, const SolverLimits& limits) {
  if (g.order() > limits.max_n || g.order() > kMaxMaskVertices) {
    throw CapExceeded("vertex cover: " + std::to_string(g.order()) +
                      " vertices exceeds cap " + std::to_string(limits.max_n));
  }
  CoverResult out;
  if (g.size() == 0) return out;
  CoverSearch search(g);
  out.value = search.run(out.nodes_explored);
  std::vector<VertexMask> edge_sets;
  for (const auto& e : g.edges()) edge_sets.push_back(bit(e.u) | bit(e.v));
  HittingSetSolver witness_search(g.order(), std::move(edge_sets));
  out.witness = to_vertices(*witness_search.lexicographic_first(out.value, &out.nodes_explored));
  return out;
}

}  // namespace demkit
