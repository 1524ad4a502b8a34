#include "demkit/hitting_set.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace demkit {

int popcount(VertexMask m) { return std::popcount(m); }

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

VertexMask to_mask(const std::vector<Vertex>& vertices, int universe) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= universe || v >= kMaxMaskVertices) {
      throw InputError("vertex id " + std::to_string(v) + " out of range");
    }
    m |= bit(v);
  }
  return m;
}

namespace {

// Lexicographic order of the sorted member lists.
bool lex_less(VertexMask a, VertexMask b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0 && a == 0;
}

VertexMask low_bits(int k) {
  return k >= kMaxMaskVertices ? ~VertexMask{0} : (VertexMask{1} << k) - 1;
}

}  // namespace

HittingSetSolver::HittingSetSolver(int universe, std::vector<VertexMask> sets)
    : universe_(universe) {
  if (universe < 0 || universe > kMaxMaskVertices) {
    throw CapExceeded("hitting set universe of " + std::to_string(universe) +
                      " exceeds " + std::to_string(kMaxMaskVertices));
  }
  const VertexMask all = low_bits(universe);
  for (VertexMask s : sets) {
    if (s == 0 || (s & ~all)) throw InputError("hitting set member outside universe or empty");
  }
  std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Any set containing another is hit whenever the smaller one is.
  for (VertexMask s : sets) {
    const bool dominated = std::any_of(sets_.begin(), sets_.end(),
                                       [s](VertexMask kept) { return (kept & s) == kept; });
    if (!dominated) sets_.push_back(s);
  }
}

bool HittingSetSolver::hits_all(VertexMask chosen) const {
  return std::all_of(sets_.begin(), sets_.end(), [chosen](VertexMask s) { return s & chosen; });
}

// Greedy family of pairwise disjoint unhit sets; each needs its own element.
// Returns -1 when some unhit set has no allowed element left.
int HittingSetSolver::packing_bound(VertexMask chosen, VertexMask allowed) const {
  VertexMask used = 0;
  int bound = 0;
  for (VertexMask s : sets_) {
    if (s & chosen) continue;
    const VertexMask live = s & allowed;
    if (!live) return -1;
    if (!(live & used)) {
      used |= live;
      ++bound;
    }
  }
  return bound;
}

void HittingSetSolver::branch(VertexMask chosen, int size, VertexMask allowed, int& best,
                              VertexMask& best_mask, std::int64_t& nodes) const {
  ++nodes;
  const int lb = packing_bound(chosen, allowed);
  if (lb < 0 || size + lb >= best) return;
  // Branch on the unhit set with the fewest allowed elements.
  VertexMask pick = 0;
  int pick_count = kMaxMaskVertices + 1;
  for (VertexMask s : sets_) {
    if (s & chosen) continue;
    const int c = popcount(s & allowed);
    if (c < pick_count) {
      pick = s & allowed;
      pick_count = c;
      if (c == 1) break;
    }
  }
  if (pick == 0) {
    best = size;
    best_mask = chosen;
    return;
  }
  for (Vertex v : to_vertices(pick)) {
    branch(chosen | bit(v), size + 1, allowed, best, best_mask, nodes);
    allowed &= ~bit(v);
  }
}

HittingSetSolver::Optimum HittingSetSolver::solve(std::optional<VertexMask> upper_bound) const {
  Optimum out;
  int best = universe_ + 1;
  VertexMask best_mask = low_bits(universe_);
  if (sets_.empty()) {
    best = 0;
    best_mask = 0;
  } else {
    if (upper_bound && hits_all(*upper_bound)) {
      best = popcount(*upper_bound);
      best_mask = *upper_bound;
    }
    branch(0, 0, low_bits(universe_), best, best_mask, out.nodes);
  }
  out.value = best;
  out.witness = *lexicographic_first(best, &out.nodes);
  return out;
}

std::optional<VertexMask> HittingSetSolver::lexicographic_first(int size,
                                                                std::int64_t* nodes) const {
  std::optional<VertexMask> found;
  std::int64_t count = 0;
  // Include-before-exclude over ascending ids reaches the lexicographically
  // smallest member list first.
  std::function<bool(Vertex, VertexMask, int)> dfs = [&](Vertex v, VertexMask chosen,
                                                         int budget) {
    ++count;
    const int lb = packing_bound(chosen, ~low_bits(v) & low_bits(universe_));
    if (lb < 0 || lb > budget) return false;
    if (lb == 0) {
      found = chosen;
      return true;
    }
    if (v >= universe_) return false;
    return dfs(v + 1, chosen | bit(v), budget - 1) || dfs(v + 1, chosen, budget);
  };
  dfs(0, 0, size);
  if (nodes) *nodes += count;
  return found;
}

std::vector<VertexMask> HittingSetSolver::enumerate(int size, std::int64_t cap,
                                                    std::int64_t* nodes) const {
  std::vector<VertexMask> out;
  std::int64_t count = 0;
  std::function<void(Vertex, VertexMask, int)> dfs = [&](Vertex v, VertexMask chosen,
                                                         int budget) {
    ++count;
    const int lb = packing_bound(chosen, ~low_bits(v) & low_bits(universe_));
    if (lb < 0 || lb > budget) return;
    if (lb == 0) {
      if (budget == 0) {
        if (static_cast<std::int64_t>(out.size()) >= cap) {
          throw CapExceeded("more than " + std::to_string(cap) + " minimum sets");
        }
        out.push_back(chosen);
        return;
      }
    }
    if (v >= universe_) return;
    if (budget > 0) dfs(v + 1, chosen | bit(v), budget - 1);
    dfs(v + 1, chosen, budget);
  };
  dfs(0, 0, size);
  if (nodes) *nodes += count;
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace demkit
