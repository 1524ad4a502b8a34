#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

/// Set of vertex ids < 64, bit v set iff v is a member.
using VertexMask = std::uint64_t;

inline constexpr int kMaxMaskVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
int popcount(VertexMask m);
std::vector<Vertex> to_vertices(VertexMask m);
/// Throws InputError for ids outside 0..universe-1.
VertexMask to_mask(const std::vector<Vertex>& vertices, int universe);

/// Minimum hitting set over a universe of at most 64 elements: pick the fewest
/// elements so that every set in `sets` contains at least one of them.
class HittingSetSolver {
 public:
  /// Every set must be nonempty and inside the universe.
  HittingSetSolver(int universe, std::vector<VertexMask> sets);

  struct Optimum {
    int value = 0;
    VertexMask witness = 0;  // lexicographically smallest minimum set
    std::int64_t nodes = 0;
  };

  /// `upper_bound`, when given, must be the mask of a valid hitting set; it
  /// seeds the branch-and-bound incumbent.
  Optimum solve(std::optional<VertexMask> upper_bound = {}) const;

  /// Lexicographically smallest hitting set of exactly `size` elements, if one
  /// exists. `size` should be the optimum for the "exactly" to be meaningful;
  /// larger sizes return the lexicographically first set of size <= size.
  std::optional<VertexMask> lexicographic_first(int size, std::int64_t* nodes = nullptr) const;

  /// All hitting sets with exactly `size` elements, assuming `size` is the
  /// optimum. Throws CapExceeded past `cap` sets. Sorted lexicographically.
  std::vector<VertexMask> enumerate(int size, std::int64_t cap,
                                    std::int64_t* nodes = nullptr) const;

  bool hits_all(VertexMask chosen) const;
  int universe() const { return universe_; }
  /// The reduced instance: deduplicated, supersets removed, sorted by size.
  const std::vector<VertexMask>& sets() const { return sets_; }

 private:
  int packing_bound(VertexMask chosen, VertexMask allowed) const;
  void branch(VertexMask chosen, int size, VertexMask allowed, int& best,
              VertexMask& best_mask, std::int64_t& nodes) const;

  int universe_;
  std::vector<VertexMask> sets_;
};

}  // namespace demkit
