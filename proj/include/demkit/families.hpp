#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demkit/graph.hpp"

namespace demkit {

enum class FamilyKind {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kBook,
  kHypercube,
  kRandomTree,
  kRandomConnected,
};

/// Declarative description of a generated graph.
///
/// params by kind:
///   path, cycle, complete, random_tree : {order}
///   complete_bipartite                 : {left, right}
///   book                               : {pages}
///   hypercube                          : {dimension}
///   random_connected                   : {order, numerator, denominator}
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Rejection budget for random_connected.
inline constexpr int kRandomConnectedRetries = 1000;

/// Throws InputError when the spec's parameters are out of range.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

/// Parses "path:5", "cycle:7", "complete:4", "bipartite:2:3", "book:4",
/// "hypercube:3", "randtree:9:seed=1", "randconn:8:1/3:seed=42".
FamilySpec parse_family(std::string_view text);

/// Canonical text form, accepted by parse_family.
std::string format_family(const FamilySpec& spec);

std::string_view kind_name(FamilyKind kind);

}  // namespace demkit
