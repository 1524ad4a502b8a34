#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "demkit/expr.hpp"
#include "demkit/graph.hpp"
#include "demkit/limits.hpp"

namespace demkit {

/// Raised by predicted_dem for graphs no registered formula covers.
class NotInRegistry : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form DEM value or bound interval, tagged with the rule that
/// produced it.
struct PredictedValue {
  enum class Kind { kExact, kInterval };

  Kind kind = Kind::kExact;
  int lower = 0;
  int upper = 0;
  std::string rule;

  static PredictedValue exact(int value, std::string rule);
  /// Throws std::invalid_argument when lower > upper.
  static PredictedValue interval(int lower, int upper, std::string rule);

  bool admits(int value) const { return lower <= value && value <= upper; }
  /// "7" or "6..10".
  std::string to_string() const;
};

/// What the registry needs to know about a factor.
struct FactorData {
  int order = 0;
  int size = 0;
  int dem = 0;
  int cover = 0;
  int radius = 0;
  bool tree = false;
  bool cycle = false;
  bool complete = false;
  std::optional<int> book_pages;  // set when the graph is a book B_q
};

/// Exact dem and c plus structural flags. Throws CapExceeded past limits.
FactorData analyze_factor(const Graph& g, const SolverLimits& limits = {});

/// Number of pages when g is a book graph (q >= 1 triangles on one spine).
std::optional<int> book_pages(const Graph& g);

/// Registry lookup. For a family leaf `factors` is ignored; for a product it
/// holds the data of the left and right operands. Throws NotInRegistry.
PredictedValue predicted_dem(const GraphExpr& expr, const std::vector<FactorData>& factors);
/// Computes the operand data itself.
PredictedValue predicted_dem(const GraphExpr& expr, const SolverLimits& limits = {});

/// The generic Cartesian sandwich
/// [max{m dem(H), n dem(G)}, m dem(H) + n dem(G) - dem(G) dem(H)],
/// with m = |V(G)|, n = |V(H)|.
PredictedValue cartesian_bounds(const FactorData& g, const FactorData& h);

enum class Verdict { kPass, kFail, kSkipped, kOutOfHypothesis };
std::string_view verdict_name(Verdict v);

struct VerificationRecord {
  std::string instance;
  PredictedValue predicted;
  std::optional<int> computed;
  Verdict verdict = Verdict::kSkipped;
  std::string detail;
  double runtime_ms = 0;
};

/// Builds the graph, solves dem exactly and compares with the registry.
/// Instances over limits.max_n come back kSkipped.
VerificationRecord verify_instance(const GraphExpr& expr, const SolverLimits& limits = {});
/// Same, against a caller-chosen prediction.
VerificationRecord verify_against(const GraphExpr& expr, const PredictedValue& predicted,
                                  const SolverLimits& limits = {});

/// dem(G□H) reaches the upper end of the sandwich exactly when G or H has a
/// unique minimum DEM set.
struct UpperCheck {
  bool g_unique = false;
  bool h_unique = false;
  int product_dem = 0;
  int upper = 0;
  bool equality = false;
  VerificationRecord record;
};
UpperCheck check_upper_equality_condition(const GraphExpr& g, const GraphExpr& h,
                                          const SolverLimits& limits = {});

/// With |V(G)| <= |V(H)| and dem(G) >= dem(H): dem(G□H) = |V(H)| dem(G)
/// exactly when (1) every vertex of G lies in a minimum DEM set, and (2) H has
/// k pairwise disjoint minimum DEM sets, k being the fewest minimum DEM sets of
/// G covering V(G).
///
/// Pairs outside those hypotheses are still evaluated, but their record is
/// kOutOfHypothesis. A kFail record is a counterexample to the stated
/// equivalence.
struct LowerCheck {
  bool within_hypothesis = false;
  bool every_vertex_in_minimum_set = false;  // condition (1)
  std::optional<int> k;                      // set when (1) holds
  int disjoint_h_sets = 0;                   // largest disjoint family found, capped at k
  bool disjoint_condition = false;           // condition (2)
  int product_dem = 0;
  int target = 0;  // |V(H)| dem(G)
  bool equality = false;
  bool equivalence_holds = false;
  VerificationRecord record;
};
LowerCheck check_lower_equality_condition(const GraphExpr& g, const GraphExpr& h,
                                          const SolverLimits& limits = {});

/// Smallest number of the given sets whose union is `universe`; nullopt when
/// even all of them fall short.
std::optional<int> min_sets_to_cover(const std::vector<std::uint64_t>& sets,
                                     std::uint64_t universe);
/// Size of the largest pairwise-disjoint subfamily, stopping early at `stop_at`.
int max_disjoint_sets(const std::vector<std::uint64_t>& sets, int stop_at);

/// Probe/edge locality inside G□H: an edge of a layer is only ever detected by
/// probes in that same layer, with the same pairs as in the isolated factor,
/// and EM of every product vertex splits into its two layers' EM sets.
struct LayerLocalityReport {
  std::int64_t pair_checks = 0;
  std::int64_t em_checks = 0;
  std::vector<std::string> counterexamples;
};
LayerLocalityReport check_layer_locality(const Graph& g, const Graph& h);

enum class Suite { kFormulas, kBounds, kSharpness, kAll };
Suite parse_suite(std::string_view name);

struct SuiteOptions {
  SolverLimits limits;
  std::uint64_t seed = 1;
};

/// Records sorted by (instance, rule); deterministic for fixed options.
std::vector<VerificationRecord> run_suite(Suite suite, const SuiteOptions& options);

/// CSV "instance,predicted,computed,verdict,rule[,runtime_ms]"; commas in
/// instance names become ';'.
std::string records_csv(const std::vector<VerificationRecord>& records, bool timing);
std::string records_json(const std::vector<VerificationRecord>& records, bool timing);

}  // namespace demkit
