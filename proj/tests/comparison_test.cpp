#include <gtest/gtest.h>

#include "demkit/comparison.hpp"
#include "demkit/families.hpp"
#include "demkit/products.hpp"
#include "support/oracles.hpp"

namespace demkit {
namespace {

Graph fam(FamilyKind k, std::vector<int> p) { return generate({k, std::move(p)}); }
Graph path(int n) { return fam(FamilyKind::kPath, {n}); }
Graph cycle(int n) { return fam(FamilyKind::kCycle, {n}); }
Graph complete(int n) { return fam(FamilyKind::kComplete, {n}); }

TEST(MetricDimension, KnownValues) {
  EXPECT_EQ(metric_dimension(path(5)).value, 1);
  EXPECT_EQ(metric_dimension(path(5)).witness, (std::vector<Vertex>{0}));
  EXPECT_EQ(metric_dimension(cartesian(path(3), path(3)).graph).value, 2);
  EXPECT_EQ(metric_dimension(complete(4)).value, 3);
  EXPECT_EQ(metric_dimension(cycle(6)).value, 2);
  EXPECT_EQ(metric_dimension(path(1)).value, 0);
}

TEST(EdgeMetricDimension, KnownValues) {
  EXPECT_EQ(edge_metric_dimension(path(4)).value, 1);
  EXPECT_EQ(edge_metric_dimension(cartesian(path(3), path(4)).graph).value, 2);
  SolverLimits wide;
  wide.comparison_max_n = 64;
  EXPECT_EQ(edge_metric_dimension(cartesian(cycle(8), cycle(8)).graph, wide).value, 3);
}

TEST(StrongMetricDimension, KnownValues) {
  EXPECT_EQ(strong_metric_dimension(path(6)).value, 1);
  EXPECT_EQ(strong_metric_dimension(cartesian(complete(3), complete(3)).graph).value, 6);
  EXPECT_EQ(strong_metric_dimension(complete(4)).value, 3);
}

TEST(Dimensions, Tori) {
  SolverLimits wide;
  wide.comparison_max_n = 16;
  EXPECT_EQ(metric_dimension(cartesian(cycle(3), cycle(3)).graph, wide).value, 3);
  EXPECT_EQ(metric_dimension(cartesian(cycle(3), cycle(4)).graph, wide).value, 3);
  EXPECT_EQ(metric_dimension(cartesian(cycle(4), cycle(4)).graph, wide).value, 4);
}

TEST(Dimensions, WitnessesAreMinimalAndValid) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = testing::random_connected_graph(8, 0.3, seed);
    const auto dim = metric_dimension(g);
    const auto edim = edge_metric_dimension(g);
    const auto sdim = strong_metric_dimension(g);
    EXPECT_TRUE(is_resolving_set(g, dim.witness));
    EXPECT_TRUE(is_edge_resolving_set(g, edim.witness));
    EXPECT_TRUE(is_strong_resolving_set(g, sdim.witness));
    for (size_t drop = 0; drop < dim.witness.size(); ++drop) {
      auto smaller = dim.witness;
      smaller.erase(smaller.begin() + static_cast<long>(drop));
      EXPECT_FALSE(is_resolving_set(g, smaller));
    }
    // a strong resolving set resolves
    EXPECT_LE(dim.value, sdim.value);
    EXPECT_TRUE(is_resolving_set(g, sdim.witness));
  }
}

TEST(Dimensions, PredicatesRejectBadIds) {
  EXPECT_THROW(is_resolving_set(path(3), {3}), InputError);
  EXPECT_THROW(is_edge_resolving_set(path(3), {-1}), InputError);
  EXPECT_THROW(is_strong_resolving_set(path(3), {5}), InputError);
}

TEST(Dimensions, Cap) {
  SolverLimits limits;
  limits.comparison_max_n = 5;
  EXPECT_THROW(metric_dimension(path(6), limits), CapExceeded);
  EXPECT_THROW(edge_metric_dimension(path(6), limits), CapExceeded);
  EXPECT_THROW(strong_metric_dimension(path(6), limits), CapExceeded);
}

TEST(Comparison, RowsAndCsv) {
  std::vector<ComparisonRow> rows;
  rows.push_back(compare_parameters("grid,3x3", cartesian(path(3), path(3)).graph));
  rows.push_back(compare_parameters("k3k3", cartesian(complete(3), complete(3)).graph));
  EXPECT_EQ(rows[0].dem->value, 3);
  EXPECT_EQ(rows[1].dem->value, 6);
  EXPECT_EQ(rows[1].dim_s->value, 6);

  SolverLimits small;
  small.comparison_max_n = 8;
  rows.push_back(compare_parameters("c3c3", cartesian(cycle(3), cycle(3)).graph, small));
  EXPECT_TRUE(rows[2].dem.has_value());
  EXPECT_FALSE(rows[2].dim.has_value());

  EXPECT_EQ(comparison_csv(rows),
            "graph,n,m,dem,dim,edim,dim_s\n"
            "grid;3x3,9,12,3,2,2,2\n"
            "k3k3,9,18,6,3,4,6\n"
            "c3c3,9,18,6,NA,NA,NA\n");
}

}  // namespace
}  // namespace demkit
