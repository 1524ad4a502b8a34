#include <gtest/gtest.h>

#include "demkit/families.hpp"
#include "demkit/graph.hpp"
#include "support/oracles.hpp"

namespace demkit {
namespace {

Graph path(int n) { return generate({FamilyKind::kPath, {n}}); }
Graph cycle(int n) { return generate({FamilyKind::kCycle, {n}}); }
Graph complete(int n) { return generate({FamilyKind::kComplete, {n}}); }

TEST(ParseEdgeList, PathAndTriangle) {
  const Graph p3 = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(p3.order(), 3);
  EXPECT_EQ(p3.size(), 2);
  EXPECT_EQ(p3, path(3));

  const Graph c3 = parse_edge_list("# triangle\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(c3, cycle(3));
}

TEST(ParseEdgeList, DeduplicatesAndCanonicalizes) {
  const Graph g = parse_edge_list("2 1\n1 2\n0 1\n\n");
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
}

TEST(ParseEdgeList, Errors) {
  try {
    parse_edge_list("0 1\n2 3");
    FAIL() << "disconnected input accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("disconnected"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("0 0"), InputError);
  EXPECT_THROW(parse_edge_list("0 x"), InputError);
  EXPECT_THROW(parse_edge_list("0 1 2"), InputError);
  EXPECT_THROW(parse_edge_list("-1 2"), InputError);
  EXPECT_THROW(parse_edge_list("# nothing\n"), InputError);
  EXPECT_THROW(parse_edge_list(""), InputError);
}

TEST(GraphConstruction, RejectsParallelEdgesAndBadLabels) {
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1}}, {"a"}), InputError);
  EXPECT_THROW(Graph(0, {}), InputError);
  EXPECT_NO_THROW(Graph(1, {}));
}

TEST(EdgeList, WriterRoundTrips) {
  for (const Graph& g : {path(5), cycle(6), complete(4)}) {
    EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  }
}

TEST(Distances, SmallFamilies) {
  EXPECT_EQ(path(3).distance(0, 2), Distance(2));
  const Graph c5 = cycle(5);
  EXPECT_EQ(c5.distance(0, 2), Distance(2));
  EXPECT_EQ(c5.distance(0, 3), Distance(2));
  const Graph k4 = complete(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(k4.distance(u, v), Distance(u == v ? 0 : 1));
}

TEST(Distances, InfiniteOrdersLast) {
  EXPECT_LT(Distance(1000000), Distance::Infinite());
  EXPECT_NE(Distance(0), Distance::Infinite());
  EXPECT_EQ(to_string(Distance::Infinite()), "inf");
}

TEST(Distances, EdgeRemoval) {
  const Graph p3 = path(3);
  EXPECT_TRUE(distances_from(p3, 0, p3.edge_id(1, 2))[2].is_infinite());
  const Graph c4 = cycle(4);
  EXPECT_EQ(distances_from(c4, 0, c4.edge_id(1, 2))[2], Distance(2));
  const Graph k3 = complete(3);
  EXPECT_EQ(distances_from(k3, 0, k3.edge_id(0, 1))[1], Distance(2));
}

// Only the pairs separated by a bridge become Infinite; non-bridges keep
// every distance finite.
TEST(Distances, BridgeSeparation) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::all_connected_graphs(n)) {
      for (EdgeId e = 0; e < g.size(); ++e) {
        const auto [a, b] = g.edge(e);
        const auto from_a = distances_from(g, a, e);
        const bool bridge = from_a[b].is_infinite();
        for (Vertex s = 0; s < n; ++s) {
          const auto row = distances_from(g, s, e);
          for (Vertex t = 0; t < n; ++t) {
            const bool split = bridge && (from_a[s].is_infinite() != from_a[t].is_infinite());
            EXPECT_EQ(row[t].is_infinite(), split);
          }
        }
      }
    }
  }
}

TEST(Distances, AllPairsMatchesSingleSource) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = testing::random_connected_graph(9, 0.35, seed);
    const auto d = all_pairs_distances(g);
    for (Vertex s = 0; s < g.order(); ++s) {
      const auto row = distances_from(g, s);
      for (Vertex t = 0; t < g.order(); ++t) {
        EXPECT_EQ(d(s, t), row[t]);
        EXPECT_EQ(d(s, t), d(t, s));
        EXPECT_EQ(d(s, t), g.distance(s, t));
        for (Vertex w = 0; w < g.order(); ++w) {
          EXPECT_LE(d(s, t).hops(), d(s, w).hops() + d(w, t).hops());
        }
      }
      EXPECT_EQ(d(s, s), Distance(0));
    }
  }
}

TEST(Radius, Families) {
  EXPECT_EQ(radius(path(9)), 4);
  EXPECT_EQ(radius(cycle(6)), 3);
  EXPECT_EQ(radius(complete(5)), 1);
  EXPECT_EQ(diameter(path(9)), 8);
}

TEST(IsTree, Families) {
  EXPECT_TRUE(is_tree(path(6)));
  EXPECT_FALSE(is_tree(cycle(4)));
  EXPECT_TRUE(is_tree(generate({FamilyKind::kCompleteBipartite, {1, 4}})));
}

TEST(BaseGraph, Examples) {
  const Graph pendant_triangle = parse_edge_list("0 1\n1 2\n2 0\n2 3");
  const auto base = base_graph(pendant_triangle);
  ASSERT_TRUE(base.has_value());
  EXPECT_EQ(*base, cycle(3));
  EXPECT_EQ(base->labels(), (std::vector<std::string>{"0", "1", "2"}));

  EXPECT_FALSE(base_graph(path(5)).has_value());
  EXPECT_FALSE(base_graph(path(1)).has_value());
  EXPECT_EQ(*base_graph(cycle(5)), cycle(5));
}

TEST(BaseGraph, StripsLongTailsAndKeepsLabels) {
  // 4-cycle 0-1-2-3 with a tail 3-4-5 and a pendant 1-6
  const Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 0\n3 4\n4 5\n1 6");
  const auto base = base_graph(g);
  ASSERT_TRUE(base.has_value());
  EXPECT_EQ(base->order(), 4);
  EXPECT_TRUE(is_cycle(*base));
  EXPECT_EQ(base->labels(), (std::vector<std::string>{"0", "1", "2", "3"}));
}

TEST(BaseGraph, Idempotent) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = testing::random_connected_graph(8, 0.25, seed);
    const auto once = base_graph(g);
    if (!once) continue;
    const auto twice = base_graph(*once);
    ASSERT_TRUE(twice.has_value());
    EXPECT_EQ(*twice, *once);
    EXPECT_EQ(twice->labels(), once->labels());
  }
}

TEST(Recognizers, CompleteAndCycle) {
  EXPECT_TRUE(is_complete(complete(5)));
  EXPECT_TRUE(is_cycle(complete(3)));
  EXPECT_FALSE(is_cycle(path(4)));
  EXPECT_FALSE(is_complete(cycle(4)));
}

}  // namespace
}  // namespace demkit
