#include <gtest/gtest.h>

#include <set>

#include "demkit/families.hpp"

namespace demkit {
namespace {

TEST(Families, Book) {
  const Graph b2 = generate(parse_family("book:2"));
  EXPECT_EQ(b2.order(), 4);
  EXPECT_EQ(b2.size(), 5);
  for (Vertex v = 1; v < 4; ++v) EXPECT_TRUE(b2.adjacent(0, v));
  for (Vertex v : {0, 2, 3}) EXPECT_TRUE(b2.adjacent(1, v));
  EXPECT_FALSE(b2.adjacent(2, 3));
  for (int q = 1; q <= 8; ++q) {
    const Graph b = generate({FamilyKind::kBook, {q}});
    EXPECT_EQ(b.order(), q + 2);
    EXPECT_EQ(b.size(), 2 * q + 1);
  }
}

TEST(Families, Hypercube) {
  const Graph q3 = generate(parse_family("hypercube:3"));
  EXPECT_EQ(q3.order(), 8);
  EXPECT_EQ(q3.size(), 12);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(q3.degree(v), 3);
  EXPECT_TRUE(q3.adjacent(0b101, 0b100));
  EXPECT_FALSE(q3.adjacent(0b101, 0b110));
}

TEST(Families, CompleteBipartite) {
  const Graph k23 = generate(parse_family("bipartite:2:3"));
  EXPECT_EQ(k23.order(), 5);
  EXPECT_EQ(k23.size(), 6);
  for (Vertex v = 0; v < 2; ++v) EXPECT_EQ(k23.degree(v), 3);
  for (Vertex v = 2; v < 5; ++v) EXPECT_EQ(k23.degree(v), 2);
  EXPECT_EQ(parse_family("complete_bipartite:2:3"), parse_family("bipartite:2:3"));
}

TEST(Families, RandomTreesAreTreesAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (int n : {1, 2, 3, 7, 12}) {
      const FamilySpec spec{FamilyKind::kRandomTree, {n}, seed};
      const Graph t = generate(spec);
      EXPECT_EQ(t.order(), n);
      EXPECT_TRUE(is_tree(t));
      EXPECT_EQ(generate(spec), t);
    }
  }
}

TEST(Families, RandomTreesVary) {
  std::set<std::vector<Edge>> shapes;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    shapes.insert(generate({FamilyKind::kRandomTree, {8}, seed}).edges());
  }
  EXPECT_GT(shapes.size(), 30u);
}

TEST(Families, RandomConnected) {
  const FamilySpec spec = parse_family("randconn:8:1/3:seed=42");
  EXPECT_EQ(spec.params, (std::vector<int>{8, 1, 3}));
  EXPECT_EQ(spec.seed, 42u);
  const Graph g = generate(spec);
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(generate(spec), g);
  EXPECT_THROW(generate(parse_family("randconn:12:0/1:seed=1")), InputError);
}

TEST(Families, ParseErrors) {
  EXPECT_THROW(parse_family("wheel:5"), InputError);
  EXPECT_THROW(parse_family("cycle:2"), InputError);
  EXPECT_THROW(parse_family("path:0"), InputError);
  EXPECT_THROW(parse_family("path:x"), InputError);
  EXPECT_THROW(parse_family("book:0"), InputError);
  EXPECT_THROW(parse_family("hypercube:0"), InputError);
  EXPECT_THROW(parse_family("bipartite:3"), InputError);
  EXPECT_THROW(parse_family("randtree:5"), InputError);  // no seed
  EXPECT_THROW(parse_family("randconn:5:3/2:seed=1"), InputError);
}

TEST(Families, FormatRoundTrips) {
  for (const char* text : {"path:5", "cycle:7", "complete:4", "bipartite:2:3", "book:4",
                           "hypercube:3", "randtree:9:seed=3", "randconn:8:1/3:seed=42"}) {
    EXPECT_EQ(format_family(parse_family(text)), text);
  }
}

}  // namespace
}  // namespace demkit
