#include <gtest/gtest.h>

#include "demkit/expr.hpp"
#include "demkit/families.hpp"
#include "demkit/theorems.hpp"

namespace demkit {
namespace {

GraphExpr parse(const std::string& text) { return parse_graph_expr(text); }
Graph gen(const std::string& text) { return build(parse(text)).graph; }

TEST(PredictedValue, Construction) {
  EXPECT_EQ(PredictedValue::exact(7, "r").to_string(), "7");
  EXPECT_EQ(PredictedValue::interval(6, 10, "r").to_string(), "6..10");
  EXPECT_EQ(PredictedValue::interval(4, 4, "r").to_string(), "4");
  EXPECT_THROW(PredictedValue::interval(5, 4, "r"), std::invalid_argument);
  EXPECT_TRUE(PredictedValue::interval(6, 10, "r").admits(8));
  EXPECT_FALSE(PredictedValue::exact(7, "r").admits(8));
}

TEST(Registry, FamilyRules) {
  EXPECT_EQ(predicted_dem(parse("complete:6")).lower, 5);
  EXPECT_EQ(predicted_dem(parse("cycle:7")).lower, 2);
  EXPECT_EQ(predicted_dem(parse("bipartite:3:5")).lower, 3);
  EXPECT_EQ(predicted_dem(parse("book:5")).lower, 2);
  EXPECT_EQ(predicted_dem(parse("hypercube:4")).lower, 8);
  EXPECT_EQ(predicted_dem(parse("randtree:9:seed=3")).rule, "tree");
  EXPECT_EQ(predicted_dem(parse("path:1")).lower, 0);
  EXPECT_THROW(predicted_dem(parse("randconn:8:1/3:seed=42")), NotInRegistry);
}

TEST(Registry, ProductRules) {
  struct Case {
    const char* expr;
    int value;
    const char* rule;
  };
  for (const Case& c : {
           Case{"cartesian(path:3,path:7)", 7, "cartesian-tree-tree"},
           Case{"cartesian(path:2,cycle:5)", 5, "cartesian-tree-cycle"},
           Case{"cartesian(path:3,cycle:4)", 6, "cartesian-tree-cycle"},
           Case{"cartesian(complete:3,complete:4)", 9, "cartesian-complete-complete"},
           Case{"cartesian(cycle:3,cycle:5)", 10, "cartesian-cycle-cycle"},
           Case{"cartesian(book:2,book:2)", 12, "cartesian-book-book"},
           Case{"join(path:3,path:3)", 4, "join"},
           Case{"corona(path:3,complete:2)", 3, "corona"},
           Case{"cluster(cycle:4,path:3)", 2, "cluster-tree"},
       }) {
    const PredictedValue p = predicted_dem(parse(c.expr));
    EXPECT_EQ(p.kind, PredictedValue::Kind::kExact) << c.expr;
    EXPECT_EQ(p.lower, c.value) << c.expr;
    EXPECT_EQ(p.rule, c.rule) << c.expr;
  }
}

TEST(Registry, GenericCartesianBounds) {
  // C_3 (m = 3, dem 2) with K_{2,3} (n = 5, dem 2): [max(6, 10), 6 + 10 - 4]
  const PredictedValue p = predicted_dem(parse("cartesian(cycle:3,bipartite:2:3)"));
  EXPECT_EQ(p.kind, PredictedValue::Kind::kInterval);
  EXPECT_EQ(p.lower, 10);
  EXPECT_EQ(p.upper, 12);
  EXPECT_EQ(p.rule, "cartesian-bounds");
}

TEST(Registry, ApexJoin) {
  const PredictedValue far = predicted_dem(parse("join(path:9,path:1)"));
  EXPECT_EQ(far.kind, PredictedValue::Kind::kExact);
  EXPECT_EQ(far.lower, 4);
  const PredictedValue near = predicted_dem(parse("join(cycle:5,path:1)"));
  EXPECT_EQ(near.lower, 3);
  EXPECT_EQ(near.upper, 4);
}

TEST(FactorAnalysis, Flags) {
  const FactorData b3 = analyze_factor(gen("book:3"));
  EXPECT_EQ(b3.order, 5);
  EXPECT_EQ(b3.dem, 2);
  EXPECT_EQ(b3.cover, 2);
  EXPECT_EQ(b3.book_pages, 3);
  EXPECT_FALSE(b3.tree);
  EXPECT_EQ(book_pages(gen("complete:3")), 1);
  EXPECT_FALSE(book_pages(gen("cycle:4")).has_value());
  EXPECT_FALSE(book_pages(gen("complete:4")).has_value());
  const FactorData c5 = analyze_factor(gen("cycle:5"));
  EXPECT_TRUE(c5.cycle);
  EXPECT_EQ(c5.radius, 2);
}

TEST(Verify, Instances) {
  for (const char* e : {"book:4", "hypercube:3", "cluster(cycle:4,path:2)"}) {
    const VerificationRecord r = verify_instance(parse(e));
    EXPECT_EQ(r.verdict, Verdict::kPass) << e;
    EXPECT_EQ(r.computed, r.predicted.lower) << e;
  }
  SolverLimits tiny;
  tiny.max_n = 6;
  const VerificationRecord skipped = verify_instance(parse("cartesian(path:3,path:3)"), tiny);
  EXPECT_EQ(skipped.verdict, Verdict::kSkipped);
  EXPECT_FALSE(skipped.computed.has_value());
  EXPECT_EQ(skipped.predicted.lower, 3);

  const VerificationRecord wrong =
      verify_against(parse("cycle:5"), PredictedValue::exact(3, "made-up"));
  EXPECT_EQ(wrong.verdict, Verdict::kFail);
  EXPECT_EQ(wrong.computed, 2);
}

TEST(UpperCondition, Examples) {
  const UpperCheck p2p2 = check_upper_equality_condition(parse("path:2"), parse("path:2"));
  EXPECT_TRUE(p2p2.g_unique == false && p2p2.h_unique == false);
  EXPECT_EQ(p2p2.product_dem, 2);
  EXPECT_EQ(p2p2.record.verdict, Verdict::kPass);

  // B_2 has the unique minimum DEM set {0, 1}, yet the product stays below
  // the upper bound: the characterization does not hold here.
  const UpperCheck b2b2 = check_upper_equality_condition(parse("book:2"), parse("book:2"));
  EXPECT_TRUE(b2b2.g_unique);
  EXPECT_EQ(b2b2.upper, 12);
  EXPECT_EQ(b2b2.product_dem, 10);
  EXPECT_FALSE(b2b2.equality);
  EXPECT_EQ(b2b2.record.verdict, Verdict::kFail);

  const UpperCheck c4b2 = check_upper_equality_condition(parse("cycle:4"), parse("book:2"));
  EXPECT_FALSE(c4b2.g_unique);
  EXPECT_TRUE(c4b2.h_unique);
  EXPECT_EQ(c4b2.upper, 12);
  EXPECT_EQ(c4b2.product_dem, 10);
  EXPECT_EQ(c4b2.record.verdict, Verdict::kFail);
}

TEST(LowerCondition, Examples) {
  const LowerCheck c4p4 = check_lower_equality_condition(parse("cycle:4"), parse("path:4"));
  EXPECT_TRUE(c4p4.within_hypothesis);
  EXPECT_TRUE(c4p4.every_vertex_in_minimum_set);
  EXPECT_EQ(c4p4.k, 2);
  EXPECT_EQ(c4p4.product_dem, 8);
  EXPECT_TRUE(c4p4.equality);
  EXPECT_EQ(c4p4.record.verdict, Verdict::kPass);

  const LowerCheck c3p2 = check_lower_equality_condition(parse("cycle:3"), parse("path:2"));
  EXPECT_FALSE(c3p2.within_hypothesis);
  EXPECT_TRUE(c3p2.equivalence_holds);
  EXPECT_EQ(c3p2.record.verdict, Verdict::kOutOfHypothesis);

  // Equality holds although K_3 has no two disjoint minimum DEM sets.
  const LowerCheck k3k3 = check_lower_equality_condition(parse("complete:3"), parse("complete:3"));
  EXPECT_TRUE(k3k3.within_hypothesis);
  EXPECT_EQ(k3k3.k, 2);
  EXPECT_EQ(k3k3.disjoint_h_sets, 1);
  EXPECT_FALSE(k3k3.disjoint_condition);
  EXPECT_EQ(k3k3.product_dem, 6);
  EXPECT_TRUE(k3k3.equality);
  EXPECT_EQ(k3k3.record.verdict, Verdict::kFail);
}

TEST(SetFamilies, CoverAndPacking) {
  EXPECT_EQ(min_sets_to_cover({0b011, 0b101, 0b110}, 0b111), 2);
  EXPECT_EQ(min_sets_to_cover({0b0011, 0b1100}, 0b1111), 2);
  EXPECT_FALSE(min_sets_to_cover({0b0011}, 0b1111).has_value());
  EXPECT_EQ(min_sets_to_cover({}, 0), 0);
  EXPECT_EQ(max_disjoint_sets({0b011, 0b101, 0b110}, 5), 1);
  EXPECT_EQ(max_disjoint_sets({0b0011, 0b1100, 0b0110}, 5), 2);
  EXPECT_EQ(max_disjoint_sets({0b01, 0b10}, 1), 1);
}

TEST(LayerLocality, NoCounterexamples) {
  for (const auto& [g, h] : {std::pair{"cycle:4", "path:3"}, {"book:2", "complete:3"},
                             {"bipartite:2:3", "cycle:3"}}) {
    const LayerLocalityReport report = check_layer_locality(gen(g), gen(h));
    EXPECT_TRUE(report.counterexamples.empty()) << g << " x " << h;
    EXPECT_GT(report.pair_checks, 0);
    EXPECT_GT(report.em_checks, 0);
  }
}

TEST(Suites, DeterministicAndSorted) {
  SuiteOptions options;
  const auto a = run_suite(Suite::kBounds, options);
  const auto b = run_suite(Suite::kBounds, options);
  EXPECT_EQ(records_csv(a, false), records_csv(b, false));
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) {
    return std::tie(x.instance, x.predicted.rule) < std::tie(y.instance, y.predicted.rule);
  }));
  for (const auto& r : a) EXPECT_NE(r.verdict, Verdict::kFail) << r.instance;
  EXPECT_EQ(parse_suite("all"), Suite::kAll);
  EXPECT_THROW(parse_suite("everything"), InputError);
}

TEST(Suites, FormulasPassWithinCap) {
  for (const auto& r : run_suite(Suite::kFormulas, {})) {
    EXPECT_NE(r.verdict, Verdict::kFail) << r.instance << " " << r.predicted.rule;
  }
}

TEST(Reports, CsvAndJson) {
  VerificationRecord r;
  r.instance = "cartesian(path:2,path:2)";
  r.predicted = PredictedValue::exact(2, "cartesian-tree-tree");
  r.computed = 2;
  r.verdict = Verdict::kPass;
  r.runtime_ms = 1.5;
  EXPECT_EQ(records_csv({r}, false),
            "instance,predicted,computed,verdict,rule\n"
            "cartesian(path:2;path:2),2,2,pass,cartesian-tree-tree\n");
  EXPECT_NE(records_csv({r}, true).find("runtime_ms"), std::string::npos);
  EXPECT_NE(records_json({r}, false).find("\"cartesian(path:2,path:2)\""), std::string::npos);
  EXPECT_EQ(verdict_name(Verdict::kOutOfHypothesis), "out_of_hypothesis");
}

}  // namespace
}  // namespace demkit
