#include "demkit/theorems.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "demkit/cover.hpp"
#include "demkit/monitoring.hpp"

namespace demkit {

PredictedValue PredictedValue::exact(int value, std::string rule) {
  return {Kind::kExact, value, value, std::move(rule)};
}

PredictedValue PredictedValue::interval(int lower, int upper, std::string rule) {
  if (lower > upper) {
    throw std::invalid_argument("empty interval " + std::to_string(lower) + ".." +
                                std::to_string(upper));
  }
  return {Kind::kInterval, lower, upper, std::move(rule)};
}

std::string PredictedValue::to_string() const {
  if (kind == Kind::kExact || lower == upper) return std::to_string(lower);
  return std::to_string(lower) + ".." + std::to_string(upper);
}

std::optional<int> book_pages(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() != 2 * (n - 2) + 1) return std::nullopt;
  if (n == 3) return 1;
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      spine.push_back(v);
    } else if (g.degree(v) != 2) {
      return std::nullopt;
    }
  }
  if (spine.size() != 2) return std::nullopt;
  return n - 2;
}

FactorData analyze_factor(const Graph& g, const SolverLimits& limits) {
  FactorData f;
  f.order = g.order();
  f.size = g.size();
  f.dem = dem_number(g, false, limits).value;
  f.cover = vertex_cover_number(g, limits).value;
  f.radius = radius(g);
  f.tree = is_tree(g);
  f.cycle = is_cycle(g);
  f.complete = is_complete(g);
  f.book_pages = book_pages(g);
  return f;
}

PredictedValue cartesian_bounds(const FactorData& g, const FactorData& h) {
  const int m = g.order;
  const int n = h.order;
  return PredictedValue::interval(std::max(m * h.dem, n * g.dem),
                                  m * h.dem + n * g.dem - g.dem * h.dem, "cartesian-bounds");
}

namespace {

PredictedValue family_prediction(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kRandomTree:
      return p[0] == 1 ? PredictedValue::exact(0, "single-vertex")
                       : PredictedValue::exact(1, "tree");
    case FamilyKind::kCycle:
      return PredictedValue::exact(2, "cycle");
    case FamilyKind::kComplete:
      return PredictedValue::exact(p[0] - 1, "complete-graph");
    case FamilyKind::kCompleteBipartite:
      return PredictedValue::exact(std::min(p[0], p[1]), "complete-bipartite");
    case FamilyKind::kBook:
      return PredictedValue::exact(2, "book-graph");
    case FamilyKind::kHypercube:
      return PredictedValue::exact(1 << (p[0] - 1), "hypercube");
    case FamilyKind::kRandomConnected:
      break;
  }
  throw NotInRegistry("no formula for " + format_family(spec));
}

PredictedValue cartesian_prediction(const FactorData& g, const FactorData& h) {
  const int m = g.order;
  const int n = h.order;
  if (g.tree && h.tree) return PredictedValue::exact(std::max(m, n), "cartesian-tree-tree");
  if ((g.tree && h.cycle) || (g.cycle && h.tree)) {
    const int t = g.tree ? m : n;
    const int c = g.tree ? n : m;
    return PredictedValue::exact(c >= 2 * t + 1 ? c : 2 * t, "cartesian-tree-cycle");
  }
  if (g.cycle && h.cycle) return PredictedValue::exact(std::max(2 * m, 2 * n), "cartesian-cycle-cycle");
  if (g.complete && h.complete && m >= 3 && n >= 3) {
    return PredictedValue::exact(m * n - std::min(m, n), "cartesian-complete-complete");
  }
  const bool g_book = g.book_pages && *g.book_pages >= 2;
  const bool h_book = h.book_pages && *h.book_pages >= 2;
  if (g_book && h_book) {
    return PredictedValue::exact(2 * *g.book_pages + 2 * *h.book_pages + 4, "cartesian-book-book");
  }
  if (g_book || h_book) {
    const FactorData& other = g_book ? h : g;
    const int pages = g_book ? *g.book_pages : *h.book_pages;
    return PredictedValue::exact(2 * other.order + (pages + 2) * other.dem - 2 * other.dem,
                                 "cartesian-book");
  }
  return cartesian_bounds(g, h);
}

}  // namespace

PredictedValue predicted_dem(const GraphExpr& expr, const std::vector<FactorData>& factors) {
  if (expr.is_family()) return family_prediction(expr.family);
  if (factors.size() != 2) throw std::invalid_argument("product prediction needs two factors");
  const FactorData& g = factors[0];
  const FactorData& h = factors[1];
  const int m = g.order;
  const int n = h.order;
  switch (*expr.op) {
    case ProductOp::kJoin:
      if (m >= 2 && n >= 2) {
        return PredictedValue::exact(std::min(g.cover + n, h.cover + m), "join");
      }
      if (m == 1 && n == 1) return PredictedValue::exact(1, "tree");
      {
        const FactorData& big = m == 1 ? h : g;
        if (big.radius >= 4) return PredictedValue::exact(big.cover, "apex-join-radius4");
        return PredictedValue::interval(big.cover, big.cover + 1, "apex-join");
      }
    case ProductOp::kCorona:
      if (m >= 2 && n >= 2) return PredictedValue::exact(m * h.cover, "corona");
      break;
    case ProductOp::kCluster:
      if (m >= 2 && n >= 2) {
        if (h.tree) return PredictedValue::exact(g.dem, "cluster-tree");
        return PredictedValue::interval(g.dem + 1, m * h.dem, "cluster-nontree");
      }
      break;
    case ProductOp::kCartesian:
      if (m >= 2 && n >= 2) return cartesian_prediction(g, h);
      break;
  }
  throw NotInRegistry("no formula for " + format_graph_expr(expr));
}

PredictedValue predicted_dem(const GraphExpr& expr, const SolverLimits& limits) {
  if (expr.is_family()) return predicted_dem(expr, std::vector<FactorData>{});
  return predicted_dem(expr, {analyze_factor(build(expr.left()).graph, limits),
                              analyze_factor(build(expr.right()).graph, limits)});
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
    case Verdict::kOutOfHypothesis: return "out_of_hypothesis";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<VertexMask> minimum_sets(const Graph& g, const SolverLimits& limits) {
  const DemResult r = dem_number(g, true, limits);
  std::vector<VertexMask> out;
  for (const auto& s : *r.all_minimum_sets) out.push_back(to_mask(s, g.order()));
  return out;
}

VerificationRecord skipped(std::string instance, PredictedValue predicted, std::string why) {
  VerificationRecord r;
  r.instance = std::move(instance);
  r.predicted = std::move(predicted);
  r.verdict = Verdict::kSkipped;
  r.detail = std::move(why);
  return r;
}

}  // namespace

VerificationRecord verify_against(const GraphExpr& expr, const PredictedValue& predicted,
                                  const SolverLimits& limits) {
  const auto start = Clock::now();
  VerificationRecord r;
  r.instance = format_graph_expr(expr);
  r.predicted = predicted;
  try {
    const Graph g = build(expr).graph;
    const DemResult dem = dem_number(g, false, limits);
    r.computed = dem.value;
    r.verdict = predicted.admits(dem.value) ? Verdict::kPass : Verdict::kFail;
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::kSkipped;
    r.detail = e.what();
  }
  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationRecord verify_instance(const GraphExpr& expr, const SolverLimits& limits) {
  try {
    return verify_against(expr, predicted_dem(expr, limits), limits);
  } catch (const CapExceeded& e) {
    return skipped(format_graph_expr(expr), PredictedValue::exact(0, "registry"), e.what());
  }
}

UpperCheck check_upper_equality_condition(const GraphExpr& g_expr, const GraphExpr& h_expr,
                                          const SolverLimits& limits) {
  const auto start = Clock::now();
  const GraphExpr product = GraphExpr::product(ProductOp::kCartesian, g_expr, h_expr);
  UpperCheck out;
  out.record.instance = format_graph_expr(product);
  try {
    const Graph g = build(g_expr).graph;
    const Graph h = build(h_expr).graph;
    const FactorData fg = analyze_factor(g, limits);
    const FactorData fh = analyze_factor(h, limits);
    out.g_unique = minimum_sets(g, limits).size() == 1;
    out.h_unique = minimum_sets(h, limits).size() == 1;
    const PredictedValue bounds = cartesian_bounds(fg, fh);
    out.upper = bounds.upper;
    out.record.predicted =
        (out.g_unique || out.h_unique)
            ? PredictedValue::exact(bounds.upper, "cartesian-upper-iff-unique")
            : PredictedValue::interval(bounds.lower, std::max(bounds.lower, bounds.upper - 1),
                                       "cartesian-upper-iff-unique");
    out.product_dem = dem_number(build(product).graph, false, limits).value;
    out.record.computed = out.product_dem;
    out.equality = out.product_dem == out.upper;
    const bool agrees = out.equality == (out.g_unique || out.h_unique);
    out.record.verdict = agrees ? Verdict::kPass : Verdict::kFail;
    std::ostringstream detail;
    detail << "unique(G)=" << out.g_unique << " unique(H)=" << out.h_unique
           << " upper=" << out.upper << " equality=" << out.equality;
    out.record.detail = detail.str();
  } catch (const CapExceeded& e) {
    if (out.record.predicted.rule.empty()) {
      out.record.predicted = PredictedValue::exact(0, "cartesian-upper-iff-unique");
    }
    out.record.verdict = Verdict::kSkipped;
    out.record.detail = e.what();
  }
  out.record.runtime_ms = elapsed_ms(start);
  return out;
}

std::optional<int> min_sets_to_cover(const std::vector<std::uint64_t>& sets,
                                     std::uint64_t universe) {
  std::uint64_t reachable = 0;
  for (auto s : sets) reachable |= s;
  if ((reachable & universe) != universe) return std::nullopt;
  // Iterative deepening; always branch on the lowest uncovered element.
  std::function<bool(std::uint64_t, int)> fits = [&](std::uint64_t covered, int budget) {
    const std::uint64_t missing = universe & ~covered;
    if (!missing) return true;
    if (budget == 0) return false;
    const std::uint64_t target = missing & (~missing + 1);
    for (auto s : sets) {
      if ((s & target) && fits(covered | s, budget - 1)) return true;
    }
    return false;
  };
  for (int k = 0;; ++k) {
    if (fits(0, k)) return k;
  }
}

int max_disjoint_sets(const std::vector<std::uint64_t>& sets, int stop_at) {
  int best = 0;
  std::function<void(size_t, std::uint64_t, int)> grow = [&](size_t from, std::uint64_t used,
                                                             int count) {
    best = std::max(best, count);
    if (best >= stop_at) return;
    for (size_t i = from; i < sets.size() && best < stop_at; ++i) {
      if (!(sets[i] & used)) grow(i + 1, used | sets[i], count + 1);
    }
  };
  grow(0, 0, 0);
  return std::min(best, stop_at);
}

LowerCheck check_lower_equality_condition(const GraphExpr& g_expr, const GraphExpr& h_expr,
                                          const SolverLimits& limits) {
  const auto start = Clock::now();
  const GraphExpr product = GraphExpr::product(ProductOp::kCartesian, g_expr, h_expr);
  LowerCheck out;
  out.record.instance = format_graph_expr(product);
  const std::string rule = "cartesian-lower-iff-conditions";
  try {
    const Graph g = build(g_expr).graph;
    const Graph h = build(h_expr).graph;
    const FactorData fg = analyze_factor(g, limits);
    const FactorData fh = analyze_factor(h, limits);
    out.within_hypothesis = fg.order <= fh.order && fg.dem >= fh.dem;
    const auto g_sets = minimum_sets(g, limits);
    const auto h_sets = minimum_sets(h, limits);
    const VertexMask all_g = g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1;
    out.k = min_sets_to_cover(g_sets, all_g);
    out.every_vertex_in_minimum_set = out.k.has_value();
    if (out.k) {
      out.disjoint_h_sets = max_disjoint_sets(h_sets, *out.k);
      out.disjoint_condition = out.disjoint_h_sets >= *out.k;
    }
    const bool conditions = out.every_vertex_in_minimum_set && out.disjoint_condition;
    const PredictedValue bounds = cartesian_bounds(fg, fh);
    out.target = fh.order * fg.dem;
    out.record.predicted =
        conditions ? PredictedValue::exact(out.target, rule)
                   : PredictedValue::interval(out.target + 1,
                                              std::max(out.target + 1, bounds.upper), rule);
    out.product_dem = dem_number(build(product).graph, false, limits).value;
    out.record.computed = out.product_dem;
    out.equality = out.product_dem == out.target;
    out.equivalence_holds = out.equality == conditions;
    if (!out.within_hypothesis) {
      out.record.verdict = Verdict::kOutOfHypothesis;
    } else {
      out.record.verdict = out.equivalence_holds ? Verdict::kPass : Verdict::kFail;
    }
    std::ostringstream detail;
    detail << "cond1=" << out.every_vertex_in_minimum_set << " k="
           << (out.k ? std::to_string(*out.k) : "none") << " disjoint(H)=" << out.disjoint_h_sets
           << " cond2=" << out.disjoint_condition << " target=" << out.target
           << " equality=" << out.equality << " equivalence=" << out.equivalence_holds;
    out.record.detail = detail.str();
  } catch (const CapExceeded& e) {
    if (out.record.predicted.rule.empty()) out.record.predicted = PredictedValue::exact(0, rule);
    out.record.verdict = Verdict::kSkipped;
    out.record.detail = e.what();
  }
  out.record.runtime_ms = elapsed_ms(start);
  return out;
}

namespace {

std::string pair_text(const std::vector<DetectingPair>& pairs) {
  std::string s = "{";
  for (const auto& [x, y] : pairs) s += "(" + std::to_string(x) + " " + std::to_string(y) + ")";
  return s + "}";
}

}  // namespace

LayerLocalityReport check_layer_locality(const Graph& g, const Graph& h) {
  LayerLocalityReport report;
  const Product p = cartesian(g, h);
  const Graph& gh = p.graph;
  const int n = h.order();
  auto id = [n](int i, int j) { return i * n + j; };
  auto row_of = [n](Vertex w) { return w / n; };  // G index i
  auto col_of = [n](Vertex w) { return w % n; };  // H index j

  for (EdgeId e = 0; e < gh.size(); ++e) {
    const auto [a, b] = gh.edge(e);
    const bool h_layer = row_of(a) == row_of(b);  // edge w_{i,j} w_{i,j'}
    const Graph& factor = h_layer ? h : g;
    const int fixed = h_layer ? row_of(a) : col_of(a);
    auto local = [&](Vertex w) { return h_layer ? col_of(w) : row_of(w); };
    auto global = [&](Vertex v) { return h_layer ? id(fixed, v) : id(v, fixed); };
    const EdgeId factor_edge = *factor.edge_id(local(a), local(b));
    for (Vertex x = 0; x < gh.order(); ++x) {
      ++report.pair_checks;
      const auto pairs = monitored_pairs(gh, {x}, e);
      const bool in_layer = h_layer ? row_of(x) == fixed : col_of(x) == fixed;
      std::vector<DetectingPair> expected;
      if (in_layer) {
        for (const auto& [px, py] : monitored_pairs(factor, {local(x)}, factor_edge)) {
          expected.emplace_back(global(px), global(py));
        }
        std::sort(expected.begin(), expected.end());
      }
      if (pairs != expected) {
        report.counterexamples.push_back("probe " + std::to_string(x) + " edge " +
                                         std::to_string(a) + "-" + std::to_string(b) + ": got " +
                                         pair_text(pairs) + " expected " + pair_text(expected));
      }
    }
  }

  for (Vertex w = 0; w < gh.order(); ++w) {
    ++report.em_checks;
    const int i = row_of(w);
    const int j = col_of(w);
    std::vector<EdgeId> expected;
    for (EdgeId f : monitored_edges(h, j)) {
      expected.push_back(*gh.edge_id(id(i, h.edge(f).u), id(i, h.edge(f).v)));
    }
    for (EdgeId f : monitored_edges(g, i)) {
      expected.push_back(*gh.edge_id(id(g.edge(f).u, j), id(g.edge(f).v, j)));
    }
    std::sort(expected.begin(), expected.end());
    if (monitored_edges(gh, w) != expected) {
      report.counterexamples.push_back("EM of vertex " + std::to_string(w) +
                                       " differs from the union of its layer EM sets");
    }
  }
  return report;
}

Suite parse_suite(std::string_view name) {
  if (name == "formulas") return Suite::kFormulas;
  if (name == "bounds") return Suite::kBounds;
  if (name == "sharpness") return Suite::kSharpness;
  if (name == "all") return Suite::kAll;
  throw InputError("unknown suite '" + std::string(name) + "'");
}

namespace {

GraphExpr fam(FamilyKind kind, std::vector<int> params,
              std::optional<std::uint64_t> seed = std::nullopt) {
  return GraphExpr::leaf(FamilySpec{kind, std::move(params), seed});
}

GraphExpr path(int n) { return fam(FamilyKind::kPath, {n}); }
GraphExpr cycle(int n) { return fam(FamilyKind::kCycle, {n}); }
GraphExpr complete(int n) { return fam(FamilyKind::kComplete, {n}); }
GraphExpr book(int q) { return fam(FamilyKind::kBook, {q}); }

GraphExpr op(ProductOp o, GraphExpr g, GraphExpr h) {
  return GraphExpr::product(o, std::move(g), std::move(h));
}

int order_of(const GraphExpr& e) { return build(e).graph.order(); }

std::vector<VerificationRecord> formulas(const SuiteOptions& opt) {
  std::vector<GraphExpr> cases;
  for (int n = 2; n <= 6; ++n) cases.push_back(complete(n));
  for (int n = 3; n <= 8; ++n) cases.push_back(cycle(n));
  for (int q = 2; q <= 5; ++q) cases.push_back(book(q));
  for (int d = 1; d <= 4; ++d) cases.push_back(fam(FamilyKind::kHypercube, {d}));
  for (int a = 2; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) cases.push_back(fam(FamilyKind::kCompleteBipartite, {a, b}));
  for (int t = 0; t < 20; ++t) {
    cases.push_back(fam(FamilyKind::kRandomTree, {2 + t % 11}, opt.seed + t));
  }
  const std::vector<GraphExpr> small = {path(2), path(3), path(4), cycle(3), cycle(4), complete(3)};
  for (const auto& g : small)
    for (const auto& h : small)
      if (order_of(g) + order_of(h) <= 12) cases.push_back(op(ProductOp::kJoin, g, h));
  for (const auto& g : {path(2), path(3), cycle(3)})
    for (const auto& h : {path(2), complete(3), path(3)}) cases.push_back(op(ProductOp::kCorona, g, h));
  for (const auto& g : {cycle(4), complete(4)})
    for (const auto& h : {path(2), path(3)}) cases.push_back(op(ProductOp::kCluster, g, h));
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n) cases.push_back(op(ProductOp::kCartesian, path(m), path(n)));
  for (auto [m, n] : {std::pair{2, 5}, {2, 6}, {3, 4}, {3, 7}, {2, 4}}) {
    cases.push_back(op(ProductOp::kCartesian, path(m), cycle(n)));
  }
  // the star K_{1,3} is the smallest tree that is not a path
  cases.push_back(op(ProductOp::kCartesian,
                     fam(FamilyKind::kCompleteBipartite, {1, 3}), cycle(4)));
  cases.push_back(op(ProductOp::kCartesian,
                     fam(FamilyKind::kCompleteBipartite, {1, 3}), cycle(5)));
  for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {3, 5}, {4, 4}}) {
    cases.push_back(op(ProductOp::kCartesian, cycle(m), cycle(n)));
  }
  for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {4, 4}}) {
    cases.push_back(op(ProductOp::kCartesian, complete(m), complete(n)));
  }
  for (int n = 9; n <= 10; ++n) {
    cases.push_back(op(ProductOp::kJoin, path(n), complete(1)));
  }
  std::vector<VerificationRecord> out;
  for (const auto& e : cases) out.push_back(verify_instance(e, opt.limits));
  return out;
}

std::vector<VerificationRecord> bounds(const SuiteOptions& opt) {
  std::vector<VerificationRecord> out;
  const std::vector<GraphExpr> corpus = {path(2),  path(3),  path(4),     cycle(3),
                                         cycle(4), cycle(5), complete(3), book(2)};
  for (size_t a = 0; a < corpus.size(); ++a) {
    for (size_t b = a; b < corpus.size(); ++b) {
      const GraphExpr e = op(ProductOp::kCartesian, corpus[a], corpus[b]);
      const auto fg = analyze_factor(build(corpus[a]).graph, opt.limits);
      const auto fh = analyze_factor(build(corpus[b]).graph, opt.limits);
      if (order_of(corpus[a]) * order_of(corpus[b]) > opt.limits.max_n) {
        out.push_back(skipped(format_graph_expr(e), cartesian_bounds(fg, fh), "product over cap"));
        continue;
      }
      out.push_back(verify_against(e, cartesian_bounds(fg, fh), opt.limits));
    }
  }
  for (const auto& g : {cycle(4), complete(4)})
    for (const auto& h : {cycle(3), complete(4)})
      out.push_back(verify_instance(op(ProductOp::kCluster, g, h), opt.limits));
  for (int t = 0; t < 20; ++t) {
    const GraphExpr g = fam(FamilyKind::kRandomConnected, {4 + t % 7, 1, 3}, opt.seed + t);
    out.push_back(verify_instance(op(ProductOp::kJoin, g, complete(1)), opt.limits));
  }
  return out;
}

std::vector<VerificationRecord> sharpness(const SuiteOptions& opt) {
  std::vector<VerificationRecord> out;
  const std::vector<std::pair<GraphExpr, GraphExpr>> upper_pairs = {
      {book(2), book(2)}, {path(2), path(2)}, {cycle(4), book(2)}, {path(3), book(2)},
      {cycle(3), cycle(4)}, {book(3), path(2)}, {complete(3), book(2)}, {path(2), cycle(5)},
  };
  for (const auto& [g, h] : upper_pairs) {
    out.push_back(check_upper_equality_condition(g, h, opt.limits).record);
  }
  // closed forms that follow from the upper-bound characterization
  for (const auto& [g, h] : {std::pair{book(2), book(2)}, {book(2), book(3)}, {cycle(4), book(2)},
                             {path(3), book(3)}, {complete(3), book(2)}}) {
    out.push_back(verify_instance(op(ProductOp::kCartesian, g, h), opt.limits));
  }
  const std::vector<std::pair<GraphExpr, GraphExpr>> lower_pairs = {
      {cycle(4), path(4)}, {cycle(3), path(3)}, {cycle(4), path(5)}, {cycle(5), path(5)},
      {complete(3), complete(3)}, {complete(3), complete(4)}, {cycle(3), cycle(4)},
      {cycle(4), cycle(4)}, {book(2), book(2)}, {cycle(3), path(2)},
  };
  for (const auto& [g, h] : lower_pairs) {
    out.push_back(check_lower_equality_condition(g, h, opt.limits).record);
  }
  return out;
}

}  // namespace

std::vector<VerificationRecord> run_suite(Suite suite, const SuiteOptions& options) {
  std::vector<VerificationRecord> out;
  auto append = [&out](std::vector<VerificationRecord> part) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  };
  if (suite == Suite::kFormulas || suite == Suite::kAll) append(formulas(options));
  if (suite == Suite::kBounds || suite == Suite::kAll) append(bounds(options));
  if (suite == Suite::kSharpness || suite == Suite::kAll) append(sharpness(options));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.instance, a.predicted.rule) < std::tie(b.instance, b.predicted.rule);
  });
  return out;
}

std::string records_csv(const std::vector<VerificationRecord>& records, bool timing) {
  std::ostringstream out;
  out << "instance,predicted,computed,verdict,rule" << (timing ? ",runtime_ms" : "") << '\n';
  for (const auto& r : records) {
    std::string name = r.instance;
    std::replace(name.begin(), name.end(), ',', ';');
    out << name << ',' << r.predicted.to_string() << ','
        << (r.computed ? std::to_string(*r.computed) : "NA") << ',' << verdict_name(r.verdict)
        << ',' << r.predicted.rule;
    if (timing) out << ',' << static_cast<long long>(r.runtime_ms + 0.5);
    out << '\n';
  }
  return out.str();
}

std::string records_json(const std::vector<VerificationRecord>& records, bool timing) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["predicted"] = r.predicted.to_string();
    j["computed"] = r.computed ? nlohmann::ordered_json(*r.computed) : nlohmann::ordered_json();
    j["verdict"] = verdict_name(r.verdict);
    j["rule"] = r.predicted.rule;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (timing) j["runtime_ms"] = r.runtime_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace demkit
