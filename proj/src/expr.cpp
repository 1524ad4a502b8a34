#include "demkit/expr.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace demkit {

namespace {

constexpr std::array<std::pair<ProductOp, std::string_view>, 4> kOps{{
    {ProductOp::kJoin, "join"},
    {ProductOp::kCorona, "corona"},
    {ProductOp::kCluster, "cluster"},
    {ProductOp::kCartesian, "cartesian"},
}};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  GraphExpr expr() {
    skip_space();
    const size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ',' && text_[pos_] != ' ') {
      ++pos_;
    }
    const std::string_view word = text_.substr(start, pos_ - start);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const ProductOp op = lookup(word);
      GraphExpr g = expr();
      expect(',');
      GraphExpr h = expr();
      Vertex root = 0;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        skip_space();
        if (op != ProductOp::kCluster || !text_.substr(pos_).starts_with("root=")) {
          fail("only cluster accepts a third argument root=<id>");
        }
        pos_ += 5;
        const size_t digits = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        const auto tok = text_.substr(digits, pos_ - digits);
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), root);
        if (ec != std::errc() || tok.empty()) fail("bad root id");
      }
      expect(')');
      return GraphExpr::product(op, std::move(g), std::move(h), root);
    }
    if (word.empty()) fail("expected a family or product");
    return GraphExpr::leaf(parse_family(word));
  }

  ProductOp lookup(std::string_view word) {
    for (const auto& [op, name] : kOps) {
      if (name == word) return op;
    }
    fail("unknown product '" + std::string(word) + "'");
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw InputError("graph expression '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

GraphExpr GraphExpr::leaf(FamilySpec spec) {
  GraphExpr e;
  e.family = std::move(spec);
  return e;
}

GraphExpr GraphExpr::product(ProductOp op, GraphExpr g, GraphExpr h, Vertex root) {
  GraphExpr e;
  e.op = op;
  e.operands.push_back(std::move(g));
  e.operands.push_back(std::move(h));
  e.root = root;
  return e;
}

std::string_view op_name(ProductOp op) {
  for (const auto& [o, name] : kOps) {
    if (o == op) return name;
  }
  return "?";
}

GraphExpr parse_graph_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_graph_expr(const GraphExpr& expr) {
  if (expr.is_family()) return format_family(expr.family);
  std::string out(op_name(*expr.op));
  out += '(' + format_graph_expr(expr.left()) + ',' + format_graph_expr(expr.right());
  if (*expr.op == ProductOp::kCluster && expr.root != 0) {
    out += ",root=" + std::to_string(expr.root);
  }
  return out + ')';
}

BuiltGraph build(const GraphExpr& expr) {
  if (expr.is_family()) return {generate(expr.family), std::nullopt};
  const Graph g = build(expr.left()).graph;
  const Graph h = build(expr.right()).graph;
  Product p = [&] {
    switch (*expr.op) {
      case ProductOp::kJoin: return join(g, h);
      case ProductOp::kCorona: return corona(g, h);
      case ProductOp::kCluster: return cluster(g, h, expr.root);
      case ProductOp::kCartesian: break;
    }
    return cartesian(g, h);
  }();
  return {std::move(p.graph), std::move(p.map)};
}

}  // namespace demkit
