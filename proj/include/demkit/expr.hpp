#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "demkit/families.hpp"
#include "demkit/products.hpp"

namespace demkit {

enum class ProductOp { kJoin, kCorona, kCluster, kCartesian };

/// A family leaf or a binary product of two sub-expressions.
///
/// Grammar:
///   expr    := family | op '(' expr ',' expr [',' 'root=' int] ')'
///   op      := join | corona | cluster | cartesian
/// `root=` is only accepted for cluster.
struct GraphExpr {
  std::optional<ProductOp> op;  // empty for a family leaf
  FamilySpec family;
  std::vector<GraphExpr> operands;
  Vertex root = 0;

  bool is_family() const { return !op.has_value(); }
  const GraphExpr& left() const { return operands[0]; }
  const GraphExpr& right() const { return operands[1]; }

  static GraphExpr leaf(FamilySpec spec);
  static GraphExpr product(ProductOp op, GraphExpr g, GraphExpr h, Vertex root = 0);
};

GraphExpr parse_graph_expr(std::string_view text);
std::string format_graph_expr(const GraphExpr& expr);

struct BuiltGraph {
  Graph graph;
  std::optional<ProductVertexMap> map;  // set for products
};

BuiltGraph build(const GraphExpr& expr);

std::string_view op_name(ProductOp op);

}  // namespace demkit
