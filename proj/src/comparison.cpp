#include "demkit/comparison.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "demkit/monitoring.hpp"

namespace demkit {

namespace {

using Signature = std::vector<std::uint32_t>;

bool all_distinct(std::vector<Signature> sigs) {
  std::sort(sigs.begin(), sigs.end());
  return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
}

void check_ids(const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw InputError("vertex id " + std::to_string(v) + " out of range");
  }
}

// Smallest subset, lexicographically first within its size, passing `ok`.
DimensionResult smallest_subset(const Graph& g, const SolverLimits& limits, const char* what,
                                const std::function<bool(const std::vector<Vertex>&)>& ok) {
  const int n = g.order();
  if (n > limits.comparison_max_n) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) +
                      " vertices exceeds cap " + std::to_string(limits.comparison_max_n));
  }
  for (int k = 0; k <= n; ++k) {
    std::vector<Vertex> combo(k);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      if (ok(combo)) return {k, combo};
      int i = k - 1;
      while (i >= 0 && combo[i] == n - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return {n, std::vector<Vertex>()};  // unreachable: V(G) resolves everything
}

}  // namespace

bool is_resolving_set(const Graph& g, const std::vector<Vertex>& s) {
  check_ids(g, s);
  std::vector<Signature> sigs(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : s) sigs[v].push_back(g.distance(v, w).hops());
  }
  return all_distinct(std::move(sigs));
}

bool is_edge_resolving_set(const Graph& g, const std::vector<Vertex>& s) {
  check_ids(g, s);
  std::vector<Signature> sigs(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& [a, b] = g.edge(e);
    for (Vertex w : s) {
      sigs[e].push_back(std::min(g.distance(a, w).hops(), g.distance(b, w).hops()));
    }
  }
  return all_distinct(std::move(sigs));
}

bool is_strong_resolving_set(const Graph& g, const std::vector<Vertex>& s) {
  check_ids(g, s);
  auto d = [&](Vertex a, Vertex b) { return g.distance(a, b).hops(); };
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool resolved = std::any_of(s.begin(), s.end(), [&](Vertex w) {
        return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
      });
      if (!resolved) return false;
    }
  }
  return true;
}

DimensionResult metric_dimension(const Graph& g, const SolverLimits& limits) {
  return smallest_subset(g, limits, "metric dimension",
                         [&](const auto& s) { return is_resolving_set(g, s); });
}

DimensionResult edge_metric_dimension(const Graph& g, const SolverLimits& limits) {
  return smallest_subset(g, limits, "edge metric dimension",
                         [&](const auto& s) { return is_edge_resolving_set(g, s); });
}

DimensionResult strong_metric_dimension(const Graph& g, const SolverLimits& limits) {
  return smallest_subset(g, limits, "strong metric dimension",
                         [&](const auto& s) { return is_strong_resolving_set(g, s); });
}

ComparisonRow compare_parameters(const std::string& name, const Graph& g,
                                 const SolverLimits& limits) {
  ComparisonRow row;
  row.graph = name;
  row.n = g.order();
  row.m = g.size();
  auto attempt = [](auto&& fn) -> std::optional<DimensionResult> {
    try {
      return fn();
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
  };
  row.dem = attempt([&] {
    const DemResult r = dem_number(g, false, limits);
    return DimensionResult{r.value, r.witness};
  });
  row.dim = attempt([&] { return metric_dimension(g, limits); });
  row.edim = attempt([&] { return edge_metric_dimension(g, limits); });
  row.dim_s = attempt([&] { return strong_metric_dimension(g, limits); });
  return row;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "graph,n,m,dem,dim,edim,dim_s\n";
  auto cell = [](const std::optional<DimensionResult>& r) {
    return r ? std::to_string(r->value) : std::string("NA");
  };
  for (const auto& row : rows) {
    std::string name = row.graph;
    std::replace(name.begin(), name.end(), ',', ';');
    out << name << ',' << row.n << ',' << row.m << ',' << cell(row.dem) << ','
        << cell(row.dim) << ',' << cell(row.edim) << ',' << cell(row.dim_s) << '\n';
  }
  return out.str();
}

}  // namespace demkit
