#include "demkit/families.hpp"

#include <algorithm>
#include <charconv>
#include <random>

namespace demkit {

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::string_view alias;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::kPath, "path", "P"},
    {FamilyKind::kCycle, "cycle", "C"},
    {FamilyKind::kComplete, "complete", "K"},
    {FamilyKind::kCompleteBipartite, "bipartite", "complete_bipartite"},
    {FamilyKind::kBook, "book", "B"},
    {FamilyKind::kHypercube, "hypercube", "Q"},
    {FamilyKind::kRandomTree, "randtree", "random_tree"},
    {FamilyKind::kRandomConnected, "randconn", "random_connected"},
};

size_t param_count(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kCompleteBipartite: return 2;
    case FamilyKind::kRandomConnected: return 3;
    default: return 1;
  }
}

bool is_random(FamilyKind kind) {
  return kind == FamilyKind::kRandomTree || kind == FamilyKind::kRandomConnected;
}

int parse_int(std::string_view tok, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("bad integer '" + std::string(tok) + "' in '" +
                     std::string(context) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Edge> path_edges(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return edges;
}

// Decodes a uniformly drawn Pruefer sequence.
std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
  if (n <= 2) return path_edges(n);
  std::vector<int> code(n - 2);
  for (auto& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    const int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) -
                                      degree.begin());
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    --degree[leaf];
    --degree[c];
  }
  int last[2];
  int k = 0;
  for (int v = 0; v < n && k < 2; ++v) {
    if (degree[v] == 1) last[k++] = v;
  }
  edges.push_back({last[0], last[1]});
  return edges;
}

bool connected(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

std::string_view kind_name(FamilyKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  const std::string name(kind_name(spec.kind));
  if (spec.params.size() != param_count(spec.kind)) {
    throw InputError(name + " expects " + std::to_string(param_count(spec.kind)) +
                     " parameter(s)");
  }
  if (is_random(spec.kind) && !spec.seed) {
    throw InputError(name + " requires a seed");
  }
  const auto& p = spec.params;
  auto require = [&](bool ok, std::string_view what) {
    if (!ok) throw InputError(name + ": " + std::string(what));
  };
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kComplete:
    case FamilyKind::kRandomTree:
      require(p[0] >= 1, "order must be >= 1");
      break;
    case FamilyKind::kCycle:
      require(p[0] >= 3, "order must be >= 3");
      break;
    case FamilyKind::kCompleteBipartite:
      require(p[0] >= 1 && p[1] >= 1, "parts must be >= 1");
      break;
    case FamilyKind::kBook:
      require(p[0] >= 1, "page count must be >= 1");
      break;
    case FamilyKind::kHypercube:
      require(p[0] >= 1 && p[0] <= 20, "dimension must be in 1..20");
      break;
    case FamilyKind::kRandomConnected:
      require(p[0] >= 1, "order must be >= 1");
      require(p[2] >= 1 && p[1] >= 0 && p[1] <= p[2],
              "edge probability must be num/den with 0 <= num <= den");
      break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  std::vector<Edge> edges;
  int n = p[0];
  switch (spec.kind) {
    case FamilyKind::kPath:
      edges = path_edges(n);
      break;
    case FamilyKind::kCycle:
      edges = path_edges(n);
      edges.push_back({0, n - 1});
      break;
    case FamilyKind::kComplete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
      break;
    case FamilyKind::kCompleteBipartite:
      n = p[0] + p[1];
      for (int u = 0; u < p[0]; ++u)
        for (int v = p[0]; v < n; ++v) edges.push_back({u, v});
      break;
    case FamilyKind::kBook:
      // spine (0,1); page i is vertex i+2
      n = p[0] + 2;
      edges.push_back({0, 1});
      for (int page = 2; page < n; ++page) {
        edges.push_back({0, page});
        edges.push_back({1, page});
      }
      break;
    case FamilyKind::kHypercube:
      n = 1 << p[0];
      for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < p[0]; ++bit)
          if (int v = u ^ (1 << bit); u < v) edges.push_back({u, v});
      break;
    case FamilyKind::kRandomTree: {
      std::mt19937_64 rng(*spec.seed);
      edges = random_tree_edges(n, rng);
      break;
    }
    case FamilyKind::kRandomConnected: {
      std::mt19937_64 rng(*spec.seed);
      const auto num = static_cast<std::uint64_t>(p[1]);
      const auto den = static_cast<std::uint64_t>(p[2]);
      bool found = n == 1;
      for (int attempt = 0; attempt < kRandomConnectedRetries && !found; ++attempt) {
        edges.clear();
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (rng() % den < num) edges.push_back({u, v});
        found = connected(n, edges);
      }
      if (!found) {
        throw InputError("randconn: no connected sample within " +
                         std::to_string(kRandomConnectedRetries) + " draws");
      }
      break;
    }
  }
  return Graph(n, std::move(edges));
}

FamilySpec parse_family(std::string_view text) {
  auto parts = split(text, ':');
  FamilySpec spec;
  const auto* info = std::find_if(std::begin(kKinds), std::end(kKinds), [&](const KindInfo& k) {
    return k.name == parts[0] || k.alias == parts[0];
  });
  if (info == std::end(kKinds)) {
    throw InputError("unknown family '" + std::string(parts[0]) + "'");
  }
  spec.kind = info->kind;
  for (size_t i = 1; i < parts.size(); ++i) {
    const auto tok = parts[i];
    if (tok.starts_with("seed=")) {
      const auto digits = tok.substr(5);
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw InputError("bad seed in '" + std::string(text) + "'");
      }
      spec.seed = seed;
    } else if (auto slash = tok.find('/'); slash != std::string_view::npos) {
      spec.params.push_back(parse_int(tok.substr(0, slash), text));
      spec.params.push_back(parse_int(tok.substr(slash + 1), text));
    } else {
      spec.params.push_back(parse_int(tok, text));
    }
  }
  validate(spec);
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  std::string out(kind_name(spec.kind));
  for (size_t i = 0; i < spec.params.size(); ++i) {
    const bool denominator = spec.kind == FamilyKind::kRandomConnected && i == 2;
    out += denominator ? '/' : ':';
    out += std::to_string(spec.params[i]);
  }
  if (spec.seed) out += ":seed=" + std::to_string(*spec.seed);
  return out;
}

}  // namespace demkit
