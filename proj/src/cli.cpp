#include "demkit/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "demkit/comparison.hpp"
#include "demkit/cover.hpp"
#include "demkit/expr.hpp"
#include "demkit/monitoring.hpp"
#include "demkit/theorems.hpp"

namespace demkit {

namespace {

struct LoadedGraph {
  std::string name;
  Graph graph;
};

// "gen=<expr>" builds a generated graph; anything else is an edge-list file.
LoadedGraph load_graph(const std::string& arg) {
  if (arg.starts_with("gen=")) {
    const GraphExpr expr = parse_graph_expr(arg.substr(4));
    return {format_graph_expr(expr), build(expr).graph};
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open graph file '" + arg + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return {arg, parse_edge_list(text.str())};
}

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string s;
  for (Vertex v : ids) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

class Emitter {
 public:
  Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path_);
    if (!file) throw InputError("cannot write '" + path_ + "'");
    file << text;
  }

 private:
  std::ostream& out_;
  std::string path_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-edge-monitoring sets: exact solver, generators and formula checks",
               "demkit"};
  app.require_subcommand(1);

  std::string output_path;
  std::string format;
  int max_n = 0;
  auto add_common = [&](CLI::App* sub, std::string default_format,
                        std::vector<std::string> formats) {
    format = default_format;
    sub->add_option("-o,--output", output_path, "Write the report to this file");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    sub->add_option("--max-n", max_n, "Solver vertex cap (default 24 or $DEMKIT_MAX_N)")
        ->check(CLI::Range(1, 64));
  };

  std::string graph_arg;
  bool all_min_sets = false;
  bool greedy = false;
  auto* dem = app.add_subcommand("dem", "Compute dem(G) and a minimum DEM set");
  dem->add_option("graph", graph_arg, "Edge-list file or gen=<expression>")->required();
  dem->add_flag("--all-min-sets", all_min_sets, "List every minimum DEM set");
  dem->add_flag("--greedy", greedy, "Also report the greedy DEM set");

  std::string family_arg;
  auto* gen = app.add_subcommand("gen", "Emit the edge list of a family or product");
  gen->add_option("expression", family_arg, "e.g. book:4 or cartesian(path:3,cycle:4)")
      ->required();

  auto* cover = app.add_subcommand("cover", "Compute the vertex cover number c(G)");
  cover->add_option("graph", graph_arg, "Edge-list file or gen=<expression>")->required();

  std::string suite_name = "all";
  std::uint64_t seed = 1;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check closed-form DEM formulas against the solver");
  verify->add_option("--suite", suite_name, "formulas, bounds, sharpness or all")
      ->check(CLI::IsMember({"formulas", "bounds", "sharpness", "all"}))
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for the random instances")->capture_default_str();
  verify->add_flag("--timing", timing, "Add per-instance runtime to the report");

  std::vector<std::string> compare_args;
  auto* compare = app.add_subcommand("compare", "Compare dem with metric dimension variants");
  compare->add_option("graphs", compare_args, "Edge-list files or gen=<expression>")
      ->required();

  // Each subcommand gets its own copy of the shared options.
  add_common(dem, "json", {"json", "plain"});
  add_common(gen, "plain", {"plain"});
  add_common(cover, "json", {"json", "plain"});
  add_common(verify, "csv", {"csv", "json"});
  add_common(compare, "csv", {"csv", "json"});
  format.clear();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    SolverLimits limits = limits_from_environment();
    if (max_n > 0) {
      limits.max_n = max_n;
      if (compare->parsed()) limits.comparison_max_n = max_n;
    }
    auto default_format = [&](const char* fmt) { return format.empty() ? std::string(fmt) : format; };
    Emitter emit(out, output_path);

    if (dem->parsed()) {
      const LoadedGraph in = load_graph(graph_arg);
      const DemResult r = dem_number(in.graph, all_min_sets, limits);
      if (default_format("json") == "plain") {
        std::ostringstream s;
        s << "graph " << in.name << "\nn " << r.n << "\nm " << r.m << "\ndem " << r.value
          << "\nwitness " << join_ids(r.witness) << '\n';
        if (r.all_minimum_sets) {
          for (const auto& set : *r.all_minimum_sets) s << "minimum_set " << join_ids(set) << '\n';
        }
        if (greedy) s << "greedy " << join_ids(greedy_dem(in.graph)) << '\n';
        emit.write(s.str());
      } else {
        auto j = nlohmann::ordered_json::parse(to_json(r));
        if (greedy) j["greedy"] = greedy_dem(in.graph);
        emit.write(j.dump() + "\n");
      }
      return kExitOk;
    }

    if (gen->parsed()) {
      std::string expr = family_arg;
      if (expr.starts_with("gen=")) expr = expr.substr(4);
      emit.write(write_edge_list(build(parse_graph_expr(expr)).graph));
      return kExitOk;
    }

    if (cover->parsed()) {
      const LoadedGraph in = load_graph(graph_arg);
      const CoverResult r = vertex_cover_number(in.graph, limits);
      if (default_format("json") == "plain") {
        emit.write("graph " + in.name + "\nc " + std::to_string(r.value) + "\nwitness " +
                   join_ids(r.witness) + "\n");
      } else {
        nlohmann::ordered_json j;
        j["n"] = in.graph.order();
        j["m"] = in.graph.size();
        j["c"] = r.value;
        j["witness"] = r.witness;
        j["nodes_explored"] = r.nodes_explored;
        emit.write(j.dump() + "\n");
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      SuiteOptions options{limits, seed};
      const auto records = run_suite(parse_suite(suite_name), options);
      emit.write(default_format("csv") == "json" ? records_json(records, timing) + "\n"
                                                 : records_csv(records, timing));
      const bool failed = std::any_of(records.begin(), records.end(),
                                      [](const auto& r) { return r.verdict == Verdict::kFail; });
      return failed ? kExitVerificationFailed : kExitOk;
    }

    if (compare->parsed()) {
      std::vector<ComparisonRow> rows;
      for (const auto& arg : compare_args) {
        const LoadedGraph in = load_graph(arg);
        rows.push_back(compare_parameters(in.name, in.graph, limits));
      }
      if (default_format("csv") == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
          nlohmann::ordered_json j;
          j["graph"] = row.graph;
          j["n"] = row.n;
          j["m"] = row.m;
          auto put = [&](const char* key, const std::optional<DimensionResult>& r) {
            j[key] = r ? nlohmann::ordered_json(r->value) : nlohmann::ordered_json();
          };
          put("dem", row.dem);
          put("dim", row.dim);
          put("edim", row.edim);
          put("dim_s", row.dim_s);
          arr.push_back(std::move(j));
        }
        emit.write(arr.dump(2) + "\n");
      } else {
        emit.write(comparison_csv(rows));
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace demkit
