#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlp/baselines.hpp"
#include "hlp/errors.hpp"
#include "hlp/export.hpp"
#include "hlp/graph.hpp"
#include "hlp/hierarchy.hpp"
#include "hlp/labelprop.hpp"
#include "hlp/metrics.hpp"

namespace {

// exit 2: bad usage or bad input; exit 1: anything unexpected
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string format = "auto";
  std::string method = "hlp";
  std::uint64_t seed = 0;
  int max_iters = 100;
  int delta = 3;
  std::string export_kind;
  std::size_t level = 0;  // 0 = every level (dot export)
  std::string output;
  bool json = false;
};

hlp::LpParams params_of(const RunConfig& cfg) {
  hlp::LpParams params;
  params.max_iters = cfg.max_iters;
  params.delta = cfg.delta;
  params.seed = cfg.seed;
  return params;
}

std::string base_name(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

hlp::GraphFormat resolve_format(const RunConfig& cfg) {
  if (cfg.format == "mtx") return hlp::GraphFormat::mtx;
  if (cfg.format == "edgelist") return hlp::GraphFormat::edgelist;
  const std::string name = base_name(cfg.input);
  const std::size_t dot = name.find_last_of('.');
  return dot != std::string::npos && name.substr(dot) == ".mtx"
             ? hlp::GraphFormat::mtx
             : hlp::GraphFormat::edgelist;
}

hlp::Graph load_graph(const RunConfig& cfg) {
  std::ifstream in(cfg.input);
  if (!in) throw InputError("cannot open '" + cfg.input + "'");
  return hlp::build_graph(hlp::parse_edge_list(in, resolve_format(cfg)));
}

/// Wraps a flat method's assignment as a one-level hierarchy so printing
/// and exports share one path with hlp.
hlp::Hierarchy single_level(hlp::Graph base, hlp::Assignment assignment,
                            int iterations, double elapsed) {
  hlp::Hierarchy h;
  h.base = std::move(base);
  hlp::Level level;
  level.supergraph = hlp::create_super_graph(h.base, assignment);
  level.stats = {h.base.num_nodes(), h.base.num_edges(), assignment.k,
                 iterations, elapsed};
  level.assignment = std::move(assignment);
  h.levels.push_back(std::move(level));
  return h;
}

hlp::Hierarchy run_method(const std::string& method, const hlp::Graph& g,
                          const hlp::LpParams& params) {
  if (method == "hlp") return hlp::build_hierarchy(g, params);

  const auto started = std::chrono::steady_clock::now();
  hlp::Assignment assignment;
  int iterations = 0;
  if (method == "lp") {
    hlp::LpResult result = hlp::propagate(g, params);
    assignment = std::move(result.assignment);
    iterations = result.iterations;
  } else if (method == "ds") {
    assignment = hlp::densest_subgraph_peel(g);
  } else if (method == "kcore") {
    assignment = hlp::kcore_split(g);
  } else {
    throw InputError("unknown method '" + method + "'");
  }
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  return single_level(g, std::move(assignment), iterations, elapsed);
}

std::optional<double> level_modularity(const hlp::Hierarchy& h,
                                       std::size_t t) {
  if (h.base.num_edges() == 0) return std::nullopt;
  return hlp::modularity(h.base, hlp::project_to_base(h, t));
}

void print_stats_table(const hlp::Hierarchy& h, std::ostream& out) {
  out << std::setw(5) << "level" << std::setw(10) << "nodes" << std::setw(10)
      << "edges" << std::setw(8) << "comms" << std::setw(7) << "iters"
      << std::setw(10) << "elapsed" << std::setw(12) << "modularity" << "\n";
  for (std::size_t t = 1; t <= h.levels.size(); ++t) {
    const hlp::LevelStats& stats = h.levels[t - 1].stats;
    out << std::setw(5) << t << std::setw(10) << stats.nodes << std::setw(10)
        << stats.edges << std::setw(8) << stats.communities << std::setw(7)
        << stats.iterations << std::setw(10) << std::fixed
        << std::setprecision(3) << stats.elapsed;
    const auto q = level_modularity(h, t);
    if (q) {
      out << std::setw(12) << std::fixed << std::setprecision(6) << *q;
    } else {
      out << std::setw(12) << "-";
    }
    out << "\n";
    out.unsetf(std::ios::fixed);
  }
}

nlohmann::ordered_json stats_json(const hlp::Hierarchy& h,
                                  const RunConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"graph", base_name(cfg.input)},
                 {"method", cfg.method},
                 {"nodes", h.base.num_nodes()},
                 {"edges", h.base.num_edges()},
                 {"seed", cfg.seed},
                 {"max_iters", cfg.max_iters},
                 {"delta", cfg.delta}};
  doc["levels"] = nlohmann::ordered_json::array();
  for (std::size_t t = 1; t <= h.levels.size(); ++t) {
    const hlp::LevelStats& stats = h.levels[t - 1].stats;
    const auto q = level_modularity(h, t);
    doc["levels"].push_back(
        {{"level", t},
         {"nodes", stats.nodes},
         {"edges", stats.edges},
         {"communities", stats.communities},
         {"iterations", stats.iterations},
         {"elapsed", stats.elapsed},
         {"modularity", q ? nlohmann::ordered_json(*q)
                          : nlohmann::ordered_json(nullptr)}});
  }
  return doc;
}

std::string dot_path_for_level(const std::string& output, std::size_t t) {
  const std::size_t slash = output.find_last_of("/\\");
  const std::size_t dot = output.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return output + ".l" + std::to_string(t);
  }
  return output.substr(0, dot) + ".l" + std::to_string(t) +
         output.substr(dot);
}

void write_exports(const hlp::Hierarchy& h, const RunConfig& cfg) {
  if (cfg.export_kind.empty()) return;
  if (cfg.output.empty()) throw InputError("--export requires --output");

  if (cfg.export_kind == "json") {
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write '" + cfg.output + "'");
    hlp::DocumentMeta meta{base_name(cfg.input), params_of(cfg)};
    hlp::write_hierarchy_json(h, meta, out);
    return;
  }

  // dot: a single level when selected, otherwise one file per level
  if (cfg.level != 0) {
    if (cfg.level > h.num_levels()) {
      throw InputError("level " + std::to_string(cfg.level) +
                       " out of range (hierarchy has " +
                       std::to_string(h.num_levels()) + " levels)");
    }
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write '" + cfg.output + "'");
    hlp::write_supergraph_dot(h, cfg.level, out);
    return;
  }
  for (std::size_t t = 1; t <= h.num_levels(); ++t) {
    const std::string path = dot_path_for_level(cfg.output, t);
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    hlp::write_supergraph_dot(h, t, out);
  }
}

int cmd_detect(const RunConfig& cfg) {
  const hlp::Graph g = load_graph(cfg);
  const hlp::Hierarchy h = run_method(cfg.method, g, params_of(cfg));
  if (cfg.json) {
    std::cout << stats_json(h, cfg).dump(2) << "\n";
  } else {
    print_stats_table(h, std::cout);
  }
  write_exports(h, cfg);
  return 0;
}

int cmd_eval(const RunConfig& cfg) {
  const hlp::Graph g = load_graph(cfg);
  if (g.num_edges() == 0) {
    throw hlp::UndefinedMetricError(
        "modularity undefined: graph has no edges");
  }
  const hlp::LpParams params = params_of(cfg);

  struct Row {
    std::string method;
    double modularity;
    std::size_t level;
  };
  std::vector<Row> rows;

  const hlp::Hierarchy h = hlp::build_hierarchy(g, params);
  const auto [best_level, best_value] = hlp::best_level_modularity(h);
  rows.push_back({"hlp", best_value, best_level});

  const hlp::LpResult lp = hlp::propagate(g, params);
  rows.push_back({"lp", hlp::modularity(g, lp.assignment), 1});
  rows.push_back({"ds", hlp::modularity(g, hlp::densest_subgraph_peel(g)), 1});
  rows.push_back({"kcore", hlp::modularity(g, hlp::kcore_split(g)), 1});

  if (cfg.json) {
    for (const Row& row : rows) {
      nlohmann::ordered_json record = {{"method", row.method},
                                       {"modularity", row.modularity},
                                       {"level", row.level}};
      std::cout << record.dump() << "\n";
    }
  } else {
    std::cout << std::setw(8) << "method" << std::setw(12) << "modularity"
              << std::setw(7) << "level" << "\n";
    for (const Row& row : rows) {
      std::cout << std::setw(8) << row.method << std::setw(12) << std::fixed
                << std::setprecision(6) << row.modularity << std::setw(7)
                << row.level << "\n";
      std::cout.unsetf(std::ios::fixed);
    }
  }
  return 0;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "input graph file")->required();
  cmd->add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "mtx"}))
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--max-iters", cfg.max_iters, "iteration cap per level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--delta", cfg.delta,
                  "stable iterations before a node is frozen")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--json", cfg.json, "machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hierarchical label propagation community detection"};
  app.require_subcommand(1);

  RunConfig detect_cfg;
  CLI::App* detect = app.add_subcommand(
      "detect", "run one method and print per-level statistics");
  add_common_options(detect, detect_cfg);
  detect->add_option("--method", detect_cfg.method, "detection method")
      ->check(CLI::IsMember({"hlp", "lp", "ds", "kcore"}))
      ->capture_default_str();
  detect->add_option("--export", detect_cfg.export_kind, "export format")
      ->check(CLI::IsMember({"json", "dot"}));
  detect->add_option("--level", detect_cfg.level,
                     "level selector for dot export (default: all levels)");
  detect->add_option("--output", detect_cfg.output, "export path");

  RunConfig eval_cfg;
  CLI::App* eval = app.add_subcommand(
      "eval", "run hlp, lp, ds and kcore; print one modularity per method");
  add_common_options(eval, eval_cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (detect->parsed()) return cmd_detect(detect_cfg);
    if (eval->parsed()) return cmd_eval(eval_cfg);
    return 2;
  } catch (const hlp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hlp::EmptyInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hlp::UndefinedMetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hlp::DegenerateInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
