#include "hlp/hierarchy.hpp"

#include <chrono>
#include <stdexcept>

namespace hlp {

Graph create_super_graph(const Graph& g, const Assignment& a) {
  if (a.labels.size() != g.num_nodes()) {
    throw std::invalid_argument("assignment does not cover the graph");
  }
  std::vector<std::pair<node_id, node_id>> crossings;
  for (node_id v = 0; v < g.num_nodes(); ++v) {
    const node_id cv = a.labels[v];
    for (node_id u : g.neighbors(v)) {
      if (u <= v) continue;
      const node_id cu = a.labels[u];
      if (cu != cv) {
        crossings.emplace_back(std::min(cu, cv), std::max(cu, cv));
      }
    }
  }
  return Graph(a.k, crossings);
}

std::uint64_t level_seed(std::uint64_t base_seed, std::size_t t) {
  return t <= 1 ? base_seed : base_seed ^ splitmix64(t);
}

Hierarchy build_hierarchy(Graph base, const LpParams& params) {
  Hierarchy h;
  h.base = std::move(base);
  if (h.base.num_nodes() == 0) return h;

  for (std::size_t t = 1;; ++t) {
    const Graph& current = h.graph_at(t);
    const std::size_t prev_nodes = current.num_nodes();

    const auto started = std::chrono::steady_clock::now();
    LpParams level_params = params;
    level_params.seed = level_seed(params.seed, t);
    LpResult lp = propagate(current, level_params);
    Graph super = create_super_graph(current, lp.assignment);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();

    Level level;
    level.stats = {current.num_nodes(), current.num_edges(),
                   lp.assignment.k, lp.iterations, elapsed};
    level.assignment = std::move(lp.assignment);
    level.supergraph = std::move(super);
    h.levels.push_back(std::move(level));

    const std::size_t super_nodes = h.levels.back().supergraph.num_nodes();
    if (super_nodes < 2 || super_nodes == prev_nodes) break;
  }
  return h;
}

Assignment project_to_base(const Hierarchy& h, std::size_t t) {
  if (t < 1 || t > h.levels.size()) {
    throw std::out_of_range("level index out of range");
  }
  std::vector<node_id> composed = h.levels[0].assignment.labels;
  for (std::size_t s = 1; s < t; ++s) {
    const auto& merge = h.levels[s].assignment.labels;
    for (node_id& lab : composed) lab = merge[lab];
  }
  return compact_labels(composed);
}

CompressedHierarchy compress(const Hierarchy& h) {
  CompressedHierarchy c;
  if (h.levels.empty()) return c;
  c.level1 = h.levels[0].assignment.labels;
  for (std::size_t t = 1; t < h.levels.size(); ++t) {
    c.merges.push_back(h.levels[t].assignment.labels);
  }
  return c;
}

std::vector<Assignment> expand(const CompressedHierarchy& c) {
  std::vector<Assignment> out;
  if (c.level1.empty()) return out;
  std::vector<node_id> composed = c.level1;
  out.push_back(compact_labels(composed));
  for (const auto& merge : c.merges) {
    for (node_id& lab : composed) lab = merge[lab];
    out.push_back(compact_labels(composed));
  }
  return out;
}

}  // namespace hlp
