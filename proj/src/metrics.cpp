#include "hlp/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlp/errors.hpp"

namespace hlp {

double modularity(const Graph& g, const Assignment& a) {
  if (g.num_edges() == 0) {
    throw UndefinedMetricError("modularity undefined: graph has no edges");
  }
  if (a.labels.size() != g.num_nodes()) {
    throw std::invalid_argument("assignment does not cover the graph");
  }

  std::vector<std::uint64_t> internal(a.k, 0);
  std::vector<std::uint64_t> degree_sum(a.k, 0);
  for (node_id v = 0; v < g.num_nodes(); ++v) {
    const node_id c = a.labels[v];
    degree_sum[c] += g.degree(v);
    for (node_id u : g.neighbors(v)) {
      if (u > v && a.labels[u] == c) ++internal[c];
    }
  }

  const double m = static_cast<double>(g.num_edges());
  double q = 0.0;
  for (std::size_t c = 0; c < a.k; ++c) {
    const double share = static_cast<double>(degree_sum[c]) / (2.0 * m);
    q += static_cast<double>(internal[c]) / m - share * share;
  }
  return q;
}

std::pair<std::size_t, double> best_level_modularity(const Hierarchy& h) {
  if (h.levels.empty()) {
    throw std::invalid_argument("empty hierarchy");
  }
  std::size_t best_level = 0;
  double best_value = 0.0;
  for (std::size_t t = 1; t <= h.levels.size(); ++t) {
    const double q = modularity(h.base, project_to_base(h, t));
    if (best_level == 0 || q > best_value) {
      best_level = t;
      best_value = q;
    }
  }
  return {best_level, best_value};
}

CommunityEdgeStats community_edge_stats(const Graph& g, const Assignment& a) {
  if (a.labels.size() != g.num_nodes()) {
    throw std::invalid_argument("assignment does not cover the graph");
  }
  CommunityEdgeStats stats;
  stats.internal.assign(a.k, 0);
  stats.external.assign(a.k, 0);

  std::vector<std::pair<node_id, node_id>> crossings;
  for (node_id v = 0; v < g.num_nodes(); ++v) {
    const node_id cv = a.labels[v];
    for (node_id u : g.neighbors(v)) {
      if (u <= v) continue;
      const node_id cu = a.labels[u];
      if (cu == cv) {
        ++stats.internal[cv];
      } else {
        crossings.emplace_back(std::min(cu, cv), std::max(cu, cv));
      }
    }
  }

  std::sort(crossings.begin(), crossings.end());
  for (std::size_t i = 0; i < crossings.size();) {
    std::size_t j = i;
    while (j < crossings.size() && crossings[j] == crossings[i]) ++j;
    const auto [p, q] = crossings[i];
    const std::uint64_t count = j - i;
    stats.pair_cuts.push_back({p, q, count});
    stats.external[p] += count;
    stats.external[q] += count;
    i = j;
  }
  return stats;
}

}  // namespace hlp
