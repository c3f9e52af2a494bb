#include "hlp/baselines.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hlp/errors.hpp"

namespace hlp {

Assignment kcore_split(const Graph& g) {
  if (g.num_edges() == 0) {
    throw DegenerateInputError(
        "k-core split undefined: graph has no edges");
  }
  const CoreDecomposition cores = core_decomposition(g);
  const node_id degeneracy =
      *std::max_element(cores.core_number.begin(), cores.core_number.end());

  Assignment out;
  out.labels.resize(g.num_nodes());
  bool any_outside = false;
  for (node_id v = 0; v < g.num_nodes(); ++v) {
    const bool in_max_core = cores.core_number[v] == degeneracy;
    out.labels[v] = in_max_core ? 0 : 1;
    any_outside = any_outside || !in_max_core;
  }
  out.k = any_outside ? 2 : 1;
  return out;
}

namespace {

/// Min-degree bucket peel restricted to the alive subgraph; fills `order`
/// with the removal sequence.
void peel_alive(const Graph& g, const std::vector<std::uint8_t>& alive,
                std::vector<node_id>& order) {
  const std::size_t n = g.num_nodes();
  order.clear();

  std::vector<std::uint32_t> deg(n, 0);
  std::size_t max_deg = 0;
  std::size_t alive_count = 0;
  for (node_id v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    ++alive_count;
    std::uint32_t d = 0;
    for (node_id u : g.neighbors(v)) d += alive[u];
    deg[v] = d;
    max_deg = std::max(max_deg, static_cast<std::size_t>(d));
  }
  if (alive_count == 0) return;

  std::vector<std::uint64_t> bin(max_deg + 2, 0);
  for (node_id v = 0; v < n; ++v) {
    if (alive[v]) ++bin[deg[v]];
  }
  std::uint64_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const std::uint64_t width = bin[d];
    bin[d] = start;
    start += width;
  }
  std::vector<std::uint64_t> pos(n);
  std::vector<node_id> vert(alive_count);
  for (node_id v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg + 1; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < alive_count; ++i) {
    const node_id v = vert[i];
    order.push_back(v);
    for (node_id u : g.neighbors(v)) {
      if (!alive[u] || deg[u] <= deg[v]) continue;
      const std::uint32_t du = deg[u];
      const std::uint64_t pu = pos[u];
      const std::uint64_t pw = bin[du];
      const node_id w = vert[pw];
      if (u != w) {
        vert[pu] = w;
        vert[pw] = u;
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
}

}  // namespace

Assignment densest_subgraph_peel(const Graph& g) {
  const std::size_t n = g.num_nodes();
  Assignment out;
  out.labels.assign(n, 0);
  out.k = 0;
  if (n == 0) return out;

  std::vector<std::uint8_t> alive(n, 1);
  std::size_t remaining = n;
  node_id next_community = 0;

  std::vector<node_id> order;
  std::vector<std::uint64_t> rank(n, 0);
  std::vector<std::uint64_t> suffix_edges;

  while (remaining > 0) {
    peel_alive(g, alive, order);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

    // suffix_edges[i] = edges among order[i..end]; exact counts via a
    // reverse sweep (the peel's lazy degrees are not usable here)
    suffix_edges.assign(order.size() + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;) {
      const node_id v = order[i];
      std::uint64_t to_later = 0;
      for (node_id u : g.neighbors(v)) {
        if (alive[u] && rank[u] > i) ++to_later;
      }
      suffix_edges[i] = suffix_edges[i + 1] + to_later;
    }

    if (suffix_edges[0] == 0) {
      // no edge structure left: remaining nodes form one residue community
      for (node_id v = 0; v < n; ++v) {
        if (alive[v]) out.labels[v] = next_community;
      }
      ++next_community;
      break;
    }

    // Pick the suffix of maximum density |E(S)|/|S|, comparing fractions by
    // cross-multiplication. Strict improvement only, so equal densities
    // keep the earliest peel point (largest suffix).
    std::uint64_t best_edges = suffix_edges[0];
    std::uint64_t best_nodes = order.size();
    std::size_t best_start = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const std::uint64_t nodes_left = order.size() - i;
      if (suffix_edges[i] * best_nodes > best_edges * nodes_left) {
        best_edges = suffix_edges[i];
        best_nodes = nodes_left;
        best_start = i;
      }
    }

    for (std::size_t i = best_start; i < order.size(); ++i) {
      out.labels[order[i]] = next_community;
      alive[order[i]] = 0;
    }
    remaining -= order.size() - best_start;
    ++next_community;
  }

  out.k = next_community;
  return out;
}

}  // namespace hlp
