#include "hlp/labelprop.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hlp {

namespace {

/// Reusable counting buffers; count[] is zeroed between calls via touched.
struct VoteScratch {
  std::vector<std::uint32_t> count;
  std::vector<node_id> touched;
  std::vector<node_id> maximal;
};

node_id vote(const Graph& g, std::span<const node_id> labels, node_id v,
             Rng& rng, VoteScratch& s) {
  const auto neighborhood = g.neighbors(v);
  const node_id current = labels[v];
  if (neighborhood.empty()) return current;

  std::uint32_t best_count = 0;
  for (node_id u : neighborhood) {
    const node_id lab = labels[u];
    if (s.count[lab] == 0) s.touched.push_back(lab);
    best_count = std::max(best_count, ++s.count[lab]);
  }

  node_id result;
  if (s.count[current] == best_count) {
    result = current;  // the current label attains the maximum: keep it
  } else {
    s.maximal.clear();
    for (node_id lab : s.touched) {
      if (s.count[lab] == best_count) s.maximal.push_back(lab);
    }
    result = s.maximal.size() == 1
                 ? s.maximal[0]
                 : s.maximal[rng.bounded(s.maximal.size())];
  }

  for (node_id lab : s.touched) s.count[lab] = 0;
  s.touched.clear();
  return result;
}

}  // namespace

LpState initial_lp_state(std::size_t n) {
  LpState state;
  state.labels.resize(n);
  std::iota(state.labels.begin(), state.labels.end(), node_id{0});
  state.stable_iters.assign(n, 0);
  state.active.assign(n, 1);
  return state;
}

node_id update_node(const Graph& g, const LpState& state, node_id v,
                    Rng& rng) {
  node_id max_label = 0;
  for (node_id lab : state.labels) max_label = std::max(max_label, lab);
  VoteScratch scratch;
  scratch.count.assign(static_cast<std::size_t>(max_label) + 1, 0);
  return vote(g, state.labels, v, rng, scratch);
}

LpResult propagate(const Graph& g, const LpParams& params,
                   LpCounters* counters) {
  if (params.max_iters < 1 || params.delta < 1) {
    throw std::invalid_argument("LpParams: max_iters and delta must be >= 1");
  }

  const std::size_t n = g.num_nodes();
  LpState state = initial_lp_state(n);
  Rng rng(params.seed);

  VoteScratch scratch;
  scratch.count.assign(n, 0);  // labels only ever copy node ids, all < n

  std::vector<node_id> order(n);
  std::iota(order.begin(), order.end(), node_id{0});

  int iterations = 0;
  LpExit exit = order.empty() ? LpExit::all_frozen : LpExit::iteration_cap;

  while (iterations < params.max_iters && !order.empty()) {
    ++iterations;
    rng.shuffle(order);

    bool changed_any = false;
    std::uint64_t reads = 0;
    for (node_id v : order) {
      const node_id next = vote(g, state.labels, v, rng, scratch);
      reads += g.degree(v);
      if (next != state.labels[v]) {
        state.labels[v] = next;
        state.stable_iters[v] = 0;
        changed_any = true;
      } else if (++state.stable_iters[v] >= params.delta) {
        state.active[v] = 0;
      }
    }
    if (counters) {
      counters->adjacency_reads.push_back(reads);
      counters->node_updates.push_back(order.size());
    }

    if (!changed_any) {
      exit = LpExit::no_change;
      break;
    }
    std::erase_if(order, [&](node_id v) { return !state.active[v]; });
    if (order.empty()) {
      exit = LpExit::all_frozen;
      break;
    }
  }

  LpResult out;
  out.assignment = compact_labels(state.labels);
  out.iterations = iterations;
  out.exit = exit;
  return out;
}

Assignment compact_labels(std::span<const node_id> raw) {
  constexpr node_id kUnset = std::numeric_limits<node_id>::max();
  Assignment out;
  out.labels.resize(raw.size());

  node_id max_label = 0;
  for (node_id lab : raw) max_label = std::max(max_label, lab);
  std::vector<node_id> remap(
      raw.empty() ? 0 : static_cast<std::size_t>(max_label) + 1, kUnset);

  node_id next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    node_id& slot = remap[raw[i]];
    if (slot == kUnset) slot = next++;
    out.labels[i] = slot;
  }
  out.k = next;
  return out;
}

}  // namespace hlp
