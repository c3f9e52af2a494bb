#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hlp/graph.hpp"
#include "hlp/rng.hpp"

namespace hlp {

struct LpParams {
  int max_iters = 100;        // T
  int delta = 3;              // consecutive stable iterations before freeze
  std::uint64_t seed = 0;
};

/// Per-node community labels, compacted to 0..k-1 by first occurrence in
/// node-id order. Every value in [0, k) occurs at least once.
struct Assignment {
  std::vector<node_id> labels;
  std::size_t k = 0;
};

/// Mutable propagation state: current labels, per-node count of consecutive
/// unchanged updates, and the active flag (false once stable_iters >= delta).
struct LpState {
  std::vector<node_id> labels;
  std::vector<int> stable_iters;
  std::vector<std::uint8_t> active;
};

LpState initial_lp_state(std::size_t n);

enum class LpExit {
  no_change,      // an iteration changed no label
  all_frozen,     // every node reached delta stable iterations
  iteration_cap,  // max_iters exhausted (not an error)
};

struct LpResult {
  Assignment assignment;
  int iterations = 0;
  LpExit exit = LpExit::iteration_cap;
};

/// Optional per-iteration work counts, for cost accounting.
struct LpCounters {
  std::vector<std::uint64_t> adjacency_reads;  // neighbor entries scanned
  std::vector<std::uint64_t> node_updates;     // nodes touched
};

/// One update step of node v: the label with the maximum multiplicity among
/// v's neighbors' labels. v's own label does not vote. Ties keep the current
/// label when it attains the maximum, otherwise pick uniformly among the
/// maximal labels. A node without neighbors keeps its label.
node_id update_node(const Graph& g, const LpState& state, node_id v, Rng& rng);

/// Asynchronous label propagation from the all-singletons labeling: each
/// iteration shuffles the still-active nodes and applies update_node in that
/// order, later nodes seeing earlier updates. Deterministic given (g, params).
LpResult propagate(const Graph& g, const LpParams& params,
                   LpCounters* counters = nullptr);

/// Relabels to 0..k-1 by first occurrence scanning positions in increasing
/// order.
Assignment compact_labels(std::span<const node_id> raw);

}  // namespace hlp
