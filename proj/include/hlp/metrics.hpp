#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hlp/graph.hpp"
#include "hlp/hierarchy.hpp"
#include "hlp/labelprop.hpp"

namespace hlp {

/// Newman modularity of an assignment, computed in the per-community form
///   sum_k [ |E(C_k)|/m  -  (sum of degrees in C_k / 2m)^2 ].
/// Equals the literal pairwise double sum; value in [-1, 1].
/// Throws UndefinedMetricError when the graph has no edges.
double modularity(const Graph& g, const Assignment& a);

/// Modularity of every level's base projection; returns the maximizing
/// level (smallest index on ties) and its value.
std::pair<std::size_t, double> best_level_modularity(const Hierarchy& h);

/// Edge count between two distinct communities (multiplicity of the cut).
struct PairCut {
  node_id a = 0;  // a < b
  node_id b = 0;
  std::uint64_t count = 0;
};

struct CommunityEdgeStats {
  std::vector<std::uint64_t> internal;  // |E(C_k)| per community
  std::vector<std::uint64_t> external;  // edges leaving C_k
  std::vector<PairCut> pair_cuts;       // sorted by (a, b), nonzero only
};

/// Classifies every edge as internal to its community or crossing a
/// community pair, in one pass.
CommunityEdgeStats community_edge_stats(const Graph& g, const Assignment& a);

}  // namespace hlp
