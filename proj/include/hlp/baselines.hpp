#pragma once

#include "hlp/graph.hpp"
#include "hlp/labelprop.hpp"

namespace hlp {

/// Two-way split: community 0 is the maximum k-core (nodes whose core
/// number equals the degeneracy), community 1 everything else; k = 1 when
/// the maximum core covers the whole graph. Throws DegenerateInputError on
/// graphs without edges.
Assignment kcore_split(const Graph& g);

/// Repeated densest-subgraph extraction: on the residual graph, take the
/// peel-order suffix of maximum density |E(S)|/|S| (the classical
/// 1/2-approximation), assign it the next community id, remove it, repeat.
/// Ties prefer the largest suffix. Remaining edgeless nodes collapse into
/// one final residue community.
Assignment densest_subgraph_peel(const Graph& g);

}  // namespace hlp
