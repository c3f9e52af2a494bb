#pragma once

#include <cstdint>
#include <vector>

#include "hlp/graph.hpp"
#include "hlp/labelprop.hpp"

namespace hlp {

struct LevelStats {
  std::size_t nodes = 0;        // of the graph this level clustered
  std::size_t edges = 0;
  std::size_t communities = 0;
  int iterations = 0;
  double elapsed = 0.0;         // wall-clock seconds for the level
};

/// One coarsening round: the assignment over the previous level's nodes and
/// the supergraph it induces (one supernode per community).
struct Level {
  Assignment assignment;
  Graph supergraph;
  LevelStats stats;
};

struct Hierarchy {
  Graph base;
  std::vector<Level> levels;  // level t lives at levels[t-1]

  std::size_t num_levels() const { return levels.size(); }

  /// Graph that level t clustered: the base for t = 1, else the supergraph
  /// of level t-1.
  const Graph& graph_at(std::size_t t) const {
    return t <= 1 ? base : levels[t - 2].supergraph;
  }
};

/// Unweighted supergraph: one node per community of `a`, an edge (p, q),
/// p != q, iff some edge of g crosses communities p and q. Never contains
/// multi-edges or self-loops. `a` must cover g and be compact.
Graph create_super_graph(const Graph& g, const Assignment& a);

/// Seed for level t derived from the run seed; level 1 uses it unchanged so
/// the first level reproduces a flat propagate() run bit for bit.
std::uint64_t level_seed(std::uint64_t base_seed, std::size_t t);

/// Alternates propagate and create_super_graph until the supergraph has
/// fewer than two nodes or stops shrinking. Every executed level is
/// recorded, including the one whose supergraph triggered the stop. An
/// empty graph yields an empty hierarchy.
Hierarchy build_hierarchy(Graph base, const LpParams& params);

/// Community of each base node at level t (1-based), obtained by composing
/// the per-level assignments; output compacted. Throws std::out_of_range.
Assignment project_to_base(const Hierarchy& h, std::size_t t);

/// Space-reduced form: the level-1 assignment plus one merge map per later
/// level describing how the previous level's communities combine.
struct CompressedHierarchy {
  std::vector<node_id> level1;
  std::vector<std::vector<node_id>> merges;
};

CompressedHierarchy compress(const Hierarchy& h);

/// Reconstructs the base-node assignment of every level; expand(compress(h))
/// equals project_to_base(h, t) for all t.
std::vector<Assignment> expand(const CompressedHierarchy& c);

}  // namespace hlp
