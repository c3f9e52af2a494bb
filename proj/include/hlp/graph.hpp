#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hlp {

using node_id = std::uint32_t;

/// Immutable undirected simple graph in compressed adjacency form.
/// Nodes are 0..n-1; each neighbor list is sorted, free of duplicates and
/// self-loops, and symmetric (j in neighbors(i) iff i in neighbors(j)).
/// Safe to read from any number of threads once constructed.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes an arbitrary pair list: drops self-loops, collapses
  /// duplicate and reverse-duplicate pairs, symmetrizes directed input.
  /// Every endpoint must be < n.
  Graph(std::size_t n, std::span<const std::pair<node_id, node_id>> pairs);

  std::size_t num_nodes() const { return n_; }
  std::size_t num_edges() const { return m_; }

  std::size_t degree(node_id v) const {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const node_id> neighbors(node_id v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(node_id u, node_id v) const;

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<node_id>& adjacency() const { return adjacency_; }

  /// Each undirected edge once as (min, max), lexicographically sorted.
  std::vector<std::pair<node_id, node_id>> edges() const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> offsets_ = {0};
  std::vector<node_id> adjacency_;
};

enum class GraphFormat { edgelist, mtx };

/// Raw (u, v) pairs as read from an input file, before canonicalization.
struct EdgeList {
  std::vector<std::pair<node_id, node_id>> pairs;
  int index_base = 0;
  std::optional<std::size_t> declared_nodes;
};

/// Reads whitespace-separated integer pairs. Lines starting with '%' or '#'
/// are comments; extra columns (weights) are ignored. The mtx flavor expects
/// a dimensions line "rows cols nnz" before the data and is always 1-based.
/// For plain edge lists the base is 0 unless `base_override` is 1 and node
/// id 0 never appears. Throws ParseError / EmptyInputError.
EdgeList parse_edge_list(std::istream& in, GraphFormat format,
                         std::optional<int> base_override = std::nullopt);

/// Builds the canonical graph: node universe is 0..max_id (after base
/// shift), extended by declared_nodes; ids never mentioned stay as
/// isolated nodes.
Graph build_graph(const EdgeList& edges);

struct CoreDecomposition {
  std::vector<node_id> core_number;
  /// Removal sequence of the nondecreasing-degree peel (degeneracy order).
  std::vector<node_id> peel_order;
};

/// Linear-time bucket peeling. core_number[v] is the largest k such that v
/// survives iterated k-core pruning; max over all nodes is the degeneracy.
CoreDecomposition core_decomposition(const Graph& g);

}  // namespace hlp
