#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "hlp/hierarchy.hpp"
#include "hlp/labelprop.hpp"

namespace hlp {

struct DocumentMeta {
  std::string graph_name;
  LpParams params;
};

/// Writes the whole hierarchy as one self-describing JSON document: meta,
/// per-level records (communities, supernodes, superedges, iterations,
/// elapsed, modularity) and the compressed assignments. Field order is
/// fixed for diff-ability. Returns bytes written.
std::size_t write_hierarchy_json(const Hierarchy& h, const DocumentMeta& meta,
                                 std::ostream& out);

/// Writes the level-t supergraph in DOT. Nodes carry the community size (in
/// base nodes) and supergraph degree; edges carry the cut multiplicity
/// |E(C_i, C_j)| from the level below. Returns bytes written; throws
/// std::out_of_range for a bad level.
std::size_t write_supergraph_dot(const Hierarchy& h, std::size_t t,
                                 std::ostream& out);

}  // namespace hlp
