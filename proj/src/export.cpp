#include "hlp/export.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hlp/errors.hpp"
#include "hlp/metrics.hpp"

namespace hlp {

namespace {

nlohmann::ordered_json level_modularity_or_null(const Hierarchy& h,
                                                std::size_t t) {
  if (h.base.num_edges() == 0) return nullptr;
  return modularity(h.base, project_to_base(h, t));
}

}  // namespace

std::size_t write_hierarchy_json(const Hierarchy& h, const DocumentMeta& meta,
                                 std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["meta"] = {
      {"graph", meta.graph_name},
      {"nodes", h.base.num_nodes()},
      {"edges", h.base.num_edges()},
      {"params",
       {{"max_iters", meta.params.max_iters}, {"delta", meta.params.delta}}},
      {"seed", meta.params.seed},
  };

  doc["levels"] = nlohmann::ordered_json::array();
  for (std::size_t t = 1; t <= h.levels.size(); ++t) {
    const Level& level = h.levels[t - 1];
    doc["levels"].push_back({
        {"level", t},
        {"communities", level.assignment.k},
        {"supernodes", level.supergraph.num_nodes()},
        {"superedges", level.supergraph.num_edges()},
        {"iterations", level.stats.iterations},
        {"elapsed", level.stats.elapsed},
        {"modularity", level_modularity_or_null(h, t)},
    });
  }

  const CompressedHierarchy compressed = compress(h);
  doc["assignments"] = {
      {"level1", compressed.level1},
      {"merges", compressed.merges},
  };

  const std::string text = doc.dump(2) + "\n";
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("failed to write hierarchy document");
  return text.size();
}

std::size_t write_supergraph_dot(const Hierarchy& h, std::size_t t,
                                 std::ostream& out) {
  if (t < 1 || t > h.levels.size()) {
    throw std::out_of_range("level index out of range");
  }
  const Level& level = h.levels[t - 1];
  const Graph& super = level.supergraph;

  // community sizes in base nodes
  const Assignment projection = project_to_base(h, t);
  std::vector<std::uint64_t> size(projection.k, 0);
  for (node_id lab : projection.labels) ++size[lab];

  // cut multiplicities come from the graph this level clustered
  const CommunityEdgeStats stats =
      community_edge_stats(h.graph_at(t), level.assignment);

  std::ostringstream buf;
  buf << "graph level_" << t << " {\n";
  for (node_id c = 0; c < super.num_nodes(); ++c) {
    buf << "  c" << c << " [size=" << size[c] << ", degree=" << super.degree(c)
        << "];\n";
  }
  for (const PairCut& cut : stats.pair_cuts) {
    buf << "  c" << cut.a << " -- c" << cut.b << " [weight=" << cut.count
        << "];\n";
  }
  buf << "}\n";

  const std::string text = buf.str();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("failed to write DOT document");
  return text.size();
}

}  // namespace hlp
