#include <doctest.h>

#include <set>

#include "hlp/baselines.hpp"
#include "hlp/errors.hpp"

#include "gen.hpp"
#include "oracles.hpp"

using namespace hlp;

namespace {

std::set<node_id> members(const Assignment& a, node_id community) {
  std::set<node_id> out;
  for (node_id v = 0; v < a.labels.size(); ++v) {
    if (a.labels[v] == community) out.insert(v);
  }
  return out;
}

void check_total_and_compact(const Assignment& a) {
  std::vector<bool> used(a.k, false);
  for (node_id lab : a.labels) {
    REQUIRE(lab < a.k);
    used[lab] = true;
  }
  for (bool u : used) CHECK(u);
}

}  // namespace

TEST_CASE("kcore_split separates the maximum core") {
  const Graph g = testgen::from_pairs(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}});
  const Assignment a = kcore_split(g);
  CHECK(a.k == 2);
  CHECK(members(a, 0) == std::set<node_id>{0, 1, 2});
  CHECK(members(a, 1) == std::set<node_id>{3});
}

TEST_CASE("kcore_split collapses uniform-core graphs to one community") {
  SUBCASE("K4") {
    const Graph k4 = testgen::from_pairs(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const Assignment a = kcore_split(k4);
    CHECK(a.k == 1);
    CHECK(a.labels == std::vector<node_id>(4, 0));
  }
  SUBCASE("two disjoint triangles") {
    const Graph g = testgen::from_pairs(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    const Assignment a = kcore_split(g);
    CHECK(a.k == 1);
    CHECK(members(a, 0).size() == 6);
  }
}

TEST_CASE("kcore_split needs at least one edge") {
  const Graph g(3, std::vector<std::pair<node_id, node_id>>{});
  CHECK_THROWS_AS(kcore_split(g), DegenerateInputError);
}

TEST_CASE("kcore_split always yields one or two communities") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(splitmix64(seed ^ 0x31));
    const std::size_t n = 2 + rng.bounded(120);
    const Graph g = testgen::gnm(n, 1 + rng.bounded(3 * n), seed);
    if (g.num_edges() == 0) continue;
    const Assignment a = kcore_split(g);
    CHECK((a.k == 1 || a.k == 2));
    check_total_and_compact(a);
  }
}

TEST_CASE("densest_subgraph_peel extracts K4 before the stray edge") {
  const Graph g = testgen::from_pairs(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}});
  const Assignment a = densest_subgraph_peel(g);
  CHECK(a.k == 2);
  CHECK(members(a, 0) == std::set<node_id>{0, 1, 2, 3});
  CHECK(members(a, 1) == std::set<node_id>{4, 5});
}

TEST_CASE("densest_subgraph_peel on a single edge") {
  const Graph g = testgen::from_pairs(2, {{0, 1}});
  const Assignment a = densest_subgraph_peel(g);
  CHECK(a.k == 1);
  CHECK(a.labels == std::vector<node_id>{0, 0});
}

TEST_CASE("densest_subgraph_peel folds edgeless leftovers into one residue") {
  SUBCASE("entirely edgeless") {
    const Graph g(3, std::vector<std::pair<node_id, node_id>>{});
    const Assignment a = densest_subgraph_peel(g);
    CHECK(a.k == 1);
    CHECK(a.labels == std::vector<node_id>(3, 0));
  }
  SUBCASE("dense block plus isolated nodes") {
    const Graph g = testgen::from_pairs(5, {{0, 1}, {0, 2}, {1, 2}});
    const Assignment a = densest_subgraph_peel(g);
    CHECK(a.k == 2);
    CHECK(members(a, 0) == std::set<node_id>{0, 1, 2});
    CHECK(members(a, 1) == std::set<node_id>{3, 4});
  }
}

TEST_CASE("first extracted subgraph is a half-approximation of the densest") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(splitmix64(seed ^ 0xd5));
    const std::size_t n = 4 + rng.bounded(9);  // up to 12 nodes
    const std::size_t max_m = n * (n - 1) / 2;
    const Graph g = testgen::gnm(n, 1 + rng.bounded(max_m), seed);
    if (g.num_edges() == 0) continue;

    const Assignment a = densest_subgraph_peel(g);
    const auto first = members(a, 0);
    std::uint64_t internal = 0;
    for (const auto& [u, v] : g.edges()) {
      internal += first.count(u) && first.count(v);
    }
    const auto [best_edges, best_nodes] = oracle::densest_subset(g);
    // internal/|first| >= (best_edges/best_nodes) / 2, cross-multiplied
    CHECK(2 * internal * best_nodes >= best_edges * first.size());
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("baselines are deterministic and total") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t n = 10 + seed * 11;
    const Graph g = testgen::gnm(n, 3 * n, seed);
    const Assignment ds1 = densest_subgraph_peel(g);
    const Assignment ds2 = densest_subgraph_peel(g);
    CHECK(ds1.labels == ds2.labels);
    check_total_and_compact(ds1);
    check_total_and_compact(kcore_split(g));
  }
}
