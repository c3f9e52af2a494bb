#include "hlp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hlp/errors.hpp"

namespace hlp {

Graph::Graph(std::size_t n,
             std::span<const std::pair<node_id, node_id>> pairs)
    : n_(n) {
  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw std::invalid_argument("endpoint out of range");
    if (u == v) continue;
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
  adjacency_.resize(offsets_[n]);

  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : pairs) {
    if (u == v) continue;
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }

  // Sort each list, drop duplicates, compact in place. The write cursor
  // never passes the read range, so the left-shifting copy is safe.
  std::vector<std::uint64_t> compacted(n + 1, 0);
  std::uint64_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    const auto unique_end = std::unique(first, last);
    compacted[v] = write;
    write = static_cast<std::uint64_t>(
        std::copy(first, unique_end,
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(write)) -
        adjacency_.begin());
  }
  compacted[n] = write;
  adjacency_.resize(write);
  offsets_ = std::move(compacted);
  m_ = write / 2;
}

bool Graph::has_edge(node_id u, node_id v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<node_id, node_id>> Graph::edges() const {
  std::vector<std::pair<node_id, node_id>> out;
  out.reserve(m_);
  for (node_id v = 0; v < n_; ++v) {
    for (node_id u : neighbors(v)) {
      if (u > v) out.emplace_back(v, u);
    }
  }
  return out;
}

namespace {

constexpr node_id kMaxNodeId = std::numeric_limits<node_id>::max() - 1;

bool parse_id(std::string_view token, node_id& out, std::string& why) {
  std::uint64_t value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    why = "expected integer token, got '" + std::string(token) + "'";
    return false;
  }
  if (value > kMaxNodeId) {
    why = "node id " + std::string(token) + " too large";
    return false;
  }
  out = static_cast<node_id>(value);
  return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == '\f'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '\f')
      ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, GraphFormat format,
                         std::optional<int> base_override) {
  EdgeList out;
  std::string line;
  std::string why;
  std::size_t line_no = 0;
  bool need_dimensions = format == GraphFormat::mtx;
  bool saw_zero = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '%' || tokens[0][0] == '#') continue;

    if (need_dimensions) {
      node_id rows = 0, cols = 0, nnz = 0;
      if (tokens.size() != 3 || !parse_id(tokens[0], rows, why) ||
          !parse_id(tokens[1], cols, why) || !parse_id(tokens[2], nnz, why)) {
        throw ParseError("expected dimensions 'rows cols nnz'", line_no);
      }
      out.declared_nodes = std::max(rows, cols);
      need_dimensions = false;
      continue;
    }

    node_id u = 0, v = 0;
    if (tokens.size() < 2 || !parse_id(tokens[0], u, why) ||
        !parse_id(tokens[1], v, why)) {
      throw ParseError(why.empty() ? "expected an integer pair" : why,
                       line_no);
    }
    if (format == GraphFormat::mtx && (u == 0 || v == 0)) {
      throw ParseError("node id 0 in 1-based input", line_no);
    }
    saw_zero = saw_zero || u == 0 || v == 0;
    out.pairs.emplace_back(u, v);
  }

  if (out.pairs.empty()) throw EmptyInputError("input contains no edges");

  if (format == GraphFormat::mtx) {
    out.index_base = 1;
  } else {
    out.index_base = (base_override && *base_override == 1 && !saw_zero) ? 1 : 0;
  }
  return out;
}

Graph build_graph(const EdgeList& edges) {
  const node_id base = static_cast<node_id>(edges.index_base);
  std::vector<std::pair<node_id, node_id>> shifted;
  shifted.reserve(edges.pairs.size());
  node_id max_id = 0;
  for (const auto& [u, v] : edges.pairs) {
    if (u < base || v < base)
      throw std::invalid_argument("node id below index base");
    const node_id su = u - base;
    const node_id sv = v - base;
    max_id = std::max({max_id, su, sv});
    shifted.emplace_back(su, sv);
  }
  std::size_t n = edges.declared_nodes.value_or(0);
  if (!shifted.empty()) n = std::max(n, static_cast<std::size_t>(max_id) + 1);
  return Graph(n, shifted);
}

CoreDecomposition core_decomposition(const Graph& g) {
  const std::size_t n = g.num_nodes();
  CoreDecomposition out;
  out.core_number.assign(n, 0);
  out.peel_order.reserve(n);
  if (n == 0) return out;

  std::size_t max_deg = 0;
  std::vector<std::uint32_t> deg(n);
  for (node_id v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max(max_deg, static_cast<std::size_t>(deg[v]));
  }

  // Bucket sort by degree: vert holds nodes grouped by current degree,
  // bin[d] is the start of degree-d's group, pos[v] the position of v.
  std::vector<std::uint64_t> bin(max_deg + 2, 0);
  for (node_id v = 0; v < n; ++v) ++bin[deg[v]];
  std::uint64_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const std::uint64_t width = bin[d];
    bin[d] = start;
    start += width;
  }
  std::vector<std::uint64_t> pos(n);
  std::vector<node_id> vert(n);
  for (node_id v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg + 1; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const node_id v = vert[i];
    out.core_number[v] = deg[v];
    out.peel_order.push_back(v);
    for (node_id u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      // swap u with the first node of its degree group, then shrink it
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
  return out;
}

}  // namespace hlp
