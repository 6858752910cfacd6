#include "ddg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "ddg/error.hpp"

namespace ddg {

CompactGraph CompactGraph::from_adjacency(
    const std::vector<std::vector<Vertex>> &adj) {
  std::vector<std::size_t> offsets(adj.size() + 1, 0);
  for (std::size_t v = 0; v < adj.size(); ++v)
    offsets[v + 1] = offsets[v] + adj[v].size();
  std::vector<Vertex> nbrs;
  nbrs.reserve(offsets.back());
  for (const auto &list : adj)
    nbrs.insert(nbrs.end(), list.begin(), list.end());
  return from_csr(std::move(offsets), std::move(nbrs));
}

CompactGraph CompactGraph::from_edges(
    std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::size_t> offsets(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw ArgumentError("edge endpoint out of range");
    if (u == v)
      throw ArgumentError("self-loop at vertex " + std::to_string(u));
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v)
    offsets[v + 1] += offsets[v];
  std::vector<Vertex> nbrs(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (auto [u, v] : edges) {
    nbrs[fill[u]++] = v;
    nbrs[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(nbrs.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              nbrs.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  return from_csr(std::move(offsets), std::move(nbrs));
}

CompactGraph CompactGraph::from_csr(std::vector<std::size_t> offsets,
                                    std::vector<Vertex> neighbors) {
  if (offsets.empty() || offsets.front() != 0 ||
      offsets.back() != neighbors.size())
    throw ArgumentError("inconsistent CSR offsets");
  if (offsets.size() - 1 > (std::size_t{1} << 31))
    throw ArgumentError("order exceeds 2^31");
  CompactGraph g(std::move(offsets), std::move(neighbors));
  g.validate();
  return g;
}

void CompactGraph::validate() const {
  const std::size_t n = order();
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v + 1] < offsets_[v])
      throw ArgumentError("decreasing CSR offsets");
    auto list = neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex w = list[i];
      if (w >= n)
        throw ArgumentError("vertex " + std::to_string(v) +
                            ": neighbour " + std::to_string(w) +
                            " out of range");
      if (w == v)
        throw ArgumentError("self-loop at vertex " + std::to_string(v));
      if (i > 0 && list[i - 1] >= w)
        throw ArgumentError("vertex " + std::to_string(v) +
                            ": neighbours not strictly ascending");
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : neighbors(static_cast<Vertex>(v)))
      if (!has_edge(w, static_cast<Vertex>(v)))
        throw ArgumentError("asymmetric adjacency: " + std::to_string(v) +
                            " -> " + std::to_string(w) + " has no reverse");
  if (neighbors_.size() % 2 != 0)
    throw ArgumentError("odd total degree");
}

bool CompactGraph::has_edge(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t CompactGraph::min_degree() const {
  std::size_t best = order() ? degree(0) : 0;
  for (std::size_t v = 1; v < order(); ++v)
    best = std::min(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t CompactGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v)
    best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const CompactGraph &g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(g.size());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v)
        edges.emplace_back(u, v);
  return edges;
}

std::ptrdiff_t edge_id(const CompactGraph &g, Vertex u, Vertex v) {
  if (u > v)
    std::swap(u, v);
  if (v >= g.order() || !g.has_edge(u, v))
    return -1;
  std::ptrdiff_t id = 0;
  for (Vertex w = 0; w < u; ++w)
    for (Vertex x : g.neighbors(w))
      id += x > w;
  for (Vertex x : g.neighbors(u)) {
    if (x == v)
      break;
    id += x > u;
  }
  return id;
}

namespace {

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r')
    s.remove_suffix(1);
  return s;
}

template <class Int>
std::vector<Int> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<Int> out;
  const char *p = line.data();
  const char *end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t'))
      ++p;
    if (p == end)
      break;
    Int value{};
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
      const char *tok_end = p;
      while (tok_end < end && *tok_end != ' ' && *tok_end != '\t')
        ++tok_end;
      throw ParseError("bad integer token '" + std::string(p, tok_end) + "'",
                       lineno);
    }
    out.push_back(value);
    p = next;
  }
  return out;
}

} // namespace

CompactGraph read_adjacency(std::istream &in) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("empty input, expected vertex count", 1);
  auto header = parse_ints<std::uint64_t>(trim_cr(line), 1);
  if (header.size() != 1)
    throw ParseError("first line must hold exactly the vertex count", 1);
  if (header[0] > (std::uint64_t{1} << 31))
    throw ParseError("vertex count exceeds 2^31", 1);
  const auto n = static_cast<std::size_t>(header[0]);

  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Vertex> nbrs;
  for (std::size_t v = 0; v < n; ++v) {
    if (!std::getline(in, line)) {
      // A trailing isolated vertex may lose its empty line at EOF.
      if (in.eof() && v + 1 == n) {
        offsets[v + 1] = nbrs.size();
        continue;
      }
      throw ParseError("missing adjacency line for vertex " +
                           std::to_string(v),
                       v + 2);
    }
    auto list = parse_ints<Vertex>(trim_cr(line), v + 2);
    nbrs.insert(nbrs.end(), list.begin(), list.end());
    offsets[v + 1] = nbrs.size();
  }
  while (std::getline(in, line))
    if (!trim_cr(line).empty())
      throw ParseError("trailing data after " + std::to_string(n) +
                           " adjacency lines",
                       n + 2);
  try {
    return CompactGraph::from_csr(std::move(offsets), std::move(nbrs));
  } catch (const ArgumentError &e) {
    throw ParseError(e.what(), 0);
  }
}

CompactGraph read_adjacency_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  return read_adjacency(in);
}

void write_adjacency(std::ostream &out, const CompactGraph &g) {
  std::string buf = std::to_string(g.order());
  buf += '\n';
  char tmp[16];
  for (Vertex v = 0; v < g.order(); ++v) {
    bool first = true;
    for (Vertex w : g.neighbors(v)) {
      if (!first)
        buf += ' ';
      first = false;
      auto [end, ec] = std::to_chars(tmp, tmp + sizeof tmp, w);
      buf.append(tmp, end);
    }
    buf += '\n';
    if (buf.size() > (1u << 20)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

void write_adjacency_file(const std::string &path, const CompactGraph &g) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write '" + path + "'");
  write_adjacency(out, g);
  if (!out)
    throw Error("write failed for '" + path + "'");
}

} // namespace ddg
