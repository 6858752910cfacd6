#include "ddg/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ddg/error.hpp"

namespace ddg {

std::uint64_t moore_bound(std::uint32_t delta, std::uint32_t d) {
  if (delta < 2)
    throw ArgumentError("Moore bound needs maximum degree >= 2");
  if (d < 1)
    throw ArgumentError("Moore bound needs diameter >= 1");
  if (delta == 2)
    return 2ull * d + 1;
  // 1 + delta * (1 + (delta-1) + ... + (delta-1)^(d-1)), built layer by layer.
  std::uint64_t total = 1;
  std::uint64_t layer = delta;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (__builtin_add_overflow(total, layer, &total))
      throw ArgumentError("Moore bound overflows 64 bits");
    if (i + 1 < d && __builtin_mul_overflow(layer, std::uint64_t{delta - 1}, &layer))
      throw ArgumentError("Moore bound overflows 64 bits");
  }
  return total;
}

CompactGraph lcf_graph(std::span<const int> shifts, std::size_t repeats) {
  if (shifts.empty() || repeats == 0)
    throw ConstructionError("LCF code needs at least one shift and one repeat");
  const std::size_t n = shifts.size() * repeats;
  if (n < 4 || n % 2 != 0)
    throw ConstructionError("LCF graph order must be even and at least 4");
  const auto sn = static_cast<long long>(n);
  auto target = [&](std::size_t i) {
    const long long t = (static_cast<long long>(i) + shifts[i % shifts.size()]) % sn;
    return static_cast<std::size_t>(t < 0 ? t + sn : t);
  };
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(3 * n / 2);
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = target(i);
    if (j == i || j == (i + 1) % n || (j + 1) % n == i)
      throw ConstructionError("chord from " + std::to_string(i) + " to " +
                              std::to_string(j) + " collides with the cycle");
    if (target(j) != i)
      throw ConstructionError("chord from " + std::to_string(i) + " to " +
                              std::to_string(j) + " is not reciprocated (" +
                              std::to_string(j) + " points to " +
                              std::to_string(target(j)) + ")");
    if (i < j)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return CompactGraph::from_edges(n, edges);
}

CompactGraph foster_graph() {
  return lcf_graph(kFosterShifts, kFosterRepeats);
}

PairingMap validate_pairing(const CompactGraph &host,
                            std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
  const std::size_t m = host.size();
  if (m % 2 != 0)
    throw PairingError("host has an odd number of edges (" + std::to_string(m) +
                       "); no perfect pairing exists");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  PairingMap pm;
  pm.edge_count = m;
  pm.partner.assign(m, kUnset);
  for (auto [a, b] : pairs) {
    for (std::uint32_t e : {a, b})
      if (e >= m)
        throw PairingError("edge id " + std::to_string(e) + " out of range (m = " +
                           std::to_string(m) + ")");
    if (a == b)
      throw PairingError("edge " + std::to_string(a) + " paired with itself");
    for (std::uint32_t e : {a, b})
      if (pm.partner[e] != kUnset)
        throw PairingError("edge " + std::to_string(e) + " appears more than once");
    pm.partner[a] = b;
    pm.partner[b] = a;
    pm.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (std::size_t e = 0; e < m; ++e)
    if (pm.partner[e] == kUnset)
      throw PairingError("edge " + std::to_string(e) + " is not paired");

  const auto edges = edge_list(host);
  for (auto [a, b] : pm.pairs) {
    auto [u1, v1] = edges[a];
    auto [u2, v2] = edges[b];
    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
      ++pm.adjacent_pairs;
  }
  return pm;
}

CompactGraph edge_pairing_graph(const CompactGraph &host, const PairingMap &pairing) {
  const std::size_t n = host.order();
  const std::size_t m = host.size();
  if (pairing.edge_count != m || pairing.partner.size() != m)
    throw PairingError("pairing does not belong to this host");
  const auto edges = edge_list(host);
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(2 * m + m / 2);
  for (std::size_t e = 0; e < m; ++e) {
    const auto ev = static_cast<Vertex>(n + e);
    out.emplace_back(edges[e].first, ev);
    out.emplace_back(edges[e].second, ev);
    if (e < pairing.partner[e])
      out.emplace_back(ev, static_cast<Vertex>(n + pairing.partner[e]));
  }
  return CompactGraph::from_edges(n + m, out);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_pairing(std::istream &in,
                                                                  std::size_t *declared_m) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line))
    throw ParseError("empty pairing file", 1);
  std::istringstream head(line);
  std::size_t m = 0;
  std::string extra;
  if (!(head >> m) || (head >> extra))
    throw ParseError("first line must hold the edge count", 1);
  if (declared_m)
    *declared_m = m;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    std::istringstream ls(line);
    long long a = -1, b = -1;
    if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0)
      throw ParseError("expected two edge ids, got '" + line + "'", lineno);
    pairs.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  if (pairs.size() * 2 != m)
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(pairs.size()) + " pairs",
                     lineno);
  return pairs;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> read_pairing_file(const std::string &path,
                                                                       std::size_t *declared_m) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  return read_pairing(in, declared_m);
}

void write_pairing(std::ostream &out, const PairingMap &pairing) {
  out << pairing.edge_count << '\n';
  for (auto [a, b] : pairing.pairs)
    out << a << ' ' << b << '\n';
}

} // namespace ddg
