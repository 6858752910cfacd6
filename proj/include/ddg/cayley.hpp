#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ddg/error.hpp"
#include "ddg/graph.hpp"
#include "ddg/groups.hpp"
#include "ddg/metrics.hpp"

namespace ddg {

/// Inverse-closed generating set without the identity. Its size is the
/// degree of the Cayley graph.
struct ConnectionSet {
  std::vector<Element> elements;   // ascending, no duplicates
  std::vector<Element> involutions; // members equal to their own inverse

  std::size_t degree() const { return elements.size(); }
  bool contains(Element e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
  }
};

/// S union S^-1. Throws ArgumentError on an empty list, the identity, or an
/// index outside the group.
template <FiniteGroup G>
ConnectionSet close_connection_set(const G &group, std::span<const Element> generators) {
  if (generators.empty())
    throw ArgumentError("empty generator list");
  ConnectionSet cs;
  for (Element s : generators) {
    if (s >= group.order())
      throw ArgumentError("generator index " + std::to_string(s) + " outside group");
    if (s == group.identity())
      throw ArgumentError("identity is not allowed in a connection set");
    cs.elements.push_back(s);
    cs.elements.push_back(group.inverse(s));
  }
  std::sort(cs.elements.begin(), cs.elements.end());
  cs.elements.erase(std::unique(cs.elements.begin(), cs.elements.end()), cs.elements.end());
  for (Element s : cs.elements)
    if (group.inverse(s) == s)
      cs.involutions.push_back(s);
  return cs;
}

inline constexpr std::uint64_t kExplicitBuildCap = 2'000'000;

/// Materializes Cay(G, S) with right multiplication: i ~ i*s.
template <FiniteGroup G>
CompactGraph build_cayley_explicit(const G &group, const ConnectionSet &conn,
                                   std::uint64_t cap = kExplicitBuildCap) {
  const std::uint64_t n = group.order();
  if (n > cap)
    throw SizeError("group order " + std::to_string(n) + " exceeds explicit-build cap " +
                    std::to_string(cap) + "; use the implicit BFS path");
  const std::size_t k = conn.degree();
  std::vector<std::size_t> offsets(n + 1);
  std::vector<Vertex> nbrs(n * k);
  for (std::uint64_t i = 0; i < n; ++i) {
    offsets[i] = i * k;
    auto *row = nbrs.data() + i * k;
    for (std::size_t j = 0; j < k; ++j)
      row[j] = group.multiply(static_cast<Element>(i), conn.elements[j]);
    std::sort(row, row + k);
  }
  offsets[n] = n * k;
  return CompactGraph::from_csr(std::move(offsets), std::move(nbrs));
}

struct CayleyBfsResult {
  Distance diameter = 0;                // eccentricity of the identity
  std::uint64_t reached = 0;            // vertices visited
  std::vector<std::uint64_t> histogram; // histogram[d] = #elements at distance d

  std::uint64_t distance_sum() const {
    std::uint64_t sum = 0;
    for (std::size_t d = 0; d < histogram.size(); ++d)
      sum += d * histogram[d];
    return sum;
  }
};

/// BFS from the identity generating neighbours on the fly. Memory is one
/// bit per element plus two frontier queues. Never throws on a
/// non-generating set; check `reached`.
template <FiniteGroup G>
CayleyBfsResult cayley_bfs(const G &group, const ConnectionSet &conn) {
  const std::uint64_t n = group.order();
  std::vector<std::uint64_t> visited((n + 63) / 64, 0);
  auto test_and_set = [&](Element e) {
    std::uint64_t &word = visited[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    const bool was = word & bit;
    word |= bit;
    return was;
  };
  CayleyBfsResult r;
  std::vector<Element> frontier{group.identity()}, next;
  test_and_set(group.identity());
  r.histogram.push_back(1);
  r.reached = 1;
  while (true) {
    next.clear();
    for (Element g : frontier)
      for (Element s : conn.elements) {
        const Element h = group.multiply(g, s);
        if (!test_and_set(h))
          next.push_back(h);
      }
    if (next.empty())
      break;
    r.histogram.push_back(next.size());
    r.reached += next.size();
    frontier.swap(next);
  }
  r.diameter = static_cast<Distance>(r.histogram.size() - 1);
  return r;
}

/// As cayley_bfs, but throws GenerationError when S does not generate G.
/// The identity's eccentricity is the diameter by vertex-transitivity.
template <FiniteGroup G>
CayleyBfsResult cayley_diameter_implicit(const G &group, const ConnectionSet &conn) {
  auto r = cayley_bfs(group, conn);
  if (r.reached != group.order())
    throw GenerationError(r.reached, group.order());
  return r;
}

// Textual Cayley jobs, as accepted on the command line:
//   sd M A N gen x,y gen x,y ...
//   2c m gen a,b,c gen a,b,c ...
// The leading keyword is optional when the caller already knows the kind.

struct SdJob {
  SemidirectSpec spec;
  std::vector<SdElement> generators;
};

struct TwoCoordJob {
  std::uint32_t m = 1;
  std::vector<TwoCoordElement> generators;
};

SdJob parse_sd_job(std::span<const std::string> tokens);
TwoCoordJob parse_two_coord_job(std::span<const std::string> tokens);

/// Encodes a validated job's generators; throws ArgumentError for
/// coordinates outside the group.
std::vector<Element> encode_generators(const SemidirectGroup &group,
                                       std::span<const SdElement> gens);
std::vector<Element> encode_generators(const TwoCoordGroup &group,
                                       std::span<const TwoCoordElement> gens);

} // namespace ddg
