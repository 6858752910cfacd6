#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddg/graph.hpp"

namespace ddg {

/// Largest possible order of a graph with maximum degree `delta` and
/// diameter `d`: 1 + delta * sum_{i<d} (delta-1)^i. For delta = 2 this is
/// the odd cycle bound 2d+1. Throws ArgumentError for delta < 2 or d < 1,
/// and on 64-bit overflow.
std::uint64_t moore_bound(std::uint32_t delta, std::uint32_t d);

/// Cubic Hamiltonian graph from LCF notation [shifts]^repeats. Vertices are
/// numbered along the Hamiltonian cycle.
CompactGraph lcf_graph(std::span<const int> shifts, std::size_t repeats);

/// LCF code of the arc-transitive cubic graph on 144 vertices with girth 8
/// and diameter 7 (a Z3xZ3 cover of the Moebius-Kantor graph).
inline constexpr int kFosterShifts[] = {-23, 23, 33,  55, -19, -33, 31, -13,
                                        33,  19, -55, -33, 31, -31, 33, 55,
                                        -19, -33, 13, -31, 33, 19,  -55, -33};
inline constexpr std::size_t kFosterRepeats = 6;

CompactGraph foster_graph();

/// Perfect matching on the canonical edge ids of a host graph.
struct PairingMap {
  std::size_t edge_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::uint32_t> partner; // partner[e] = edge paired with e
  // Pairs whose two edges share an endpoint; each one closes a triangle in
  // the edge-pairing graph.
  std::size_t adjacent_pairs = 0;
};

/// Checks that `pairs` is a perfect matching of the host's edge ids. Throws
/// PairingError naming the offending edge id.
PairingMap validate_pairing(const CompactGraph &host,
                            std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

/// Vertex set V(host) followed by E(host); vertex-edge adjacency is
/// incidence, edge-edge adjacency is the pairing, no vertex-vertex edges.
CompactGraph edge_pairing_graph(const CompactGraph &host, const PairingMap &pairing);

// Pairing file: first line m, then m/2 lines "e1 e2".
std::vector<std::pair<std::uint32_t, std::uint32_t>> read_pairing(std::istream &in,
                                                                  std::size_t *declared_m = nullptr);
std::vector<std::pair<std::uint32_t, std::uint32_t>> read_pairing_file(const std::string &path,
                                                                       std::size_t *declared_m = nullptr);
void write_pairing(std::ostream &out, const PairingMap &pairing);

} // namespace ddg
