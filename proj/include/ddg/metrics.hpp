#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ddg/graph.hpp"

namespace ddg {

using Distance = std::uint32_t;
inline constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

/// Exact non-negative rational, always stored in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Fixed-point decimal with `places` digits, round half to even.
  std::string to_decimal(int places = 6) const;
  std::string to_string() const;

  friend bool operator==(const Rational &, const Rational &) = default;
};

struct BfsResult {
  Distance eccentricity = 0;
  std::vector<Distance> distances; // kUnreached where not reachable
  std::size_t reached = 0;
};

BfsResult bfs_eccentricity(const CompactGraph &g, Vertex source);

/// Number of worker threads used by all-source metrics. 0 = hardware default.
struct MetricOptions {
  unsigned jobs = 0;
};

/// Diameter of a connected graph. With `assume_vertex_transitive` only the
/// eccentricity of vertex 0 is computed. Throws DisconnectedError.
Distance diameter(const CompactGraph &g, bool assume_vertex_transitive = false,
                  MetricOptions opts = {});

/// Shortest cycle length, or nullopt for a forest.
std::optional<Distance> girth(const CompactGraph &g, MetricOptions opts = {});

/// Mean distance over ordered pairs of distinct vertices. Throws
/// DisconnectedError; ArgumentError when order < 2.
Rational average_distance(const CompactGraph &g, MetricOptions opts = {});

struct GraphStats {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool is_regular = false;
  bool connected = false;
  bool bipartite = false;
  std::optional<Distance> diameter;           // nullopt when disconnected
  std::optional<Distance> girth;              // nullopt for forests
  std::optional<Rational> average_distance;   // nullopt when disconnected or order < 2
  std::optional<Vertex> unreached_witness;    // set when disconnected
};

/// All of the above in one all-source sweep.
GraphStats stats(const CompactGraph &g, MetricOptions opts = {});

bool is_bipartite(const CompactGraph &g);

} // namespace ddg
