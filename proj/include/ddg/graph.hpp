#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ddg {

using Vertex = std::uint32_t;

/// Immutable undirected simple graph in offset-array (CSR) form.
///
/// Neighbour lists are strictly ascending, free of self-loops and symmetric.
/// Every constructor validates these invariants, so a CompactGraph that
/// exists is always well formed.
class CompactGraph {
public:
  CompactGraph() : offsets_{0} {}

  /// Builds from per-vertex neighbour lists. Lists are validated as given
  /// (must already be ascending); throws ArgumentError on any violation.
  static CompactGraph from_adjacency(const std::vector<std::vector<Vertex>> &adj);

  /// Builds from an undirected edge list; duplicates and self-loops rejected.
  static CompactGraph from_edges(std::size_t n,
                                 std::span<const std::pair<Vertex, Vertex>> edges);

  /// Takes ownership of a raw CSR layout and validates it.
  static CompactGraph from_csr(std::vector<std::size_t> offsets,
                               std::vector<Vertex> neighbors);

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t size() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular() const { return min_degree() == max_degree(); }

  friend bool operator==(const CompactGraph &, const CompactGraph &) = default;

private:
  CompactGraph(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}
  void validate() const;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Canonical edge enumeration: pairs (u, v) with u < v in lexicographic
/// order. The position in this list is the edge id.
std::vector<std::pair<Vertex, Vertex>> edge_list(const CompactGraph &g);

/// Edge id of {u, v} in the canonical enumeration, or -1 if absent.
std::ptrdiff_t edge_id(const CompactGraph &g, Vertex u, Vertex v);

// Adjacency-list text format: first line n, then one line per vertex with
// its ascending neighbours separated by single spaces.
CompactGraph read_adjacency(std::istream &in);
CompactGraph read_adjacency_file(const std::string &path);
void write_adjacency(std::ostream &out, const CompactGraph &g);
void write_adjacency_file(const std::string &path, const CompactGraph &g);

} // namespace ddg
