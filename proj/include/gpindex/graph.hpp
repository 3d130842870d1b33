#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpindex {

// Hard cap on vertex count; adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

using Bits = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr Bits bit(int v) { return Bits{1} << v; }

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  // Throws InvalidInput on n == 0, self-loops or out-of-range ids and
  // CapExceeded when n > kMaxVertices. Duplicate edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Builds from adjacency rows without re-validating symmetry beyond a check.
  static Graph from_rows(std::vector<Bits> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;  // edge count
  Bits neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  Bits all_vertices() const;
  const std::vector<Bits>& rows() const { return adj_; }

  // Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  // Graph whose vertex perm[v] corresponds to vertex v of this graph.
  Graph relabeled(std::span<const int> perm) const;

  // New graph with one extra vertex adjacent to the vertices in `nbrs`.
  Graph with_new_vertex(Bits nbrs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<Bits> rows) : adj_(std::move(rows)) {}
  std::vector<Bits> adj_;
};

inline Graph graph_from_edges(int n, std::span<const Edge> edges) {
  return Graph(n, edges);
}

bool is_connected(const Graph& g);

enum class Side : std::uint8_t { A, B };

struct Bipartition {
  std::vector<Side> side;
};

// Two-coloring with vertex 0 on side A, or nullopt when an odd cycle exists.
// Throws NotConnected on disconnected input.
std::optional<Bipartition> bipartition(const Graph& g);

// Edge-list text: header "n m", then m lines "u v".
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string emit_edge_list(const Graph& g);

}  // namespace gpindex
