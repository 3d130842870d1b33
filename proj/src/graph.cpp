#include "gpindex/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <sstream>

#include "gpindex/errors.hpp"

namespace gpindex {

namespace {

void check_order(int n) {
  if (n <= 0) throw InvalidInput("graph must have at least one vertex");
  if (n > kMaxVertices) {
    throw CapExceeded("graph has " + std::to_string(n) +
                      " vertices; the cap is " + std::to_string(kMaxVertices));
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  adj_.assign(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("vertex id out of range in edge (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

Graph Graph::from_rows(std::vector<Bits> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  for (int u = 0; u < n; ++u) {
    if ((rows[u] >> u) & 1U) throw InvalidInput("self-loop in adjacency rows");
    if (n < 64 && (rows[u] >> n) != 0) {
      throw InvalidInput("adjacency row references a missing vertex");
    }
    for (Bits r = rows[u]; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (!((rows[v] >> u) & 1U)) throw InvalidInput("adjacency not symmetric");
    }
  }
  return Graph(std::move(rows));
}

int Graph::size() const {
  int twice = 0;
  for (const Bits r : adj_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

Bits Graph::all_vertices() const {
  const int n = order();
  return n == 64 ? ~Bits{0} : bit(n) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  const int n = order();
  for (int u = 0; u < n; ++u) {
    for (Bits r = adj_[u]; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  std::vector<Bits> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (Bits r = adj_[u]; r != 0; r &= r - 1) {
      rows[perm[u]] |= bit(perm[std::countr_zero(r)]);
    }
  }
  return Graph(std::move(rows));
}

Graph Graph::with_new_vertex(Bits nbrs) const {
  const int n = order();
  check_order(n + 1);
  std::vector<Bits> rows = adj_;
  rows.push_back(nbrs);
  for (Bits r = nbrs; r != 0; r &= r - 1) rows[std::countr_zero(r)] |= bit(n);
  return Graph(std::move(rows));
}

bool is_connected(const Graph& g) {
  Bits seen = bit(0);
  Bits frontier = bit(0);
  while (frontier != 0) {
    Bits next = 0;
    for (Bits f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == g.all_vertices();
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (!is_connected(g)) throw NotConnected();
  const int n = g.order();
  // Sides grow one BFS layer at a time: layer k goes to side k mod 2.
  Bits side_a = bit(0);
  Bits side_b = 0;
  Bits seen = bit(0);
  Bits frontier = bit(0);
  bool on_a = true;
  while (frontier != 0) {
    Bits next = 0;
    for (Bits f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= frontier;
    on_a = !on_a;
    (on_a ? side_a : side_b) |= frontier;
  }
  for (int v = 0; v < n; ++v) {
    const Bits own = (side_a >> v) & 1U ? side_a : side_b;
    if (g.neighbors(v) & own) return std::nullopt;
  }
  Bipartition result;
  result.side.resize(n);
  for (int v = 0; v < n; ++v) {
    result.side[v] = ((side_a >> v) & 1U) ? Side::A : Side::B;
  }
  return result;
}

Graph parse_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m)) throw InvalidInput("edge list: missing \"n m\" header");
  if (m < 0) throw InvalidInput("edge list: negative edge count");
  if (n > kMaxVertices) {
    throw CapExceeded("graph has " + std::to_string(n) +
                      " vertices; the cap is " + std::to_string(kMaxVertices));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw InvalidInput("edge list: expected " + std::to_string(m) +
                         " edges, got " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("vertex id out of range in edge (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw InvalidInput("edge list: trailing data \"" + rest + "\"");
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace gpindex
