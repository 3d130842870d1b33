#pragma once

// Brute-force reference computations. Nothing here calls into the search,
// distance or GP code of the library; only the Graph container is shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gpindex/graph.hpp"
#include "gpindex/rational.hpp"

namespace oracle {

using gpindex::Graph;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline bool preserves_edges(const Graph& g, const std::vector<int>& p) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    }
  }
  return true;
}

// Every automorphism, by trying all n! permutations.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (preserves_edges(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Orbit cells sorted by minimum vertex.
inline std::vector<std::vector<int>> orbits(const Graph& g) {
  const auto group = automorphisms(g);
  std::vector<std::set<int>> orbit(g.order());
  for (const auto& p : group) {
    for (int v = 0; v < g.order(); ++v) orbit[v].insert(p[v]);
  }
  std::set<std::vector<int>> cells;
  for (const auto& o : orbit) cells.insert(std::vector<int>(o.begin(), o.end()));
  return {cells.begin(), cells.end()};
}

// GP straight from the double-sum definition.
inline gpindex::Rational gp(const Graph& g) {
  const auto d = floyd_warshall(g);
  const auto group = automorphisms(g);
  std::int64_t sum = 0;
  for (const auto& p : group) {
    for (int u = 0; u < g.order(); ++u) sum += d[u][p[u]];
  }
  return gpindex::Rational(g.order()) * gpindex::Rational(sum, 2 * static_cast<std::int64_t>(group.size()));
}

inline bool has_odd_cycle(const Graph& g) {
  // An odd closed walk exists iff some vertex reaches itself in an odd number
  // of steps; track parity-reachability by brute iteration.
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    std::vector<std::vector<bool>> reach(2, std::vector<bool>(n, false));
    reach[0][s] = true;
    for (int step = 0; step < 2 * n; ++step) {
      std::vector<std::vector<bool>> next = reach;
      for (int par = 0; par < 2; ++par) {
        for (int u = 0; u < n; ++u) {
          if (!reach[par][u]) continue;
          for (int v = 0; v < n; ++v) {
            if (g.adjacent(u, v)) next[1 - par][v] = true;
          }
        }
      }
      reach = std::move(next);
    }
    if (reach[1][s]) return true;
  }
  return false;
}

inline bool connected(const Graph& g) {
  const auto d = floyd_warshall(g);
  for (int v = 0; v < g.order(); ++v) {
    if (d[0][v] > g.order()) return false;
  }
  return true;
}

// Upper-triangle adjacency code of g under permutation p.
inline std::uint64_t code(const Graph& g, const std::vector<int>& p) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[p[v]] = v;
  std::uint64_t c = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) c = (c << 1) | (g.adjacent(inv[i], inv[j]) ? 1U : 0U);
  }
  return c;
}

// Minimum code over all relabelings: a slow but obviously correct canonical form.
inline std::uint64_t min_code(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code(g, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<gpindex::Edge> edges;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_graph(int n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<gpindex::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline Graph random_connected_graph(int n, double density, std::mt19937& rng) {
  for (;;) {
    Graph g = random_graph(n, density, rng);
    if (connected(g)) return g;
  }
}

}  // namespace oracle
