#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpindex/graph.hpp"

namespace gpindex {

// All-pairs hop distances of a connected graph, row-major n*n.
class DistanceMatrix {
 public:
  int order() const { return n_; }
  int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(int u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  friend DistanceMatrix bfs_distances(const Graph& g);
  int n_ = 0;
  std::vector<int> d_;
};

// Throws NotConnected when some pair is unreachable.
DistanceMatrix bfs_distances(const Graph& g);

// Hop distances from one source; throws NotConnected if some vertex is missed.
std::vector<int> bfs_from(const Graph& g, int source);

std::int64_t wiener_index(const Graph& g);

// W(S): sum of d(u,v) over unordered pairs inside S.
std::int64_t set_wiener(const Graph& g, std::span<const int> vertices);
std::int64_t set_wiener(const DistanceMatrix& d, std::span<const int> vertices);

// w_S(u): sum of d(u,v) over v in S.
std::int64_t distance_sum(const Graph& g, int u, std::span<const int> vertices);
std::int64_t distance_sum(const DistanceMatrix& d, int u, std::span<const int> vertices);

}  // namespace gpindex
