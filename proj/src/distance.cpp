#include "gpindex/distance.hpp"

#include <bit>

#include "gpindex/errors.hpp"

namespace gpindex {

namespace {

Bits to_mask(int n, std::span<const int> vertices) {
  Bits mask = 0;
  for (const int v : vertices) {
    if (v < 0 || v >= n) throw InvalidInput("vertex id " + std::to_string(v) + " out of range");
    mask |= bit(v);
  }
  return mask;
}

void fill_row(const Graph& g, int source, std::span<int> out) {
  Bits seen = bit(source);
  Bits frontier = seen;
  out[source] = 0;
  for (int depth = 1; frontier != 0; ++depth) {
    Bits next = 0;
    for (Bits f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= frontier;
    for (Bits f = frontier; f != 0; f &= f - 1) out[std::countr_zero(f)] = depth;
  }
  if (seen != g.all_vertices()) throw NotConnected();
}

}  // namespace

DistanceMatrix bfs_distances(const Graph& g) {
  DistanceMatrix d;
  d.n_ = g.order();
  d.d_.assign(static_cast<std::size_t>(d.n_) * d.n_, 0);
  for (int u = 0; u < d.n_; ++u) {
    fill_row(g, u, std::span<int>(d.d_).subspan(static_cast<std::size_t>(u) * d.n_, d.n_));
  }
  return d;
}

std::vector<int> bfs_from(const Graph& g, int source) {
  if (source < 0 || source >= g.order()) {
    throw InvalidInput("vertex id " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.order(), 0);
  fill_row(g, source, dist);
  return dist;
}

std::int64_t wiener_index(const Graph& g) {
  const DistanceMatrix d = bfs_distances(g);
  std::int64_t total = 0;
  for (int u = 0; u < d.order(); ++u) {
    for (int v = u + 1; v < d.order(); ++v) total += d(u, v);
  }
  return total;
}

std::int64_t set_wiener(const DistanceMatrix& d, std::span<const int> vertices) {
  const Bits mask = to_mask(d.order(), vertices);
  std::int64_t total = 0;
  for (Bits a = mask; a != 0; a &= a - 1) {
    const int u = std::countr_zero(a);
    for (Bits b = a & (a - 1); b != 0; b &= b - 1) total += d(u, std::countr_zero(b));
  }
  return total;
}

std::int64_t set_wiener(const Graph& g, std::span<const int> vertices) {
  return set_wiener(bfs_distances(g), vertices);
}

std::int64_t distance_sum(const DistanceMatrix& d, int u, std::span<const int> vertices) {
  if (u < 0 || u >= d.order()) throw InvalidInput("vertex id " + std::to_string(u) + " out of range");
  const Bits mask = to_mask(d.order(), vertices);
  std::int64_t total = 0;
  for (Bits b = mask; b != 0; b &= b - 1) total += d(u, std::countr_zero(b));
  return total;
}

std::int64_t distance_sum(const Graph& g, int u, std::span<const int> vertices) {
  const Bits mask = to_mask(g.order(), vertices);
  const std::vector<int> dist = bfs_from(g, u);
  std::int64_t total = 0;
  for (Bits b = mask; b != 0; b &= b - 1) total += dist[std::countr_zero(b)];
  return total;
}

}  // namespace gpindex
