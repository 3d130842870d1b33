#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpindex/graph.hpp"

namespace gpindex {

using BigInt = boost::multiprecision::cpp_int;

// Largest order accepted by all_automorphisms and anything built on it.
inline constexpr int kMaxEnumerationOrder = 10;

// A bijection on 0..n-1 stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);  // throws InvalidInput if not a bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;

  // (a * b)(v) = a(b(v))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

// Ordered list of disjoint non-empty cells covering 0..n-1.
using VertexPartition = std::vector<std::vector<int>>;

struct AutomorphismGroup {
  std::vector<Permutation> generators;
  BigInt order = 1;
  // Orbit cells sorted by minimum vertex; vertices sorted within each cell.
  std::vector<std::vector<int>> orbits;
  // orbit_of[v] indexes into orbits.
  std::vector<int> orbit_of;
};

// Coarsest equitable refinement of `p`. Cells split in place; fragments are
// ordered by ascending neighbor count into the splitting cell, so the result
// is independent of vertex labels. Throws InvalidInput if `p` does not
// partition the vertex set.
VertexPartition color_refine(const Graph& g, const VertexPartition& p);

bool is_equitable(const Graph& g, const VertexPartition& p);

// Output of one individualization-refinement search.
struct CanonicalLabeling {
  AutomorphismGroup group;
  // canonical_order[i] is the vertex placed at canonical position i.
  std::vector<int> canonical_order;
  Graph canonical_graph;
  std::string canonical_g6;
};

CanonicalLabeling canonical_labeling(const Graph& g);

// The group of `labeling` rewritten on canonical vertex ids, i.e. as the
// automorphism group of labeling.canonical_graph.
AutomorphismGroup canonical_group(const CanonicalLabeling& labeling);

AutomorphismGroup automorphism_group(const Graph& g);

std::vector<std::vector<int>> orbits(const Graph& g);

// Every automorphism exactly once, sorted lexicographically by image (the
// identity comes first). Throws CapExceeded above kMaxEnumerationOrder.
std::vector<Permutation> all_automorphisms(const Graph& g);

// graph6 of the canonically relabeled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

}  // namespace gpindex
