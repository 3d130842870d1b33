#include "gpindex/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gpindex/errors.hpp"
#include "gpindex/graph6.hpp"

namespace gpindex {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (const int v : image_) {
    if (v < 0 || v >= size() || hit[v]) throw InvalidInput("permutation is not a bijection");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<int> image(b.size());
  for (int v = 0; v < b.size(); ++v) image[v] = a(b(v));
  Permutation result;
  result.image_ = std::move(image);
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.image_.resize(image_.size());
  for (int v = 0; v < size(); ++v) result.image_[image_[v]] = v;
  return result;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    Bits mapped = 0;
    for (Bits r = g.neighbors(u); r != 0; r &= r - 1) mapped |= bit(p(std::countr_zero(r)));
    if (mapped != g.neighbors(p(u))) return false;
  }
  return true;
}

namespace {

// Union-find over vertex ids, used for orbit bookkeeping.
class OrbitSets {
 public:
  explicit OrbitSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // root stays the minimum vertex
  }

  void merge_permutation(const Permutation& p) {
    for (int v = 0; v < p.size(); ++v) merge(v, p(v));
  }

 private:
  std::vector<int> parent_;
};

// Ordered partition in nauty layout: cells are contiguous ranges of `lab`,
// identified by their start position.
struct Cells {
  std::vector<int> lab;
  std::vector<int> cell_end;  // valid at cell starts
  std::vector<int> start_of;  // vertex -> start of its cell

  int order() const { return static_cast<int>(lab.size()); }
  bool discrete() const {
    for (int s = 0; s < order(); s = cell_end[s]) {
      if (cell_end[s] - s > 1) return false;
    }
    return true;
  }

  Bits cell_mask(int start) const {
    Bits mask = 0;
    for (int k = start; k < cell_end[start]; ++k) mask |= bit(lab[k]);
    return mask;
  }

  static Cells unit(int n) {
    Cells c;
    c.lab.resize(n);
    std::iota(c.lab.begin(), c.lab.end(), 0);
    c.cell_end.assign(n, 0);
    c.cell_end[0] = n;
    c.start_of.assign(n, 0);
    return c;
  }

  static Cells from_partition(int n, const VertexPartition& p) {
    Cells c;
    c.cell_end.assign(n, 0);
    c.start_of.assign(n, -1);
    for (const auto& cell : p) {
      if (cell.empty()) throw InvalidInput("partition has an empty cell");
      const int start = static_cast<int>(c.lab.size());
      for (const int v : cell) {
        if (v < 0 || v >= n || c.start_of[v] != -1) {
          throw InvalidInput("cells are not a partition of the vertex set");
        }
        c.start_of[v] = start;
        c.lab.push_back(v);
      }
      c.cell_end[start] = static_cast<int>(c.lab.size());
    }
    if (c.order() != n) throw InvalidInput("cells do not cover the vertex set");
    return c;
  }

  VertexPartition to_partition() const {
    VertexPartition p;
    for (int s = 0; s < order(); s = cell_end[s]) {
      std::vector<int> cell(lab.begin() + s, lab.begin() + cell_end[s]);
      std::sort(cell.begin(), cell.end());
      p.push_back(std::move(cell));
    }
    return p;
  }

  // Sequence of cell sizes; equal for nodes related by an automorphism.
  std::vector<int> shape() const {
    std::vector<int> sizes;
    for (int s = 0; s < order(); s = cell_end[s]) sizes.push_back(cell_end[s] - s);
    return sizes;
  }

  // Splits v off the front of its cell; returns the start of the remainder.
  int individualize(int v) {
    const int s = start_of[v];
    const int e = cell_end[s];
    const int pos = static_cast<int>(std::find(lab.begin() + s, lab.begin() + e, v) - lab.begin());
    std::swap(lab[s], lab[pos]);
    cell_end[s] = s + 1;
    cell_end[s + 1] = e;
    for (int k = s + 1; k < e; ++k) start_of[lab[k]] = s + 1;
    return s;
  }
};

void refine(const Graph& g, Cells& cells, std::vector<int> queue) {
  const int n = cells.order();
  std::vector<char> queued(n, 0);
  for (const int s : queue) queued[s] = 1;
  std::vector<std::pair<int, int>> keyed;
  keyed.reserve(n);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int splitter = queue[head];
    queued[splitter] = 0;
    const Bits mask = cells.cell_mask(splitter);

    for (int s = 0; s < n;) {
      const int e = cells.cell_end[s];
      if (e - s == 1) {
        s = e;
        continue;
      }
      keyed.clear();
      bool uniform = true;
      for (int k = s; k < e; ++k) {
        const int v = cells.lab[k];
        keyed.emplace_back(std::popcount(g.neighbors(v) & mask), v);
        uniform = uniform && keyed.back().first == keyed.front().first;
      }
      if (uniform) {
        s = e;
        continue;
      }
      std::sort(keyed.begin(), keyed.end());
      int frag = s;
      for (int k = s; k < e; ++k) {
        const auto [count, v] = keyed[k - s];
        if (k > s && count != keyed[k - s - 1].first) {
          cells.cell_end[frag] = k;
          frag = k;
        }
        cells.lab[k] = v;
        cells.start_of[v] = frag;
      }
      cells.cell_end[frag] = e;
      for (int f = s; f < e; f = cells.cell_end[f]) {
        if (!queued[f]) {
          queued[f] = 1;
          queue.push_back(f);
        }
      }
      s = e;
    }
  }
}

std::vector<int> all_starts(const Cells& cells) {
  std::vector<int> starts;
  for (int s = 0; s < cells.order(); s = cells.cell_end[s]) starts.push_back(s);
  return starts;
}

// First smallest non-singleton cell.
int target_cell(const Cells& cells) {
  int best = -1;
  int best_size = cells.order() + 1;
  for (int s = 0; s < cells.order(); s = cells.cell_end[s]) {
    const int size = cells.cell_end[s] - s;
    if (size > 1 && size < best_size) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

std::vector<int> sorted_cell(const Cells& cells, int start) {
  std::vector<int> members(cells.lab.begin() + start, cells.lab.begin() + cells.cell_end[start]);
  std::sort(members.begin(), members.end());
  return members;
}

// Adjacency rows of the graph relabeled so that lab[i] becomes vertex i.
std::vector<Bits> certificate(const Graph& g, const std::vector<int>& lab) {
  const int n = static_cast<int>(lab.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  std::vector<Bits> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    for (Bits r = g.neighbors(lab[i]); r != 0; r &= r - 1) rows[i] |= bit(pos[std::countr_zero(r)]);
  }
  return rows;
}

// Maps leaf `from` onto leaf `to` position by position.
Permutation leaf_map(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> image(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) image[from[i]] = to[i];
  return Permutation(std::move(image));
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Cells root = Cells::unit(n_);
    refine(g_, root, all_starts(root));
    std::vector<int> path;
    descend(root, path);
    return finish();
  }

 private:
  static constexpr int kNoJump = 1 << 30;

  // Returns the depth to unwind to; kNoJump to continue normally.
  int descend(const Cells& cells, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    if (cells.discrete()) return leaf(cells.lab, path);

    const int target = target_cell(cells);
    std::vector<int> explored;
    for (const int w : sorted_cell(cells, target)) {
      if (!explored.empty() && equivalent_to_explored(path, w, explored)) continue;
      Cells child = cells;
      const int s = child.individualize(w);
      refine(g_, child, {s});
      path.push_back(w);
      const int jump = descend(child, path);
      path.pop_back();
      explored.push_back(w);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  bool equivalent_to_explored(const std::vector<int>& path, int w, const std::vector<int>& explored) {
    OrbitSets sets = stabilizer_orbits(path.begin(), path.end());
    const int root = sets.find(w);
    return std::any_of(explored.begin(), explored.end(), [&](int x) { return sets.find(x) == root; });
  }

  template <typename It>
  OrbitSets stabilizer_orbits(It fixed_begin, It fixed_end) {
    OrbitSets sets(n_);
    for (const Permutation& gen : generators_) {
      const bool fixes = std::all_of(fixed_begin, fixed_end, [&](int v) { return gen(v) == v; });
      if (fixes) sets.merge_permutation(gen);
    }
    return sets;
  }

  int leaf(const std::vector<int>& lab, const std::vector<int>& path) {
    std::vector<Bits> cert = certificate(g_, lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_path_ = path;
      best_lab_ = lab;
      best_cert_ = cert;
      first_cert_ = std::move(cert);
      return kNoJump;
    }
    if (cert == first_cert_) {
      record(leaf_map(first_lab_, lab));
      // The subtree below the first divergence from the first path is an
      // image of an explored subtree; resume at the node where they split.
      std::size_t diverge = 0;
      while (diverge < path.size() && diverge < first_path_.size() &&
             path[diverge] == first_path_[diverge]) {
        ++diverge;
      }
      return static_cast<int>(diverge);
    }
    if (cert == best_cert_) {
      record(leaf_map(best_lab_, lab));
    } else if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
    return kNoJump;
  }

  void record(Permutation p) {
    if (p.is_identity()) return;
    if (std::find(generators_.begin(), generators_.end(), p) != generators_.end()) return;
    generators_.push_back(std::move(p));
  }

  CanonicalLabeling finish() {
    AutomorphismGroup group;
    group.generators = generators_;
    for (std::size_t d = 0; d < first_path_.size(); ++d) {
      OrbitSets sets = stabilizer_orbits(first_path_.begin(), first_path_.begin() + d);
      const int root = sets.find(first_path_[d]);
      int size = 0;
      for (int v = 0; v < n_; ++v) size += sets.find(v) == root ? 1 : 0;
      group.order *= size;
    }
    OrbitSets all(n_);
    for (const Permutation& gen : generators_) all.merge_permutation(gen);
    group.orbit_of.assign(n_, -1);
    std::vector<int> index_of_root(n_, -1);
    for (int v = 0; v < n_; ++v) {
      const int root = all.find(v);
      if (index_of_root[root] < 0) {
        index_of_root[root] = static_cast<int>(group.orbits.size());
        group.orbits.emplace_back();
      }
      group.orbit_of[v] = index_of_root[root];
      group.orbits[index_of_root[root]].push_back(v);
    }

    Graph canon = Graph::from_rows(best_cert_);
    std::string g6 = emit_graph6(canon);
    return CanonicalLabeling{std::move(group), best_lab_, std::move(canon), std::move(g6)};
  }

  const Graph& g_;
  const int n_;
  std::vector<Permutation> generators_;
  std::vector<int> first_lab_;
  std::vector<int> first_path_;
  std::vector<Bits> first_cert_;
  std::vector<int> best_lab_;
  std::vector<Bits> best_cert_;
};

// Unpruned search keeping every leaf equivalent to the first one.
class LeafCollector {
 public:
  explicit LeafCollector(const Graph& g) : g_(g) {}

  std::vector<Permutation> run() {
    Cells root = Cells::unit(g_.order());
    refine(g_, root, all_starts(root));
    descend(root, 0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void descend(const Cells& cells, std::size_t depth) {
    std::vector<int> shape = cells.shape();
    if (depth < first_shapes_.size()) {
      if (shape != first_shapes_[depth]) return;
    } else {
      first_shapes_.push_back(std::move(shape));
    }
    if (cells.discrete()) {
      std::vector<Bits> cert = certificate(g_, cells.lab);
      if (first_lab_.empty()) {
        first_lab_ = cells.lab;
        first_cert_ = std::move(cert);
      } else if (cert != first_cert_) {
        return;
      }
      found_.push_back(leaf_map(first_lab_, cells.lab));
      return;
    }
    const int target = target_cell(cells);
    for (const int w : sorted_cell(cells, target)) {
      Cells child = cells;
      const int s = child.individualize(w);
      refine(g_, child, {s});
      descend(child, depth + 1);
    }
  }

  const Graph& g_;
  std::vector<std::vector<int>> first_shapes_;
  std::vector<int> first_lab_;
  std::vector<Bits> first_cert_;
  std::vector<Permutation> found_;
};

}  // namespace

VertexPartition color_refine(const Graph& g, const VertexPartition& p) {
  Cells cells = Cells::from_partition(g.order(), p);
  refine(g, cells, all_starts(cells));
  return cells.to_partition();
}

bool is_equitable(const Graph& g, const VertexPartition& p) {
  for (const auto& splitter : p) {
    Bits mask = 0;
    for (const int v : splitter) mask |= bit(v);
    for (const auto& cell : p) {
      const int expected = std::popcount(g.neighbors(cell.front()) & mask);
      for (const int v : cell) {
        if (std::popcount(g.neighbors(v) & mask) != expected) return false;
      }
    }
  }
  return true;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

AutomorphismGroup canonical_group(const CanonicalLabeling& labeling) {
  const AutomorphismGroup& src = labeling.group;
  const int n = static_cast<int>(labeling.canonical_order.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[labeling.canonical_order[i]] = i;
  const Permutation to_canon(pos);

  AutomorphismGroup out;
  out.order = src.order;
  for (const Permutation& gen : src.generators) {
    out.generators.push_back(to_canon * gen * to_canon.inverse());
  }
  for (auto orbit : src.orbits) {
    for (int& v : orbit) v = pos[v];
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  std::sort(out.orbits.begin(), out.orbits.end());
  out.orbit_of.assign(n, -1);
  for (std::size_t i = 0; i < out.orbits.size(); ++i) {
    for (const int v : out.orbits[i]) out.orbit_of[v] = static_cast<int>(i);
  }
  return out;
}

AutomorphismGroup automorphism_group(const Graph& g) { return canonical_labeling(g).group; }

std::vector<std::vector<int>> orbits(const Graph& g) { return automorphism_group(g).orbits; }

std::vector<Permutation> all_automorphisms(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw CapExceeded("explicit automorphism enumeration is capped at " +
                      std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  return LeafCollector(g).run();
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).canonical_g6; }

}  // namespace gpindex
