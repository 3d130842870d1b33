#include "gpindex/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>

#include "gpindex/census.hpp"
#include "gpindex/distance.hpp"
#include "gpindex/errors.hpp"
#include "gpindex/families.hpp"
#include "gpindex/graph6.hpp"

namespace gpindex {

namespace {

constexpr int kBruteForceOrder = 7;

// Connected graphs on 1..10 vertices, up to isomorphism.
constexpr std::array<std::int64_t, 11> kConnectedCounts = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};

struct BruteGroup {
  std::int64_t order = 0;
  Orbits orbits;
};

BruteGroup brute_force_group(const Graph& g) {
  const int n = g.order();
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<int> orbit_min(n);
  std::iota(orbit_min.begin(), orbit_min.end(), 0);
  BruteGroup out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(image[u], image[v]);
    }
    if (!ok) continue;
    ++out.order;
    for (int v = 0; v < n; ++v) orbit_min[image[v]] = std::min(orbit_min[image[v]], v);
  } while (std::next_permutation(image.begin(), image.end()));
  // Orbit of v is {image[v]}; every orbit's minimum reaches each member.
  out.orbits.assign(n, {});
  for (int v = 0; v < n; ++v) out.orbits[orbit_min[v]].push_back(v);
  std::erase_if(out.orbits, [](const auto& o) { return o.empty(); });
  return out;
}

Orbits normalized(Orbits orbits) {
  for (auto& o : orbits) std::sort(o.begin(), o.end());
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

class Checks {
 public:
  CheckOutcome& get(const std::string& name) {
    for (auto& c : report_.checks) {
      if (c.name == name) return c;
    }
    CheckOutcome fresh;
    fresh.name = name;
    report_.checks.push_back(std::move(fresh));
    return report_.checks.back();
  }

  void expect(const std::string& name, bool ok, const std::string& what) {
    CheckOutcome& c = get(name);
    ++c.cases;
    if (!ok && c.passed) {
      c.passed = false;
      c.detail = what;
    }
  }

  SelfcheckReport take() { return std::move(report_); }

 private:
  SelfcheckReport report_;
};

}  // namespace

bool SelfcheckReport::passed() const { return first_failure() == nullptr; }

const CheckOutcome* SelfcheckReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

SelfcheckReport run_selfcheck(const SelfcheckOptions& options) {
  if (options.max_n < 1 || options.max_n > kMaxEnumerationOrder) {
    throw InvalidInput("selfcheck --max-n must be in 1.." + std::to_string(kMaxEnumerationOrder));
  }
  const OrbitRoutine orbit_routine =
      options.orbit_routine ? options.orbit_routine : OrbitRoutine([](const Graph& g) { return orbits(g); });
  Checks checks;

  for (int n = 1; n <= options.max_n; ++n) {
    const std::vector<Graph> graphs = enumerate_connected(n);
    checks.expect("connected-graph-counts", static_cast<std::int64_t>(graphs.size()) == kConnectedCounts[n],
                  "n=" + std::to_string(n) + ": enumerated " + std::to_string(graphs.size()) + ", expected " +
                      std::to_string(kConnectedCounts[n]));

    for (const Graph& g : graphs) {
      const std::string id = emit_graph6(g);
      const Orbits orbit_cells = orbit_routine(g);
      const AutomorphismGroup group = automorphism_group(g);

      const Rational by_definition = gp_definition(g);
      Rational by_wiener;
      Rational by_representative;
      bool evaluated = true;
      try {
        by_wiener = gp_orbit_wiener(g, orbit_cells);
        by_representative = gp_orbit_representative(g, orbit_cells);
      } catch (const std::exception& e) {
        evaluated = false;
        checks.expect("three-formula-equivalence", false, id + ": " + e.what());
      }
      if (evaluated) {
        checks.expect("three-formula-equivalence",
                      by_definition == by_wiener && by_wiener == by_representative,
                      id + ": definition " + by_definition.to_string() + ", orbit-Wiener " +
                          by_wiener.to_string() + ", representative " + by_representative.to_string());
      }

      const Rational& gp = by_definition;
      checks.expect("denominator-one-or-two", gp.den() == 1 || gp.den() == 2,
                    id + ": GP = " + gp.to_string());
      if (n % 2 == 0) {
        checks.expect("even-order-integer", gp.is_integer(), id + ": GP = " + gp.to_string());
      }
      const auto sides = bipartition(g);
      if (sides) {
        checks.expect("bipartite-integer", gp.is_integer(), id + ": GP = " + gp.to_string());
      }
      if (sides && n % 2 == 1) {
        const DistanceMatrix d = bfs_distances(g);
        bool witness = true;
        for (const auto& orbit : group.orbits) {
          for (const int u : orbit) {
            for (const int v : orbit) {
              witness = witness && sides->side[u] == sides->side[v] && d(u, v) % 2 == 0;
            }
          }
        }
        checks.expect("bipartite-orbit-sides", witness, id + ": an orbit crosses the bipartition");
      }
      checks.expect("gp-zero-iff-asymmetric", (gp.num() == 0) == (group.order == 1),
                    id + ": GP = " + gp.to_string() + ", |Aut| = " + group.order.str());

      if (n <= kBruteForceOrder) {
        const BruteGroup brute = brute_force_group(g);
        checks.expect("automorphism-oracle",
                      group.order == brute.order && normalized(group.orbits) == brute.orbits &&
                          normalized(orbit_cells) == brute.orbits,
                      id + ": brute force |Aut| = " + std::to_string(brute.order) + " with " +
                          std::to_string(brute.orbits.size()) + " orbits; search |Aut| = " + group.order.str() +
                          ", orbit routine gives " + std::to_string(orbit_cells.size()) + " orbits");
      }
    }
    if (options.progress) *options.progress << "selfcheck: n=" << n << " done (" << graphs.size() << " graphs)\n";
  }

  for (int l = 3; l <= 13; l += 2) {
    for (int t = 2; t <= 6; t += 2) {
      const TadpoleSpec spec{l, t};
      const Graph g = tadpole(spec);
      const Rational closed = tadpole_gp_closed_form(spec);
      const Rational computed = gp_orbit_representative(g, orbit_routine(g));
      const AutomorphismGroup group = automorphism_group(g);
      int pairs = 0;
      int singles = 0;
      for (const auto& o : group.orbits) {
        if (o.size() == 1) ++singles;
        if (o.size() == 2) ++pairs;
      }
      checks.expect("tadpole-grid",
                    closed == computed && computed.is_integer() != tadpole_is_noninteger(l) &&
                        group.order == 2 && pairs == (l - 1) / 2 && singles == t + 1,
                    "tadpole(" + std::to_string(l) + "," + std::to_string(t) + "): closed form " +
                        closed.to_string() + ", computed " + computed.to_string());
    }
  }
  return checks.take();
}

}  // namespace gpindex
