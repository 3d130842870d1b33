#include "gpindex/gp_index.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "gpindex/distance.hpp"
#include "gpindex/errors.hpp"

namespace gpindex {

namespace {

// Orbit lists must partition the vertex set.
void check_partition(const Graph& g, const Orbits& orbits) {
  Bits seen = 0;
  int count = 0;
  for (const auto& orbit : orbits) {
    if (orbit.empty()) throw InvalidInput("orbit list contains an empty cell");
    for (const int v : orbit) {
      if (v < 0 || v >= g.order()) throw InvalidInput("orbit vertex " + std::to_string(v) + " out of range");
      if (seen & bit(v)) throw InvalidInput("vertex " + std::to_string(v) + " appears in two orbits");
      seen |= bit(v);
      ++count;
    }
  }
  if (count != g.order()) throw InvalidInput("orbit list does not cover every vertex");
}

}  // namespace

Rational gp_definition(const Graph& g) {
  const DistanceMatrix d = bfs_distances(g);
  const std::vector<Permutation> group = all_automorphisms(g);
  std::int64_t displacement = 0;
  for (const Permutation& alpha : group) {
    for (int u = 0; u < g.order(); ++u) displacement += d(u, alpha(u));
  }
  return Rational(g.order()) * Rational(displacement, 2 * static_cast<std::int64_t>(group.size()));
}

Rational gp_orbit_wiener(const Graph& g) { return gp_orbit_wiener(g, orbits(g)); }

Rational gp_orbit_wiener(const Graph& g, const Orbits& orbits) {
  check_partition(g, orbits);
  const DistanceMatrix d = bfs_distances(g);
  Rational sum;
  for (const auto& orbit : orbits) {
    sum += Rational(set_wiener(d, orbit), static_cast<std::int64_t>(orbit.size()));
  }
  return Rational(g.order()) * sum;
}

Rational gp_orbit_representative(const Graph& g) { return gp_orbit_representative(g, orbits(g)); }

Rational gp_orbit_representative(const Graph& g, const Orbits& orbits) {
  check_partition(g, orbits);
  if (!is_connected(g)) throw NotConnected();
  std::int64_t within = 0;
  for (const auto& orbit : orbits) {
    if (orbit.size() < 2) continue;
    const std::vector<int> dist = bfs_from(g, *std::min_element(orbit.begin(), orbit.end()));
    for (const int v : orbit) within += dist[v];
  }
  return Rational(g.order()) * Rational(within, 2);
}

GpClass classify_gp(const Rational& x) {
  if (x.den() == 1) return GpClass::Integer;
  if (x.den() == 2) return GpClass::HalfInteger;
  throw InternalError("GP value " + x.to_string() + " is neither an integer nor a half-integer");
}

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::EvenOrder: return "even-order";
    case Guarantee::Bipartite: return "bipartite";
    case Guarantee::None: return "none";
  }
  return "none";
}

std::string_view to_string(GpClass c) {
  return c == GpClass::Integer ? "integer" : "half-integer";
}

Guarantee integer_guarantee(const Graph& g) {
  if (!is_connected(g)) throw NotConnected();
  if (g.order() % 2 == 0) return Guarantee::EvenOrder;
  return bipartition(g) ? Guarantee::Bipartite : Guarantee::None;
}

GpReport gp_report(const Graph& g, GpReportOptions options) {
  if (!is_connected(g)) throw NotConnected();
  return gp_report(g, automorphism_group(g), options);
}

GpReport gp_report(const Graph& g, const AutomorphismGroup& group, GpReportOptions options) {
  GpReport r;
  r.guarantee = integer_guarantee(g);
  r.gp = gp_orbit_representative(g, group.orbits);
  r.aut_order = group.order;
  r.orbit_count = static_cast<int>(group.orbits.size());
  r.orbits = group.orbits;
  r.wiener = wiener_index(g);
  r.is_integer = classify_gp(r.gp) == GpClass::Integer;

  if (r.guarantee != Guarantee::None && !r.is_integer) {
    throw InternalError("GP " + r.gp.to_string() + " is not an integer despite the " +
                        std::string(to_string(r.guarantee)) + " guarantee");
  }
  if (options.cross_check) {
    const Rational by_wiener = gp_orbit_wiener(g, group.orbits);
    if (by_wiener != r.gp) {
      throw InternalError("orbit-Wiener formula gives " + by_wiener.to_string() +
                          ", representative formula gives " + r.gp.to_string());
    }
    if (g.order() <= kMaxEnumerationOrder) {
      const Rational by_definition = gp_definition(g);
      if (by_definition != r.gp) {
        throw InternalError("definition gives " + by_definition.to_string() +
                            ", representative formula gives " + r.gp.to_string());
      }
    }
  }
  return r;
}

std::string to_json(const GpReport& r) {
  nlohmann::json j;
  j["gp"] = r.gp.to_string();
  j["gp_num"] = r.gp.num();
  j["gp_den"] = r.gp.den();
  j["is_integer"] = r.is_integer;
  j["guarantee"] = std::string(to_string(r.guarantee));
  if (r.aut_order <= std::numeric_limits<std::uint64_t>::max()) {
    j["aut_order"] = r.aut_order.convert_to<std::uint64_t>();
  } else {
    j["aut_order"] = r.aut_order.str();
  }
  j["orbit_count"] = r.orbit_count;
  j["orbits"] = r.orbits;
  j["wiener"] = r.wiener;
  return j.dump();
}

}  // namespace gpindex
