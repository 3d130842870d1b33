#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpindex/graph.hpp"
#include "gpindex/rational.hpp"
#include "gpindex/symmetry.hpp"

namespace gpindex {

using Orbits = std::vector<std::vector<int>>;

// Direct double sum over the automorphism group:
//   GP = n / (2 |Aut|) * sum_u sum_alpha d(u, alpha(u)).
// Needs explicit enumeration, so the order is capped at kMaxEnumerationOrder.
Rational gp_definition(const Graph& g);

// GP = n * sum_i W(V_i) / |V_i| over the vertex orbits V_i.
Rational gp_orbit_wiener(const Graph& g);
Rational gp_orbit_wiener(const Graph& g, const Orbits& orbits);

// GP = n * sum_i w_{V_i}(v_i) / 2 with v_i the minimum vertex of V_i.
// This is the production formula: one BFS per orbit.
Rational gp_orbit_representative(const Graph& g);
Rational gp_orbit_representative(const Graph& g, const Orbits& orbits);

enum class GpClass { Integer, HalfInteger };

// Throws InternalError for any denominator other than 1 or 2.
GpClass classify_gp(const Rational& x);

enum class Guarantee { EvenOrder, Bipartite, None };

std::string_view to_string(Guarantee g);
std::string_view to_string(GpClass c);

// A non-None result proves that GP(g) is an integer. Throws NotConnected.
Guarantee integer_guarantee(const Graph& g);

struct GpReport {
  Rational gp;
  BigInt aut_order;
  int orbit_count = 0;
  std::int64_t wiener = 0;
  bool is_integer = false;
  Guarantee guarantee = Guarantee::None;
  Orbits orbits;
};

struct GpReportOptions {
  // Compare all three formulas when the order allows explicit enumeration.
  bool cross_check = true;
};

// Throws NotConnected, or InternalError when a cross-check or a proven
// integrality guarantee fails.
GpReport gp_report(const Graph& g, GpReportOptions options = {});
GpReport gp_report(const Graph& g, const AutomorphismGroup& group, GpReportOptions options = {});

std::string to_json(const GpReport& r);

}  // namespace gpindex
