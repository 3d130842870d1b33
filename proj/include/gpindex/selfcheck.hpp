#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpindex/gp_index.hpp"

namespace gpindex {

using OrbitRoutine = std::function<Orbits(const Graph&)>;

struct SelfcheckOptions {
  int max_n = 6;  // 1..kMaxEnumerationOrder
  // Orbit source fed to the orbit-based GP formulas; replaceable so tests can
  // inject a faulty routine. Defaults to gpindex::orbits.
  OrbitRoutine orbit_routine;
  std::ostream* progress = nullptr;
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string detail;  // first counterexample when failed
};

struct SelfcheckReport {
  std::vector<CheckOutcome> checks;

  bool passed() const;
  const CheckOutcome* first_failure() const;
};

// Runs the invariant suites over every connected graph with at most max_n
// vertices: three-formula agreement, brute-force automorphism agreement
// (orders up to 7), the denominator, even-order and bipartite integrality
// results, the bipartite orbit-side witness, GP = 0 iff asymmetric,
// connected-graph counts, and the tadpole grid.
// Throws InvalidInput for max_n outside 1..kMaxEnumerationOrder.
SelfcheckReport run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace gpindex
