#pragma once

#include "gpindex/graph.hpp"
#include "gpindex/rational.hpp"

namespace gpindex {

// Odd cycle of length cycle_len with a path of tail_len edges (tail_len even,
// at least 2) hanging off cycle vertex cycle_len - 1.
struct TadpoleSpec {
  int cycle_len = 3;
  int tail_len = 2;

  int order() const { return cycle_len + tail_len; }
};

// Throws InvalidInput on an even cycle, odd or short tail, or an order
// above kMaxVertices.
void validate(const TadpoleSpec& spec);

// Vertices 0..l-1 form the cycle, l..l+t-1 the tail attached at l-1.
Graph tadpole(const TadpoleSpec& spec);

// (l + t) * C((l + 1) / 2, 2) / 2: the pairs in the two-element orbits sit at
// distances 1, 2, ..., (l - 1) / 2.
Rational tadpole_gp_closed_form(const TadpoleSpec& spec);

// True iff l mod 8 is 3 or 5. Throws InvalidInput for even or too-small l.
bool tadpole_is_noninteger(int cycle_len);

// Same criterion via parity of C((l + 1) / 2, 2).
bool tadpole_binomial_is_odd(int cycle_len);

}  // namespace gpindex
