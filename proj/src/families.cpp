#include "gpindex/families.hpp"

#include <string>
#include <vector>

#include "gpindex/errors.hpp"

namespace gpindex {

namespace {

void check_cycle(int cycle_len) {
  if (cycle_len < 3 || cycle_len % 2 == 0) {
    throw InvalidInput("tadpole cycle length must be odd and at least 3, got " +
                       std::to_string(cycle_len));
  }
}

}  // namespace

void validate(const TadpoleSpec& spec) {
  check_cycle(spec.cycle_len);
  if (spec.tail_len < 2 || spec.tail_len % 2 != 0) {
    throw InvalidInput("tadpole tail length must be even and at least 2, got " +
                       std::to_string(spec.tail_len));
  }
  if (spec.order() > kMaxVertices) {
    throw InvalidInput("tadpole has " + std::to_string(spec.order()) + " vertices; the cap is " +
                       std::to_string(kMaxVertices));
  }
}

Graph tadpole(const TadpoleSpec& spec) {
  validate(spec);
  const int l = spec.cycle_len;
  std::vector<Edge> edges;
  for (int v = 0; v < l; ++v) edges.emplace_back(v, (v + 1) % l);
  int prev = l - 1;
  for (int v = l; v < spec.order(); ++v) {
    edges.emplace_back(prev, v);
    prev = v;
  }
  return Graph(spec.order(), edges);
}

Rational tadpole_gp_closed_form(const TadpoleSpec& spec) {
  validate(spec);
  const std::int64_t half = (spec.cycle_len + 1) / 2;
  const std::int64_t binom = half * (half - 1) / 2;
  return Rational(spec.order()) * Rational(binom, 2);
}

bool tadpole_is_noninteger(int cycle_len) {
  check_cycle(cycle_len);
  return cycle_len % 8 == 3 || cycle_len % 8 == 5;
}

bool tadpole_binomial_is_odd(int cycle_len) {
  check_cycle(cycle_len);
  const std::int64_t l = cycle_len;
  return ((l + 1) / 2 * ((l - 1) / 2) / 2) % 2 == 1;
}

}  // namespace gpindex
