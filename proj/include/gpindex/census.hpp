#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpindex/graph.hpp"
#include "gpindex/rational.hpp"
#include "gpindex/symmetry.hpp"

namespace gpindex {

inline constexpr int kMaxCensusOrder = 10;

struct CensusRow {
  std::string canon_g6;
  int n = 0;
  int m = 0;
  BigInt aut_order;
  int orbit_count = 0;
  Rational gp;
  bool is_integer = false;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusSummary {
  int n = 0;  // 0 when the rows mix vertex counts
  std::int64_t connected_count = 0;
  std::int64_t integer_count = 0;
  std::int64_t noninteger_count = 0;
  // Input-file graphs left out of the counts.
  std::int64_t skipped_disconnected = 0;
  std::int64_t skipped_duplicates = 0;

  CensusSummary& merge(const CensusSummary& other);
  friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct CensusResult {
  CensusSummary summary;
  std::vector<CensusRow> rows;
};

struct CensusOptions {
  int workers = 1;
  std::ostream* progress = nullptr;  // stderr-style progress notes, optional
};

// One representative per isomorphism class of graphs on n vertices (connected
// or not), as canonically labeled graphs sorted by edge count and then by
// canonical graph6. Built by canonical vertex augmentation. Throws
// InvalidInput unless 1 <= n <= kMaxCensusOrder.
std::vector<Graph> enumerate_graphs(int n, int workers = 1);

// Connected subset of enumerate_graphs, same order.
std::vector<Graph> enumerate_connected(int n, int workers = 1);

// Census over all connected graphs on n vertices, rows sorted by (m, canon_g6).
CensusResult run_census(int n, const CensusOptions& options = {});

// Census over supplied graphs in input order. Disconnected graphs and
// isomorphic repeats are counted in the summary and skipped.
CensusResult run_census(std::span<const Graph> graphs, const CensusOptions& options = {});
CensusResult run_census(std::istream& graph6_stream, const CensusOptions& options = {});

// Sorted canonical graph6 strings of connected n-vertex graphs with non-integer GP.
std::vector<std::string> noninteger_graphs(int n, int workers = 1);

std::string_view csv_header();
std::string to_csv_row(const CensusRow& row);
CensusRow parse_csv_row(std::string_view line);  // throws InvalidInput
void write_csv(std::ostream& out, std::span<const CensusRow> rows);

// "n=<n> connected=<a> integer=<b> noninteger=<c>"
std::string summary_line(const CensusSummary& s);

}  // namespace gpindex
