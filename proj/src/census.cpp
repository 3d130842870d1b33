#include "gpindex/census.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "gpindex/errors.hpp"
#include "gpindex/gp_index.hpp"
#include "gpindex/graph6.hpp"
#include "parallel.hpp"

namespace gpindex {

namespace {

void check_census_order(int n) {
  if (n < 1 || n > kMaxCensusOrder) {
    throw InvalidInput("census order must be in 1.." + std::to_string(kMaxCensusOrder) + ", got " +
                       std::to_string(n));
  }
}

struct Child {
  CanonicalLabeling labeling;
};

// Children of `parent` that pass the canonical deletion test: the added
// vertex must share an orbit with the vertex labeled last canonically. Those
// that survive from one parent are deduplicated by canonical form; survivors
// from different parents are never isomorphic.
std::vector<Child> augment(const Graph& parent) {
  const int k = parent.order();
  const Bits subsets = Bits{1} << k;
  std::vector<Child> children;
  std::unordered_set<std::string> seen;
  for (Bits nbrs = 0; nbrs < subsets; ++nbrs) {
    const Graph candidate = parent.with_new_vertex(nbrs);
    CanonicalLabeling labeling = canonical_labeling(candidate);
    const int last = labeling.canonical_order.back();
    if (labeling.group.orbit_of[k] != labeling.group.orbit_of[last]) continue;
    if (!seen.insert(labeling.canonical_g6).second) continue;
    children.push_back(Child{std::move(labeling)});
  }
  return children;
}

bool graph_less(const Graph& a, const std::string& a6, const Graph& b, const std::string& b6) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a6 < b6;
}

void sort_graphs(std::vector<Graph>& graphs) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) keys.emplace_back(emit_graph6(graphs[i]), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    return graph_less(graphs[x.second], x.first, graphs[y.second], y.first);
  });
  std::vector<Graph> sorted;
  sorted.reserve(graphs.size());
  for (const auto& [g6, i] : keys) sorted.push_back(std::move(graphs[i]));
  graphs = std::move(sorted);
}

// All graphs on `n` vertices, unsorted within the level but in a
// deterministic order (parent order, then neighborhood subset order).
std::vector<Graph> build_level(int n, int workers, std::ostream* progress) {
  std::vector<Graph> level{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<Graph>> per_parent(level.size());
    detail::parallel_for(level.size(), workers, [&](std::size_t i) {
      for (Child& c : augment(level[i])) per_parent[i].push_back(std::move(c.labeling.canonical_graph));
    });
    std::vector<Graph> next;
    for (auto& kids : per_parent) {
      for (Graph& g : kids) next.push_back(std::move(g));
    }
    level = std::move(next);
    if (progress) *progress << "level " << k << ": " << level.size() << " graphs\n";
  }
  return level;
}

CensusRow make_row(const CanonicalLabeling& labeling) {
  const Graph& g = labeling.canonical_graph;
  const GpReport report = gp_report(g, canonical_group(labeling), GpReportOptions{.cross_check = false});
  CensusRow row;
  row.canon_g6 = labeling.canonical_g6;
  row.n = g.order();
  row.m = g.size();
  row.aut_order = report.aut_order;
  row.orbit_count = report.orbit_count;
  row.gp = report.gp;
  row.is_integer = report.is_integer;
  return row;
}

void tally(CensusSummary& s, const CensusRow& row) {
  ++s.connected_count;
  ++(row.is_integer ? s.integer_count : s.noninteger_count);
}

void set_order(CensusSummary& s, const std::vector<CensusRow>& rows) {
  s.n = rows.empty() ? 0 : rows.front().n;
  for (const CensusRow& r : rows) {
    if (r.n != s.n) {
      s.n = 0;
      break;
    }
  }
}

}  // namespace

CensusSummary& CensusSummary::merge(const CensusSummary& other) {
  if (n != other.n) n = (connected_count == 0 && skipped_disconnected == 0) ? other.n : 0;
  connected_count += other.connected_count;
  integer_count += other.integer_count;
  noninteger_count += other.noninteger_count;
  skipped_disconnected += other.skipped_disconnected;
  skipped_duplicates += other.skipped_duplicates;
  return *this;
}

std::vector<Graph> enumerate_graphs(int n, int workers) {
  check_census_order(n);
  std::vector<Graph> graphs = build_level(n, workers, nullptr);
  sort_graphs(graphs);
  return graphs;
}

std::vector<Graph> enumerate_connected(int n, int workers) {
  std::vector<Graph> graphs = enumerate_graphs(n, workers);
  std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
  return graphs;
}

CensusResult run_census(int n, const CensusOptions& options) {
  check_census_order(n);
  CensusResult result;
  if (n == 1) {
    result.rows.push_back(make_row(canonical_labeling(Graph(1, {}))));
  } else {
    const std::vector<Graph> parents = build_level(n - 1, options.workers, options.progress);
    std::vector<std::vector<CensusRow>> per_parent(parents.size());
    detail::parallel_for(parents.size(), options.workers, [&](std::size_t i) {
      for (const Child& c : augment(parents[i])) {
        if (is_connected(c.labeling.canonical_graph)) per_parent[i].push_back(make_row(c.labeling));
      }
    });
    for (auto& rows : per_parent) {
      for (CensusRow& r : rows) result.rows.push_back(std::move(r));
    }
    std::sort(result.rows.begin(), result.rows.end(), [](const CensusRow& a, const CensusRow& b) {
      return a.m != b.m ? a.m < b.m : a.canon_g6 < b.canon_g6;
    });
  }
  for (const CensusRow& r : result.rows) tally(result.summary, r);
  result.summary.n = n;
  return result;
}

CensusResult run_census(std::span<const Graph> graphs, const CensusOptions& options) {
  std::vector<std::optional<CensusRow>> slots(graphs.size());
  detail::parallel_for(graphs.size(), options.workers, [&](std::size_t i) {
    if (is_connected(graphs[i])) slots[i] = make_row(canonical_labeling(graphs[i]));
  });
  CensusResult result;
  std::unordered_set<std::string> seen;
  for (auto& slot : slots) {
    if (!slot) {
      ++result.summary.skipped_disconnected;
    } else if (!seen.insert(slot->canon_g6).second) {
      ++result.summary.skipped_duplicates;
    } else {
      tally(result.summary, *slot);
      result.rows.push_back(std::move(*slot));
    }
  }
  set_order(result.summary, result.rows);
  if (options.progress) {
    if (result.summary.skipped_disconnected > 0) {
      *options.progress << "warning: skipped " << result.summary.skipped_disconnected
                        << " disconnected graph(s)\n";
    }
    if (result.summary.skipped_duplicates > 0) {
      *options.progress << "warning: skipped " << result.summary.skipped_duplicates
                        << " isomorphic repeat(s)\n";
    }
  }
  return result;
}

CensusResult run_census(std::istream& graph6_stream, const CensusOptions& options) {
  const std::vector<Graph> graphs = read_graph6_stream(graph6_stream);
  return run_census(std::span<const Graph>(graphs), options);
}

std::vector<std::string> noninteger_graphs(int n, int workers) {
  CensusOptions options;
  options.workers = workers;
  std::vector<std::string> out;
  for (const CensusRow& r : run_census(n, options).rows) {
    if (!r.is_integer) out.push_back(r.canon_g6);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view csv_header() {
  return "canon_g6,n,m,aut_order,orbit_count,gp_num,gp_den,is_integer";
}

std::string to_csv_row(const CensusRow& row) {
  std::ostringstream out;
  out << row.canon_g6 << ',' << row.n << ',' << row.m << ',' << row.aut_order << ','
      << row.orbit_count << ',' << row.gp.num() << ',' << row.gp.den() << ','
      << (row.is_integer ? "true" : "false");
  return out.str();
}

CensusRow parse_csv_row(std::string_view line) {
  std::vector<std::string_view> fields;
  for (std::size_t start = 0;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 8) throw InvalidInput("CSV row must have 8 fields");
  auto to_int = [](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvalidInput("CSV field \"" + std::string(s) + "\" is not an integer");
    }
    return v;
  };
  CensusRow row;
  row.canon_g6 = std::string(fields[0]);
  row.n = static_cast<int>(to_int(fields[1]));
  row.m = static_cast<int>(to_int(fields[2]));
  try {
    row.aut_order = BigInt(std::string(fields[3]));
  } catch (const std::exception&) {
    throw InvalidInput("CSV aut_order \"" + std::string(fields[3]) + "\" is not an integer");
  }
  row.orbit_count = static_cast<int>(to_int(fields[4]));
  const std::int64_t den = to_int(fields[6]);
  if (den <= 0) throw InvalidInput("CSV gp_den must be positive");
  row.gp = Rational(to_int(fields[5]), den);
  if (fields[7] != "true" && fields[7] != "false") throw InvalidInput("CSV is_integer must be true/false");
  row.is_integer = fields[7] == "true";
  return row;
}

void write_csv(std::ostream& out, std::span<const CensusRow> rows) {
  out << csv_header() << '\n';
  for (const CensusRow& r : rows) out << to_csv_row(r) << '\n';
}

std::string summary_line(const CensusSummary& s) {
  std::ostringstream out;
  out << "n=";
  if (s.n > 0) {
    out << s.n;
  } else {
    out << "mixed";
  }
  out << " connected=" << s.connected_count << " integer=" << s.integer_count
      << " noninteger=" << s.noninteger_count;
  return out.str();
}

}  // namespace gpindex
