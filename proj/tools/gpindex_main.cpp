// gpindex: Graovac-Pisanski index reports, censuses and family checks.
//
// Exit codes: 0 success, 1 selfcheck failure or internal error,
// 2 invalid input, 3 size cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gpindex/census.hpp"
#include "gpindex/errors.hpp"
#include "gpindex/families.hpp"
#include "gpindex/gp_index.hpp"
#include "gpindex/graph6.hpp"
#include "gpindex/selfcheck.hpp"

namespace {

using namespace gpindex;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  std::string g6;
  std::string edges_path;
  std::string from_path;
  std::string out_path;
  std::string nonintegers_path;
  std::optional<int> census_n;
  int cycle_len = 0;
  int tail_len = 0;
  int workers = 1;
  int max_n = 6;
  bool cross_check = true;
};

// GP_MAX_N lowers the vertex cap for graphs read from the command line or files.
int size_cap() {
  const char* env = std::getenv("GP_MAX_N");
  if (env == nullptr || *env == '\0') return kMaxVertices;
  try {
    const int cap = std::stoi(env);
    if (cap >= 1) return std::min(cap, kMaxVertices);
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string("GP_MAX_N must be a positive integer, got \"") + env + "\"");
}

void enforce_cap(const Graph& g) {
  const int cap = size_cap();
  if (g.order() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.order()) + " vertices; the cap is " + std::to_string(cap));
  }
}

int cmd_compute(const RunConfig& cfg) {
  if (cfg.g6.empty() == cfg.edges_path.empty()) throw InvalidInput("compute needs exactly one of --g6 or --edges");
  const Graph g = cfg.g6.empty() ? read_edge_list_file(cfg.edges_path) : parse_graph6(cfg.g6);
  enforce_cap(g);
  const GpReport report = gp_report(g, GpReportOptions{.cross_check = cfg.cross_check});
  std::cout << to_json(report) << '\n';
  return kExitOk;
}

int cmd_census(const RunConfig& cfg) {
  if (cfg.census_n.has_value() == !cfg.from_path.empty()) {
    throw InvalidInput("census needs exactly one of <n> or --from");
  }
  if (cfg.workers < 1) throw InvalidInput("--workers must be at least 1");
  CensusOptions options;
  options.workers = cfg.workers;
  options.progress = &std::cerr;

  CensusResult result;
  if (cfg.census_n) {
    const int n = *cfg.census_n;
    if (n < 1) throw InvalidInput("census order must be at least 1");
    if (n > std::min(kMaxCensusOrder, size_cap())) {
      throw CapExceeded("census order " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(std::min(kMaxCensusOrder, size_cap())));
    }
    result = run_census(n, options);
  } else {
    std::ifstream in(cfg.from_path);
    if (!in) throw InvalidInput("cannot open " + cfg.from_path);
    const std::vector<Graph> graphs = read_graph6_stream(in);
    for (const Graph& g : graphs) enforce_cap(g);
    result = run_census(std::span<const Graph>(graphs), options);
  }

  if (cfg.out_path.empty()) {
    write_csv(std::cout, result.rows);
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + cfg.out_path);
    write_csv(out, result.rows);
  }
  if (!cfg.nonintegers_path.empty()) {
    std::ofstream out(cfg.nonintegers_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + cfg.nonintegers_path);
    for (const CensusRow& r : result.rows) {
      if (!r.is_integer) out << r.canon_g6 << '\n';
    }
  }
  std::cout << summary_line(result.summary) << '\n';
  return kExitOk;
}

int cmd_family(const RunConfig& cfg) {
  const TadpoleSpec spec{cfg.cycle_len, cfg.tail_len};
  const Graph g = tadpole(spec);
  const Rational closed = tadpole_gp_closed_form(spec);
  const Rational computed = gp_orbit_representative(g);
  const bool match = closed == computed;
  std::cout << "tadpole l=" << spec.cycle_len << " t=" << spec.tail_len << " n=" << spec.order() << '\n'
            << "closed-form " << closed << '\n'
            << "computed " << computed << '\n'
            << (match ? "MATCH" : "MISMATCH") << '\n'
            << "predicted " << (tadpole_is_noninteger(spec.cycle_len) ? "non-integer" : "integer") << '\n';
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_selfcheck(const RunConfig& cfg) {
  SelfcheckOptions options;
  options.max_n = cfg.max_n;
  options.progress = &std::cerr;
  const SelfcheckReport report = run_selfcheck(options);
  for (const CheckOutcome& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  if (const CheckOutcome* failed = report.first_failure()) {
    std::cout << "selfcheck failed: " << failed->name << '\n';
    return kExitCheckFailed;
  }
  std::cout << "all checks passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graovac-Pisanski index toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* compute = app.add_subcommand("compute", "GP report for one graph as JSON");
  compute->add_option("--g6", cfg.g6, "graph6 string");
  compute->add_option("--edges", cfg.edges_path, "edge-list file (\"n m\" header, then \"u v\" lines)");
  compute->add_flag("!--no-cross-check", cfg.cross_check, "skip the three-formula cross-check");

  CLI::App* census = app.add_subcommand("census", "GP census of connected graphs");
  census->add_option("n", cfg.census_n, "vertex count (1..10)");
  census->add_option("--from", cfg.from_path, "graph6 file to read instead of generating");
  census->add_option("--out", cfg.out_path, "CSV output path (default: stdout)");
  census->add_option("--nonintegers", cfg.nonintegers_path, "write non-integer-GP graphs as graph6");
  census->add_option("--workers", cfg.workers, "worker threads");

  CLI::App* family = app.add_subcommand("family", "tadpole closed form vs computed GP");
  family->add_option("l", cfg.cycle_len, "odd cycle length")->required();
  family->add_option("t", cfg.tail_len, "even tail length")->required();

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the invariant suites");
  selfcheck->add_option("--max-n", cfg.max_n, "largest vertex count to sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*census) return cmd_census(cfg);
    if (*family) return cmd_family(cfg);
    return cmd_selfcheck(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
