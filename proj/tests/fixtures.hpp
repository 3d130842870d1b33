#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "gpindex/graph.hpp"
#include "gpindex/rational.hpp"

namespace fixtures {

inline std::string data_path(const std::string& relative) { return std::string(GPINDEX_TEST_DATA_DIR) + "/" + relative; }

// The seven five-vertex graphs with non-integer GP, as stored edge lists.
inline std::vector<gpindex::Graph> noninteger5_graphs() {
  std::vector<gpindex::Graph> out;
  for (int i = 1; i <= 7; ++i) {
    out.push_back(gpindex::read_edge_list_file(data_path("noninteger5/graph" + std::to_string(i) + ".txt")));
  }
  return out;
}

inline std::vector<gpindex::Rational> noninteger5_expected_gp() {
  std::ifstream in(data_path("noninteger5/expected_gp.txt"));
  std::vector<gpindex::Rational> out;
  std::string file;
  std::string token;
  while (in >> file >> token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos) {
      out.emplace_back(std::stoll(token));
    } else {
      out.emplace_back(std::stoll(token.substr(0, slash)), std::stoll(token.substr(slash + 1)));
    }
  }
  return out;
}

}  // namespace fixtures
