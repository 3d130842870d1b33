#include "gpindex/graph6.hpp"

#include <istream>

#include "gpindex/errors.hpp"

namespace gpindex {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char c) {
  const int value = static_cast<unsigned char>(c);
  if (value < 63 || value > 126) {
    throw InvalidInput("graph6: byte " + std::to_string(value) +
                       " outside the range 63..126");
  }
  return value - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.empty()) throw InvalidInput("graph6: truncated (empty input)");

  std::size_t pos = 0;
  long long n = 0;
  if (line[0] != '~') {
    n = decode_char(line[0]);
    pos = 1;
  } else {
    // N(n) long forms: 126 + 3 bytes, or 126 126 + 6 bytes.
    const bool eight = line.size() > 1 && line[1] == '~';
    const std::size_t digits = eight ? 6 : 3;
    pos = eight ? 2 : 1;
    if (line.size() < pos + digits) throw InvalidInput("graph6: truncated size header");
    for (std::size_t i = 0; i < digits; ++i) n = (n << 6) | decode_char(line[pos + i]);
    pos += digits;
  }
  if (n == 0) throw InvalidInput("graph must have at least one vertex");
  if (n > kMaxVertices) {
    throw CapExceeded("graph has " + std::to_string(n) +
                      " vertices; the cap is " + std::to_string(kMaxVertices));
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t chars = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < chars) throw InvalidInput("graph6: truncated bit payload");
  if (line.size() - pos > chars) throw InvalidInput("graph6: trailing bytes after payload");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = decode_char(line[pos + static_cast<std::size_t>(k / 6)]);
      if ((word >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (in.bad()) throw InvalidInput("graph6 stream unreadable");
  return graphs;
}

}  // namespace gpindex
