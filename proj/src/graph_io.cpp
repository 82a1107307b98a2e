#include "bei/graph_io.hpp"

#include <sstream>

#include "bei/errors.hpp"

namespace bei {

namespace {
constexpr int kMaxGraph6 = 62;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph decode_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw InvalidInput("empty graph6 line");

  const int head = static_cast<unsigned char>(line[0]);
  if (head == 126) throw SizeLimit("graph6 long form (n > 62) is not supported");
  if (head < 63 || head > 126) throw InvalidInput("bad graph6 header byte");
  const int n = head - 63;
  if (n > kMaxGraph6) throw SizeLimit("graph6 order above 62");

  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(line.size()) != 1 + bytes) {
    throw InvalidInput("graph6 length mismatch: expected " + std::to_string(1 + bytes) + " bytes, got " +
                       std::to_string(line.size()));
  }

  Graph g(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int c = static_cast<unsigned char>(line[1 + k / 6]);
      if (c < 63 || c > 126) throw InvalidInput("bad graph6 data byte");
      if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  if (bits % 6 != 0) {
    const int c = static_cast<unsigned char>(line.back());
    if (c < 63 || c > 126) throw InvalidInput("bad graph6 data byte");
    const int pad = static_cast<int>(6 - bits % 6);
    if (((c - 63) & ((1 << pad) - 1)) != 0) throw InvalidInput("non-zero graph6 padding");
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6) throw SizeLimit("graph6 short form needs n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    long x;
    while (fields >> x) values.push_back(x);
    if (!fields.eof()) throw InvalidInput("edge list line " + std::to_string(line_no) + ": not an integer");
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 1) throw InvalidInput("edge list must start with the vertex count");
      if (values[0] < 0 || values[0] > kMaxVertices) throw SizeLimit("edge list vertex count outside 0..64");
      n = static_cast<int>(values[0]);
      continue;
    }
    if (values.size() != 2) throw InvalidInput("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    if (values[0] < 0 || values[0] >= n || values[1] < 0 || values[1] >= n) {
      throw InvalidInput("edge list line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
  }
  if (n < 0) throw InvalidInput("empty edge list");
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

}  // namespace bei
