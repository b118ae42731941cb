#include "neutralize/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace neutralize {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line, const char* field) {
  Int value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw FormatError(line, std::string(field) + " '" + std::string(token) + "' out of range");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError(line, std::string(field) + " '" + std::string(token) + "' is not an integer");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t m = 0;
  std::vector<Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (n) throw FormatError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") {
        throw FormatError(line_no, "expected 'p sp <n> <m>'");
      }
      n = parse_int<std::size_t>(tokens[2], line_no, "vertex count");
      m = parse_int<std::size_t>(tokens[3], line_no, "edge count");
      edges.reserve(m);
    } else if (tokens[0] == "a") {
      if (!n) throw FormatError(line_no, "arc line before problem line");
      if (tokens.size() != 4) throw FormatError(line_no, "expected 'a <u> <v> <w>'");
      if (edges.size() == m) throw FormatError(line_no, "more arcs than declared");
      auto u = parse_int<long long>(tokens[1], line_no, "source");
      auto v = parse_int<long long>(tokens[2], line_no, "target");
      auto w = parse_int<Weight>(tokens[3], line_no, "weight");
      for (long long id : {u, v}) {
        if (id < 1 || static_cast<unsigned long long>(id) > *n) {
          throw RangeError("line " + std::to_string(line_no) + ": vertex " + std::to_string(id) +
                           " outside [1, " + std::to_string(*n) + "]");
        }
      }
      edges.push_back(Edge{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w});
    } else {
      throw FormatError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }

  if (!n) throw FormatError(line_no, "missing problem line");
  if (edges.size() != m) {
    throw FormatError(line_no, "declared " + std::to_string(m) + " arcs, found " +
                                   std::to_string(edges.size()));
  }
  return Graph(*n, edges);
}

Graph read_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "a " << g.src(e) + 1 << ' ' << g.dst(e) + 1 << ' ' << g.weight(e) << '\n';
  }
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_graph(out, g);
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace neutralize
