#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sbvs/error.hpp"
#include "sbvs/graph.hpp"
#include "sbvs/separator.hpp"

// Text formats.
//
//   graph:      "p <n> <m>" then m lines "e <u> <v>"; 0-based ids, '#' starts a
//               comment line, blank lines are ignored. LF line endings.
//   partition:  "I: <ids>", "V1: <ids>", "V2: <ids>", ids ascending.

namespace sbvs {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               std::string(field) + "'");
  }
  return value;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank, non-comment lines with a trailing CR stripped.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline Graph parse_graph_lines(const std::vector<Line>& lines, std::size_t begin, std::size_t& end) {
  if (begin >= lines.size()) throw ParseError(0, "missing 'p <n> <m>' header");
  const auto header = split_fields(lines[begin].text);
  if (header.size() != 3 || header[0] != "p") {
    throw ParseError(lines[begin].number, "malformed header, expected 'p <n> <m>'");
  }
  const auto n = parse_count(header[1], lines[begin].number, "vertex count");
  const auto m = parse_count(header[2], lines[begin].number, "edge count");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t i = begin + 1;
  for (; i < lines.size() && edges.size() < m; ++i) {
    const auto fields = split_fields(lines[i].text);
    if (fields.size() != 3 || fields[0] != "e") {
      throw ParseError(lines[i].number, "malformed edge line, expected 'e <u> <v>'");
    }
    const auto u = parse_count(fields[1], lines[i].number, "edge endpoint");
    const auto v = parse_count(fields[2], lines[i].number, "edge endpoint");
    if (u >= n || v >= n) throw ParseError(lines[i].number, "edge endpoint out of range for n=" + std::to_string(n));
    if (u == v) throw ParseError(lines[i].number, "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() < m) {
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  end = i;
  return build_graph(n, edges);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::size_t end = 0;
  auto g = detail::parse_graph_lines(lines, 0, end);
  if (end != lines.size()) throw ParseError(lines[end].number, "unexpected content after the announced edges");
  return g;
}

/// Concatenated graphs, each starting with its own header.
inline std::vector<Graph> parse_graph_stream(std::string_view text) {
  const auto lines = detail::content_lines(text);
  std::vector<Graph> out;
  std::size_t at = 0;
  while (at < lines.size()) {
    std::size_t end = 0;
    out.push_back(detail::parse_graph_lines(lines, at, end));
    at = end;
  }
  return out;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Graphviz DOT. With a partition, separator vertices are red, V1 blue and V2 green.
inline std::string export_dot(const Graph& g, const SeparatorPartition* partition = nullptr) {
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (partition != nullptr) {
      if (partition->separator.contains(v)) {
        os << " [fillcolor=\"#e41a1c\", group=I]";
      } else if (partition->side1.contains(v)) {
        os << " [fillcolor=\"#377eb8\", group=V1]";
      } else if (partition->side2.contains(v)) {
        os << " [fillcolor=\"#4daf4a\", group=V2]";
      }
    }
    os << ";\n";
  }
  for (const auto& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string serialize_partition(const SeparatorPartition& p) {
  auto row = [](const char* label, const VertexSet& s) {
    std::string out = label;
    s.for_each([&](Vertex v) { out += " " + std::to_string(v); });
    return out + "\n";
  };
  return row("I:", p.separator) + row("V1:", p.side1) + row("V2:", p.side2);
}

/// Parses the three-line partition format over a universe of n vertices.
inline SeparatorPartition parse_partition(std::string_view text, std::size_t n) {
  const auto lines = detail::content_lines(text);
  SeparatorPartition p{VertexSet(n), VertexSet(n), VertexSet(n)};
  const char* labels[3] = {"I:", "V1:", "V2:"};
  VertexSet* targets[3] = {&p.separator, &p.side1, &p.side2};
  if (lines.size() != 3) {
    throw ParseError(lines.empty() ? 0 : lines.back().number, "partition needs exactly the lines I:, V1:, V2:");
  }
  for (int k = 0; k < 3; ++k) {
    const auto fields = detail::split_fields(lines[k].text);
    if (fields.empty() || fields[0] != labels[k]) {
      throw ParseError(lines[k].number, std::string("expected line starting with '") + labels[k] + "'");
    }
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const auto v = detail::parse_count(fields[f], lines[k].number, "vertex id");
      if (v >= n) throw ParseError(lines[k].number, "vertex id " + std::to_string(v) + " out of range");
      targets[k]->insert(static_cast<Vertex>(v));
    }
  }
  return p;
}

}  // namespace sbvs
