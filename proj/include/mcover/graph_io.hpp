// Copyright 2026 The mcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text formats: graph6 (bit-exact, orders 0..62), a plain edge list for
// hand-written fixtures, and Graphviz DOT export.

#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcover/errors.hpp"
#include "mcover/graph.hpp"

namespace mcover {

inline constexpr std::size_t kMaxGraph6Order = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Encodes the upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
/// six bits per byte, most significant first, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw PreconditionError("graph6 output supports orders up to 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(Edge(u, v)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

/// Decodes one graph6 code, optionally preceded by ">>graph6<<". A single
/// trailing "\n" or "\r\n" is tolerated. Errors name the byte offset.
inline Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  std::string_view code = text.substr(std::min(base, text.size()));

  using Unit = ParseError::Unit;
  if (code.empty()) throw ParseError("graph6: empty input", base, Unit::kByte);
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto c = static_cast<unsigned char>(code[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside the range 63..126",
                       base + i, Unit::kByte);
    }
  }
  const auto head = static_cast<unsigned char>(code[0]);
  if (head == 126) {
    throw ParseError("graph6: orders above 62 are not supported", base, Unit::kByte);
  }
  const std::size_t n = head - 63;
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (code.size() < expected) {
    throw ParseError("graph6: truncated, order " + std::to_string(n) + " needs " +
                         std::to_string(expected) + " bytes",
                     base + code.size(), Unit::kByte);
  }
  if (code.size() > expected) {
    throw ParseError("graph6: trailing data after the adjacency bits", base + expected,
                     Unit::kByte);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(code[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(code.back()) - 63;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) {
      throw ParseError("graph6: nonzero padding bits", base + code.size() - 1, Unit::kByte);
    }
  }
  return Graph(n, std::move(edges));
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::size_t parse_index(std::string_view field, std::size_t line) {
  std::size_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("edge list: '" + std::string(field) + "' is not a nonnegative integer", line,
                     ParseError::Unit::kLine);
  }
  return value;
}

}  // namespace detail

/// Parses "n" on the first non-blank line followed by one "u v" pair per
/// line. Blank lines are ignored. Errors name the 1-based line.
inline Graph parse_edge_list(std::string_view text) {
  using Unit = ParseError::Unit;
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (!order) {
      if (fields.size() != 1) throw ParseError("edge list: expected the vertex count", line_no, Unit::kLine);
      order = detail::parse_index(fields[0], line_no);
      continue;
    }
    if (fields.size() != 2) throw ParseError("edge list: expected 'u v'", line_no, Unit::kLine);
    const std::size_t a = detail::parse_index(fields[0], line_no);
    const std::size_t b = detail::parse_index(fields[1], line_no);
    if (a == b) throw ParseError("edge list: loop at vertex " + std::to_string(a), line_no, Unit::kLine);
    if (a >= *order || b >= *order) {
      throw ParseError("edge list: vertex index out of range for n = " + std::to_string(*order),
                       line_no, Unit::kLine);
    }
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      throw ParseError("edge list: duplicate edge " + e.to_string(), line_no, Unit::kLine);
    }
    edges.push_back(e);
  }
  if (!order) throw ParseError("edge list: missing vertex count", line_no, Unit::kLine);
  return Graph(*order, std::move(edges));
}

inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u()) + " " + std::to_string(e.v()) + "\n";
  return out;
}

/// Undirected DOT document; edges in `highlight` get a distinct style.
inline std::string to_dot(const Graph& g, std::span<const Edge> highlight = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex w = 0; w < g.order(); ++w) out << "  " << w << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u() << " -- " << e.v();
    if (std::find(highlight.begin(), highlight.end(), e) != highlight.end()) {
      out << " [color=red, style=dashed, penwidth=2]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mcover
