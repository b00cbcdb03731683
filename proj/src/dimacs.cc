// Copyright 2026 The lavc Authors
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

#include "lavc/dimacs.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace lavc {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::optional<std::uint64_t> to_count(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::uint64_t require_count(std::string_view token, std::size_t line,
                            const char* what) {
  const auto value = to_count(token);
  if (!value) {
    throw DimacsError(line, std::string("malformed ") + what + " '" +
                                std::string(token) + "'");
  }
  return *value;
}

}  // namespace

DimacsError::DimacsError(std::size_t line, std::string detail,
                         std::string source)
    : std::runtime_error(
          (source.empty() ? std::string() : source + ": ") +
          (line == 0 ? detail : "line " + std::to_string(line) + ": " + detail)),
      line_(line),
      detail_(std::move(detail)) {}

DimacsGraph parse_dimacs(std::istream& in) {
  std::optional<std::uint64_t> num_vertices;
  std::uint64_t declared_edges = 0;
  std::vector<VertexPair> pairs;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (num_vertices) throw DimacsError(line_no, "duplicate problem line");
      if (tokens.size() != 4) {
        throw DimacsError(line_no, "problem line must read 'p edge <n> <m>'");
      }
      if (tokens[1] != "edge" && tokens[1] != "col") {
        throw DimacsError(line_no, "unsupported problem format '" +
                                       std::string(tokens[1]) + "'");
      }
      const auto n = require_count(tokens[2], line_no, "vertex count");
      if (n > std::numeric_limits<VertexId>::max()) {
        throw DimacsError(line_no, "vertex count too large");
      }
      num_vertices = n;
      declared_edges = require_count(tokens[3], line_no, "edge count");
      pairs.reserve(static_cast<std::size_t>(
          std::min<std::uint64_t>(declared_edges, 1u << 24)));
      continue;
    }

    if (tokens[0] == "e") {
      if (!num_vertices) {
        throw DimacsError(line_no, "edge line before problem line");
      }
      if (tokens.size() != 3) {
        throw DimacsError(line_no, "edge line must read 'e <u> <v>'");
      }
      const auto u = require_count(tokens[1], line_no, "endpoint");
      const auto v = require_count(tokens[2], line_no, "endpoint");
      for (const auto x : {u, v}) {
        if (x < 1 || x > *num_vertices) {
          throw DimacsError(line_no, "endpoint " + std::to_string(x) +
                                         " out of range [1," +
                                         std::to_string(*num_vertices) + "]");
        }
      }
      if (u == v) {
        throw DimacsError(line_no,
                          "self-loop on vertex " + std::to_string(u));
      }
      pairs.emplace_back(static_cast<VertexId>(u - 1),
                         static_cast<VertexId>(v - 1));
      continue;
    }

    throw DimacsError(line_no,
                      "unknown line type '" + std::string(tokens[0]) + "'");
  }
  if (in.bad()) throw DimacsError(0, "read error");
  if (!num_vertices) throw DimacsError(0, "missing problem line");

  DimacsGraph result;
  result.graph = build_graph(static_cast<std::size_t>(*num_vertices), pairs);
  result.declared_edges = static_cast<std::size_t>(declared_edges);
  result.duplicate_edges = pairs.size() - result.graph.num_edges();
  if (result.declared_edges != result.graph.num_edges()) {
    std::ostringstream msg;
    msg << "problem line declares " << result.declared_edges
        << " edges but " << result.graph.num_edges() << " distinct edges were read";
    if (result.duplicate_edges > 0) {
      msg << " (" << result.duplicate_edges << " duplicates collapsed)";
    }
    result.warnings.push_back(msg.str());
  }
  return result;
}

DimacsGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

DimacsGraph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_dimacs(in);
  } catch (const DimacsError& e) {
    throw DimacsError(e.line(), e.detail(), path.string());
  }
}

void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
}

}  // namespace lavc
