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

#ifndef LAVC_DIMACS_H_
#define LAVC_DIMACS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lavc/graph.h"

namespace lavc {

// A DIMACS syntax or range violation. `line()` is 1-based; 0 means the
// problem concerns the input as a whole (e.g. no `p` line at all).
class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, std::string detail, std::string source = {});
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

struct DimacsGraph {
  Graph graph;
  std::size_t declared_edges = 0;
  // Edge lines dropped because the pair had already been seen.
  std::size_t duplicate_edges = 0;
  std::vector<std::string> warnings;
};

// Reads the DIMACS edge format:
//
//   c <free text>          comment, ignored
//   p edge <n> <m>         problem line, exactly once (`p col` accepted)
//   e <u> <v>              edge with 1-based endpoints
//
// Ids are shifted to 0-based. A declared edge count that differs from the
// number of distinct edges is reported in `warnings`, not raised.
DimacsGraph parse_dimacs(std::istream& in);
DimacsGraph parse_dimacs(std::string_view text);
// Throws std::runtime_error naming the path if the file cannot be opened.
DimacsGraph read_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {});

}  // namespace lavc

#endif  // LAVC_DIMACS_H_
