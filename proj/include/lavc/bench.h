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

#ifndef LAVC_BENCH_H_
#define LAVC_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lavc/baselines.h"
#include "lavc/dla_solver.h"
#include "lavc/graph.h"

namespace lavc {

enum class BenchAlgorithm { kDla, kBinary, kGreedy, kTwoApprox, kExact };

std::string_view to_string(BenchAlgorithm algorithm);
// Accepts the labels produced by to_string(). Throws std::invalid_argument.
BenchAlgorithm parse_bench_algorithm(std::string_view label);
bool is_learning(BenchAlgorithm algorithm);

struct BenchOptions {
  // Learning parameters; `config.seed` is the base seed and
  // `config.algorithm` is ignored in favour of `algorithm`.
  RunConfig config;
  BenchAlgorithm algorithm = BenchAlgorithm::kDla;
  std::size_t seeds = 10;
  std::size_t threads = 1;
  std::size_t exact_limit = kDefaultExactLimit;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// One row per instance, aggregated over seeds.
struct BenchmarkRow {
  std::string instance;
  std::size_t n = 0;
  std::string algorithm;
  std::size_t cn_best = 0;
  double cn_mean = 0.0;
  double lp_mean = 0.0;
  double success_rate = 0.0;
  double wall_time_s = 0.0;
};

struct TracePoint {
  std::size_t iteration = 0;
  std::size_t best_cover_size = 0;
  double mean_entropy = 0.0;
};

struct EntropyTrace {
  std::string instance;
  std::uint64_t seed = 0;
  std::vector<TracePoint> points;
};

// A single (instance, seed) run as it went into the aggregate.
struct RunSummary {
  std::string instance;
  std::uint64_t seed = 0;
  std::size_t cover_size = 0;
  std::size_t first_best_iteration = 0;
  std::size_t iterations = 0;
  std::optional<StopReason> stop_reason;  // learning algorithms only
  bool verified = false;
};

struct InstanceError {
  std::string instance;
  std::string message;
};

struct BenchReport {
  std::vector<BenchmarkRow> rows;
  std::vector<EntropyTrace> traces;
  std::vector<RunSummary> runs;
  std::vector<InstanceError> errors;
  // Non-fatal input notes, e.g. DIMACS edge-count mismatches.
  std::vector<InstanceError> warnings;
};

// Runs the chosen algorithm with seeds base..base+seeds-1 on every
// instance. Every cover is checked with is_vertex_cover before it is
// counted; an instance whose file does not parse, or on which no run
// produced a verified cover, yields an InstanceError instead of a row.
// Output order follows input order whatever the thread count.
BenchReport run_benchmark(std::span<const std::filesystem::path> instances,
                          const BenchOptions& options);
BenchReport run_benchmark(std::span<const NamedGraph> instances,
                          const BenchOptions& options);

inline constexpr std::string_view kRowHeader =
    "instance,n,algorithm,Cn_best,Cn_mean,Lp_mean,success_rate,wall_time_s";
inline constexpr std::string_view kTraceHeader =
    "instance,seed,iteration,best_cover_size,mean_entropy";

void write_csv(std::ostream& out, std::span<const BenchmarkRow> rows);
void write_trace(std::ostream& out, std::span<const EntropyTrace> traces);
// Throws std::runtime_error naming the path on I/O failure.
void write_csv_file(const std::filesystem::path& path,
                    std::span<const BenchmarkRow> rows);
void write_trace_file(const std::filesystem::path& path,
                      std::span<const EntropyTrace> traces);

// Inverse of write_csv. Throws std::runtime_error on a malformed table.
std::vector<BenchmarkRow> read_csv(std::istream& in);

// Cover sizes (Cn) and iterations-to-answer (Lp) published for this method
// and two edge-weighting local searches on DIMACS instances. Kept as a
// layout reference for the rows above; the small Cn values are not
// reproducible and are not targets.
struct PublishedResult {
  std::string_view instance;
  std::size_t n;
  std::string_view algorithm;
  std::size_t cn;
  std::size_t lp;
};
std::span<const PublishedResult> published_results();

}  // namespace lavc

#endif  // LAVC_BENCH_H_
