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

#include "lavc/bench.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lavc/dimacs.h"

namespace lavc {
namespace {

constexpr std::array<BenchAlgorithm, 5> kAllAlgorithms = {
    BenchAlgorithm::kDla, BenchAlgorithm::kBinary, BenchAlgorithm::kGreedy,
    BenchAlgorithm::kTwoApprox, BenchAlgorithm::kExact};

struct JobOutcome {
  CoverSet cover;
  std::size_t first_best_iteration = 0;
  std::size_t iterations = 0;
  std::optional<StopReason> stop_reason;
  std::vector<TracePoint> trace;
  double seconds = 0.0;
  std::string error;
};

JobOutcome run_job(const Graph& g, const BenchOptions& options,
                   std::uint64_t seed) {
  JobOutcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (options.algorithm) {
      case BenchAlgorithm::kDla:
      case BenchAlgorithm::kBinary: {
        RunConfig config = options.config;
        config.seed = seed;
        config.algorithm = options.algorithm == BenchAlgorithm::kDla
                               ? Algorithm::kDlaWalk
                               : Algorithm::kBinaryAction;
        RunResult result = solve(g, config);
        out.cover = std::move(result.best_cover);
        out.first_best_iteration = result.first_best_iteration;
        out.iterations = result.records.size();
        out.stop_reason = result.stop_reason;
        out.trace.reserve(result.records.size());
        for (const auto& r : result.records) {
          out.trace.push_back({r.iteration, r.best_size, r.mean_entropy});
        }
        break;
      }
      case BenchAlgorithm::kGreedy:
        out.cover = greedy_max_degree(g);
        break;
      case BenchAlgorithm::kTwoApprox: {
        Rng rng(seed);
        out.cover = two_approx_random_matching(g, rng);
        break;
      }
      case BenchAlgorithm::kExact:
        out.cover = exact_min_cover(g, options.exact_limit);
        break;
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return out;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote in CSV line");
  return fields;
}

template <typename T>
T parse_field(const std::string& field, std::size_t line) {
  std::istringstream in(field);
  in.imbue(std::locale::classic());
  T value{};
  if (!(in >> value) || !(in >> std::ws).eof()) {
    throw std::runtime_error("CSV line " + std::to_string(line) +
                             ": malformed value '" + field + "'");
  }
  return value;
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

}  // namespace

std::string_view to_string(BenchAlgorithm algorithm) {
  switch (algorithm) {
    case BenchAlgorithm::kDla:
      return "dla";
    case BenchAlgorithm::kBinary:
      return "binary";
    case BenchAlgorithm::kGreedy:
      return "greedy";
    case BenchAlgorithm::kTwoApprox:
      return "two-approx";
    case BenchAlgorithm::kExact:
      return "exact";
  }
  return "unknown";
}

BenchAlgorithm parse_bench_algorithm(std::string_view label) {
  for (const auto algorithm : kAllAlgorithms) {
    if (to_string(algorithm) == label) return algorithm;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(label) + "'");
}

bool is_learning(BenchAlgorithm algorithm) {
  return algorithm == BenchAlgorithm::kDla ||
         algorithm == BenchAlgorithm::kBinary;
}

BenchReport run_benchmark(std::span<const std::filesystem::path> instances,
                          const BenchOptions& options) {
  std::vector<NamedGraph> graphs;
  std::vector<InstanceError> parse_errors;
  std::vector<InstanceError> warnings;
  for (const auto& path : instances) {
    const std::string name = path.stem().string();
    try {
      DimacsGraph parsed = read_dimacs_file(path);
      for (auto& w : parsed.warnings) warnings.push_back({name, std::move(w)});
      graphs.push_back({name, std::move(parsed.graph)});
    } catch (const std::exception& e) {
      parse_errors.push_back({name, e.what()});
    }
  }
  BenchReport report = run_benchmark(graphs, options);
  report.errors.insert(report.errors.begin(), parse_errors.begin(),
                       parse_errors.end());
  report.warnings = std::move(warnings);
  return report;
}

BenchReport run_benchmark(std::span<const NamedGraph> instances,
                          const BenchOptions& options) {
  if (options.seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  const std::size_t total = instances.size() * options.seeds;
  std::vector<JobOutcome> outcomes(total);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t job = next++; job < total; job = next++) {
      const NamedGraph& instance = instances[job / options.seeds];
      const std::uint64_t seed = options.config.seed + job % options.seeds;
      outcomes[job] = run_job(instance.graph, options, seed);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(total, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  BenchReport report;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const NamedGraph& instance = instances[i];
    BenchmarkRow row;
    row.instance = instance.name;
    row.n = instance.graph.num_vertices();
    row.algorithm = std::string(to_string(options.algorithm));

    std::size_t verified = 0;
    double cover_sum = 0.0;
    double lp_sum = 0.0;
    double seconds = 0.0;
    std::string failure;
    for (std::size_t s = 0; s < options.seeds; ++s) {
      JobOutcome& outcome = outcomes[i * options.seeds + s];
      const std::uint64_t seed = options.config.seed + s;
      seconds += outcome.seconds;
      RunSummary summary{instance.name, seed, outcome.cover.size(),
                         outcome.first_best_iteration, outcome.iterations,
                         outcome.stop_reason, false};
      if (!outcome.error.empty()) {
        failure = outcome.error;
      } else if (!outcome.cover.fits(instance.graph) ||
                 !is_vertex_cover(instance.graph, outcome.cover)) {
        failure = "seed " + std::to_string(seed) + " returned an invalid cover";
      } else {
        summary.verified = true;
        row.cn_best = verified == 0 ? outcome.cover.size()
                                    : std::min(row.cn_best, outcome.cover.size());
        ++verified;
        cover_sum += static_cast<double>(outcome.cover.size());
        lp_sum += static_cast<double>(outcome.first_best_iteration);
        if (is_learning(options.algorithm)) {
          report.traces.push_back(
              {instance.name, seed, std::move(outcome.trace)});
        }
      }
      report.runs.push_back(std::move(summary));
    }

    if (verified == 0) {
      report.errors.push_back({instance.name, failure});
      continue;
    }
    row.cn_mean = cover_sum / static_cast<double>(verified);
    row.lp_mean = lp_sum / static_cast<double>(verified);
    row.success_rate =
        static_cast<double>(verified) / static_cast<double>(options.seeds);
    row.wall_time_s = seconds / static_cast<double>(options.seeds);
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_csv(std::ostream& out, std::span<const BenchmarkRow> rows) {
  out << kRowHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.instance) << ',' << r.n << ',' << csv_field(r.algorithm)
        << ',' << r.cn_best << ',' << format_double(r.cn_mean) << ','
        << format_double(r.lp_mean) << ',' << format_double(r.success_rate)
        << ',' << format_double(r.wall_time_s) << '\n';
  }
}

void write_trace(std::ostream& out, std::span<const EntropyTrace> traces) {
  out << kTraceHeader << '\n';
  for (const auto& t : traces) {
    const std::string name = csv_field(t.instance);
    for (const auto& p : t.points) {
      out << name << ',' << t.seed << ',' << p.iteration << ','
          << p.best_cover_size << ',' << format_double(p.mean_entropy) << '\n';
    }
  }
}

void write_csv_file(const std::filesystem::path& path,
                    std::span<const BenchmarkRow> rows) {
  write_file(path, [&](std::ostream& out) { write_csv(out, rows); });
}

void write_trace_file(const std::filesystem::path& path,
                      std::span<const EntropyTrace> traces) {
  write_file(path, [&](std::ostream& out) { write_trace(out, traces); });
}

std::vector<BenchmarkRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kRowHeader) {
    throw std::runtime_error("CSV does not start with the expected header");
  }
  std::vector<BenchmarkRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 8) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) +
                               ": expected 8 fields, got " +
                               std::to_string(fields.size()));
    }
    BenchmarkRow row;
    row.instance = fields[0];
    row.n = parse_field<std::size_t>(fields[1], line_no);
    row.algorithm = fields[2];
    row.cn_best = parse_field<std::size_t>(fields[3], line_no);
    row.cn_mean = parse_field<double>(fields[4], line_no);
    row.lp_mean = parse_field<double>(fields[5], line_no);
    row.success_rate = parse_field<double>(fields[6], line_no);
    row.wall_time_s = parse_field<double>(fields[7], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::span<const PublishedResult> published_results() {
  static constexpr PublishedResult kRows[] = {
      {"Brock200", 200, "CVLA", 6, 100},
      {"Brock200", 200, "EWCC", 12, 11780},
      {"Brock200", 200, "EWLS", 12, 11947},
      {"C250", 250, "CVLA", 2, 100},
      {"C250", 250, "EWCC", 44, 1743},
      {"C250", 250, "EWLS", 44, 1541},
      {"C500", 500, "CVLA", 2, 100},
      {"C500", 500, "EWCC", 57, 99203},
      {"C500", 500, "EWLS", 57, 11598},
      {"Dsjc500", 500, "CVLA", 6, 100},
      {"Dsjc500", 500, "EWCC", 13, 2344},
      {"Dsjc500", 500, "EWLS", 13, 3179},
      {"Gen200p0944", 200, "CVLA", 2, 100},
      {"Gen200p0944", 200, "EWCC", 44, 1296},
      {"Gen200p0944", 200, "EWLS", 44, 2434},
      {"Gen200p0955", 200, "CVLA", 2, 100},
      {"Gen200p0955", 200, "EWCC", 55, 242},
      {"Gen200p0955", 200, "EWLS", 55, 299},
      {"Gen400p0955", 400, "CVLA", 2, 100},
      {"Gen400p0955", 400, "EWCC", 55, 29450},
      {"Gen400p0955", 400, "EWLS", 55, 41906},
      {"P_hat7002", 700, "CVLA", 13, 119},
      {"P_hat7002", 700, "EWCC", 44, 212},
      {"P_hat7002", 700, "EWLS", 44, 222},
  };
  return kRows;
}

}  // namespace lavc
