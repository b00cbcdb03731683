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

// Command-line front end: solve one DIMACS instance, or benchmark a batch.
//
//   lavc solve graph.col --algorithm dla --seed 7
//   lavc bench instances/ --seeds 10 --out rows.csv --trace traces.csv
//   lavc reference

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lavc/baselines.h"
#include "lavc/bench.h"
#include "lavc/dimacs.h"
#include "lavc/dla_solver.h"

namespace fs = std::filesystem;

namespace {

constexpr const char* kOutputDirEnv = "LAVC_OUTPUT_DIR";

struct LearningFlags {
  std::string scheme = "lri";
  double learning_rate = 0.3;
  std::optional<double> penalty_rate;
  std::size_t max_iterations = 1000;
  double entropy_threshold = 0.05;
  std::optional<std::size_t> cover_threshold;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    app->add_option("--scheme", scheme, "Reinforcement scheme")
        ->check(CLI::IsMember({"lri", "lrp", "lrep"}))
        ->capture_default_str();
    app->add_option("--learning-rate,-a", learning_rate, "Reward rate a")
        ->capture_default_str();
    app->add_option("--penalty-rate,-b", penalty_rate,
                    "Penalty rate b (lri: 0, lrp: a, lrep: a/10 if omitted)");
    app->add_option("--max-iterations", max_iterations)->capture_default_str();
    app->add_option("--entropy-threshold", entropy_threshold)
        ->capture_default_str();
    app->add_option("--cover-threshold", cover_threshold,
                    "Abandon candidates at this size (default: vertex count)");
    app->add_option("--seed", seed, "Seed (base seed for bench)")
        ->capture_default_str();
  }

  lavc::RunConfig config() const {
    using lavc::ReinforcementScheme;
    using lavc::SchemeKind;
    lavc::RunConfig c;
    if (scheme == "lri") {
      c.scheme = ReinforcementScheme(SchemeKind::kRewardInaction,
                                     learning_rate, penalty_rate.value_or(0.0));
    } else if (scheme == "lrp") {
      c.scheme = ReinforcementScheme(SchemeKind::kRewardPenalty, learning_rate,
                                     penalty_rate.value_or(learning_rate));
    } else {
      c.scheme = ReinforcementScheme(SchemeKind::kRewardEpsilonPenalty,
                                     learning_rate,
                                     penalty_rate.value_or(learning_rate / 10));
    }
    c.max_iterations = max_iterations;
    c.entropy_threshold = entropy_threshold;
    c.cover_threshold = cover_threshold;
    c.seed = seed;
    return c;
  }
};

fs::path resolve_output(const std::string& given, const char* fallback) {
  fs::path path = given.empty() ? fs::path(fallback) : fs::path(given);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      path = fs::path(dir) / path;
    }
  }
  return path;
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    const fs::path path(input);
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file()) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  return files;
}

int run_solve(const std::string& file, const std::string& algorithm_label,
              const LearningFlags& flags, const std::string& trace_out,
              std::size_t exact_limit) {
  const auto algorithm = lavc::parse_bench_algorithm(algorithm_label);
  lavc::DimacsGraph parsed = lavc::read_dimacs_file(file);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << '\n';
  const lavc::Graph& g = parsed.graph;

  lavc::RunConfig config = flags.config();
  config.validate(g);
  lavc::CoverSet cover;
  std::optional<lavc::RunResult> run;
  switch (algorithm) {
    case lavc::BenchAlgorithm::kDla:
    case lavc::BenchAlgorithm::kBinary:
      config.algorithm = algorithm == lavc::BenchAlgorithm::kDla
                             ? lavc::Algorithm::kDlaWalk
                             : lavc::Algorithm::kBinaryAction;
      run = lavc::solve(g, config);
      cover = run->best_cover;
      break;
    case lavc::BenchAlgorithm::kGreedy:
      cover = lavc::greedy_max_degree(g);
      break;
    case lavc::BenchAlgorithm::kTwoApprox: {
      lavc::Rng rng(config.seed);
      cover = lavc::two_approx_random_matching(g, rng);
      break;
    }
    case lavc::BenchAlgorithm::kExact:
      cover = lavc::exact_min_cover(g, exact_limit);
      break;
  }
  if (!lavc::is_vertex_cover(g, cover)) {
    std::cerr << "error: solver returned an invalid cover\n";
    return 1;
  }

  std::cout << "instance: " << fs::path(file).stem().string() << '\n'
            << "n: " << g.num_vertices() << '\n'
            << "m: " << g.num_edges() << '\n'
            << "algorithm: " << algorithm_label << '\n'
            << "Cn: " << cover.size() << '\n';
  if (run) {
    std::cout << "Lp: " << run->first_best_iteration << '\n'
              << "iterations: " << run->records.size() << '\n'
              << "stop: " << lavc::to_string(run->stop_reason) << '\n';
  }
  std::cout << "cover:";
  for (const auto v : cover) std::cout << ' ' << v + 1;
  std::cout << '\n';

  if (run && !trace_out.empty()) {
    lavc::EntropyTrace trace{fs::path(file).stem().string(), config.seed, {}};
    for (const auto& r : run->records) {
      trace.points.push_back({r.iteration, r.best_size, r.mean_entropy});
    }
    const auto path = resolve_output(trace_out, "trace.csv");
    lavc::write_trace_file(path, std::span(&trace, 1));
    std::cerr << "wrote " << path.string() << '\n';
  }
  return 0;
}

int run_bench(const std::vector<std::string>& inputs,
              const std::string& algorithm_label, const LearningFlags& flags,
              std::size_t seeds, std::size_t threads, std::size_t exact_limit,
              const std::string& rows_out, const std::string& trace_out) {
  lavc::BenchOptions options;
  options.config = flags.config();
  options.algorithm = lavc::parse_bench_algorithm(algorithm_label);
  options.seeds = seeds;
  options.threads = threads;
  options.exact_limit = exact_limit;

  const auto files = expand_inputs(inputs);
  const lavc::BenchReport report = lavc::run_benchmark(files, options);
  for (const auto& w : report.warnings) {
    std::cerr << "warning: " << w.instance << ": " << w.message << '\n';
  }
  for (const auto& e : report.errors) {
    std::cerr << "error: " << e.instance << ": " << e.message << '\n';
  }

  const auto rows_path = resolve_output(rows_out, "rows.csv");
  lavc::write_csv_file(rows_path, report.rows);
  std::cerr << "wrote " << rows_path.string() << " (" << report.rows.size()
            << " rows)\n";
  if (lavc::is_learning(options.algorithm)) {
    const auto trace_path = resolve_output(trace_out, "traces.csv");
    lavc::write_trace_file(trace_path, report.traces);
    std::cerr << "wrote " << trace_path.string() << '\n';
  }
  return report.errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum vertex cover with networks of learning automata"};
  app.require_subcommand(1);

  std::string algorithm = "dla";
  std::size_t exact_limit = lavc::kDefaultExactLimit;
  const auto algorithms =
      CLI::IsMember({"dla", "binary", "greedy", "two-approx", "exact"});

  LearningFlags solve_flags;
  std::string solve_file;
  std::string solve_trace;
  auto* solve = app.add_subcommand("solve", "Solve one DIMACS instance");
  solve->add_option("file", solve_file, "DIMACS edge file")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--algorithm", algorithm)->check(algorithms)->capture_default_str();
  solve->add_option("--trace", solve_trace, "Write the entropy trace here");
  solve->add_option("--exact-limit", exact_limit)->capture_default_str();
  solve_flags.attach(solve);

  LearningFlags bench_flags;
  std::vector<std::string> bench_inputs;
  std::size_t seeds = 10;
  std::size_t threads = 1;
  std::string rows_out;
  std::string trace_out;
  auto* bench = app.add_subcommand("bench", "Benchmark over many instances and seeds");
  bench->add_option("inputs", bench_inputs, "DIMACS files or directories")
      ->required();
  bench->add_option("--algorithm", algorithm)->check(algorithms)->capture_default_str();
  bench->add_option("--seeds", seeds)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--threads", threads)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--exact-limit", exact_limit)->capture_default_str();
  bench->add_option("--out", rows_out, "Row CSV (default rows.csv)");
  bench->add_option("--trace", trace_out, "Trace CSV (default traces.csv)");
  bench_flags.attach(bench);

  auto* reference = app.add_subcommand(
      "reference", "Print published Cn/Lp figures for comparison");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      return run_solve(solve_file, algorithm, solve_flags, solve_trace,
                       exact_limit);
    }
    if (*bench) {
      return run_bench(bench_inputs, algorithm, bench_flags, seeds, threads,
                       exact_limit, rows_out, trace_out);
    }
    if (*reference) {
      std::cout << "instance,n,algorithm,Cn,Lp\n";
      for (const auto& r : lavc::published_results()) {
        std::cout << r.instance << ',' << r.n << ',' << r.algorithm << ','
                  << r.cn << ',' << r.lp << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
