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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lavc/automaton.h"
#include "lavc/baselines.h"
#include "lavc/bench.h"
#include "lavc/dimacs.h"
#include "lavc/dla_solver.h"
#include "lavc/graph.h"
#include "test_graphs.h"

namespace {

using namespace lavc;
using lavc::testing::enumerate_min_cover_size;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

struct OracleInstance {
  Graph graph;
  std::size_t optimum;
};

// 200 Erdos-Renyi graphs, n in [4,12], p in {0.2, 0.5, 0.8}, fixed seed.
std::vector<Graph> oracle_graphs() {
  const double densities[] = {0.2, 0.5, 0.8};
  Rng rng(20240601);
  std::vector<Graph> out;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4 + i % 9;
    out.push_back(lavc::testing::erdos_renyi(n, densities[(i / 9) % 3], rng));
  }
  return out;
}

std::vector<OracleInstance> g_oracle;

Verdict oracle_equivalence() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (const Graph& g : oracle_graphs()) {
    const std::size_t optimum = enumerate_min_cover_size(g);
    const CoverSet exact = exact_min_cover(g);
    if (exact.size() != optimum || !is_vertex_cover(g, exact)) ++mismatches;
    g_oracle.push_back({g, optimum});
  }
  const double elapsed = seconds_since(start);
  v.require(mismatches == 0, fmt("%.0f mismatches", mismatches));
  v.require(elapsed < 60.0, fmt("took %.2f s", elapsed));
  if (v.pass) v.detail = fmt("200/200 instances agree, %.2f s", elapsed);
  return v;
}

Verdict validity_fuzzing() {
  Verdict v;
  Rng graphs(777);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  std::uniform_real_distribution<double> density(0.05, 0.9);
  std::size_t checked = 0;
  try {
    for (int trial = 0; trial < 1000; ++trial) {
      const Graph g = lavc::testing::erdos_renyi(size(graphs), density(graphs), graphs);
      RunConfig config;
      config.seed = trial;
      Rng rng(trial);
      const CoverSet covers[] = {
          solve(g, config).best_cover,
          solve_binary(g, config).best_cover,
          greedy_max_degree(g),
          two_approx_random_matching(g, rng),
          exact_min_cover(g),
      };
      for (const CoverSet& c : covers) {
        ++checked;
        v.require(is_vertex_cover(g, c), fmt("invalid cover on trial %.0f", trial));
      }
    }
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  if (v.pass) v.detail = fmt("%.0f covers valid, no exceptions", checked);
  return v;
}

Verdict approximation_bound() {
  Verdict v;
  std::size_t runs = 0;
  for (const auto& [g, optimum] : g_oracle) {
    v.require(greedy_max_degree(g).size() >= optimum, "greedy below optimum");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      const std::size_t size = two_approx_random_matching(g, rng).size();
      v.require(size <= 2 * optimum, fmt("two-approx %.0f > 2 x %.0f", size, optimum));
      ++runs;
    }
  }
  if (v.pass) v.detail = fmt("%.0f two-approx runs within 2x, greedy >= optimum", runs);
  return v;
}

Verdict update_rule_exactness() {
  Verdict v;
  double worst = 0.0;
  for (const std::size_t r : {2u, 3u, 5u, 10u}) {
    for (const double rate : {0.1, 0.3, 0.7}) {
      const std::vector<EdgeId> labels(r, 0);
      Automaton rewarded = Automaton::uniform(labels, ReinforcementScheme::reward_inaction(rate));
      Automaton penalized = Automaton::uniform(labels, ReinforcementScheme::reward_penalty(rate));
      for (int k = 1; k <= 50; ++k) {
        rewarded.reward(0);
        penalized.penalize(0);
        const double reward_i = 1.0 - std::pow(1.0 - rate, k) * (1.0 - 1.0 / r);
        const double penalty_i = std::pow(1.0 - rate, k) / r;
        const double rest_r = (1.0 - reward_i) / (r - 1);
        const double rest_p = (1.0 - penalty_i) / (r - 1);
        worst = std::max({worst, std::abs(rewarded.probability(0) - reward_i),
                          std::abs(penalized.probability(0) - penalty_i)});
        for (std::size_t j = 1; j < r; ++j) {
          worst = std::max({worst, std::abs(rewarded.probability(j) - rest_r),
                            std::abs(penalized.probability(j) - rest_p)});
        }
      }
    }
  }
  v.require(worst <= 1e-12, fmt("closed-form error %.3g", worst));

  Rng rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Automaton aut = Automaton::uniform({0, 1, 2, 3, 4, 5, 6},
                                     ReinforcementScheme::reward_epsilon_penalty(0.4, 0.1));
  double drift = 0.0;
  for (int step = 0; step < 100000; ++step) {
    const std::size_t i = aut.select_action(rng);
    if (unit(rng) < 0.5) {
      aut.reward(i);
    } else {
      aut.penalize(i);
    }
    const auto p = aut.probabilities();
    drift = std::max(drift, std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0));
  }
  v.require(drift <= 1e-9, fmt("sum drift %.3g", drift));
  if (v.pass) v.detail = fmt("max closed-form error %.2g, max drift %.2g", worst, drift);
  return v;
}

Verdict entropy_law() {
  Verdict v;
  const auto scheme = ReinforcementScheme::reward_inaction(0.3);
  for (std::size_t r = 2; r <= 32; ++r) {
    const auto uniform = Automaton::uniform(std::vector<EdgeId>(r, 0), scheme);
    const double h = uniform.normalized_entropy();
    v.require(h == 1.0, fmt("uniform entropy %.17g for r=%.0f", h, r));
    std::vector<double> degenerate(r, 0.0);
    degenerate[r / 2] = 1.0;
    v.require(Automaton(degenerate, scheme).normalized_entropy() == 0.0,
              "degenerate entropy not 0");
  }
  // Strict while the rewarded probability can still move in double precision;
  // once the increment rounds away the entropy may only stay flat.
  Automaton aut = Automaton::uniform({0, 1, 2, 3}, scheme);
  double previous = aut.normalized_entropy();
  int steps = 0;
  for (int k = 0; k < 500 && previous > 0.0; ++k) {
    const double before = aut.probability(1);
    aut.reward(1);
    const double h = aut.normalized_entropy();
    if (aut.probability(1) > before) {
      v.require(h < previous, fmt("entropy did not decrease at step %.0f", k));
      ++steps;
    } else {
      v.require(h <= previous, fmt("entropy increased at step %.0f", k));
    }
    previous = h;
  }
  if (v.pass) v.detail = fmt("uniform=1, degenerate=0, %.0f strictly decreasing steps", steps);
  return v;
}

Verdict solver_convergence() {
  Verdict v;
  const auto start = Clock::now();
  struct Toy {
    const char* name;
    Graph graph;
    std::size_t optimum;
  };
  const Toy toys[] = {{"K1,10", lavc::testing::star_graph(10), 1},
                      {"P7", lavc::testing::path_graph(7), 3},
                      {"C7", lavc::testing::cycle_graph(7), 4}};
  std::string summary;
  for (const Toy& toy : toys) {
    v.require(enumerate_min_cover_size(toy.graph) == toy.optimum, "oracle disagrees");
    int optimal = 0;
    int converged = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      RunConfig config;
      config.seed = seed;
      const RunResult r = solve(toy.graph, config);
      v.require(is_vertex_cover(toy.graph, r.best_cover), "invalid cover");
      optimal += r.cover_size == toy.optimum;
      converged += r.stop_reason == StopReason::kEntropyConverged;
    }
    v.require(optimal >= 19, std::string(toy.name) + fmt(": optimum in %.0f/20", optimal));
    v.require(converged >= 16, std::string(toy.name) + fmt(": converged in %.0f/20", converged));
    summary += std::string(toy.name) + fmt(" %.0f/%.0f ", optimal, converged);
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 30.0, fmt("took %.2f s", elapsed));
  if (v.pass) v.detail = summary + "(optimal/converged of 20), " + fmt("%.2f s", elapsed);
  return v;
}

Verdict la_quality() {
  Verdict v;
  std::size_t optimal = 0;
  std::size_t worse_than_greedy = 0;
  std::uint64_t seed = 1;
  for (const auto& [g, optimum] : g_oracle) {
    RunConfig config;
    config.seed = seed++;
    const RunResult r = solve(g, config);
    v.require(r.cover_size >= optimum, "cover below optimum");
    optimal += r.cover_size == optimum;
    worse_than_greedy += r.cover_size > greedy_max_degree(g).size();
  }
  const double total = static_cast<double>(g_oracle.size());
  v.require(optimal >= 0.8 * total, fmt("optimal on %.0f/%.0f", optimal, total));
  v.require(worse_than_greedy <= 0.2 * total,
            fmt("worse than greedy on %.0f/%.0f", worse_than_greedy, total));
  if (v.pass) {
    v.detail = fmt("optimal %.0f/%.0f, worse than greedy %.0f", optimal, total,
                   worse_than_greedy);
  }
  return v;
}

const std::string kDataDir = LAVC_TEST_DATA_DIR;

Verdict protocol_reproduction() {
  Verdict v;
  const std::vector<std::filesystem::path> files{kDataDir + "/myciel3.col",
                                                 kDataDir + "/queen5_5.col"};
  const BenchOptions defaults;
  v.require(defaults.seeds == 10, "default seed count is not 10");
  v.require(defaults.config.max_iterations == 1000, "default cap is not 1000");
  v.require(defaults.config.scheme.kind() == SchemeKind::kRewardInaction &&
                defaults.config.scheme.reward_rate() == 0.3,
            "default scheme is not L_R-I with a=0.3");

  std::string csv[2];
  BenchReport report;
  for (int pass = 0; pass < 2; ++pass) {
    report = run_benchmark(files, defaults);
    std::ostringstream out;
    write_csv(out, report.rows);
    csv[pass] = std::regex_replace(out.str(), std::regex(",[^,\n]*\n"), ",*\n");
  }
  v.require(csv[0] == csv[1], "CSV differs between identical runs");
  v.require(report.errors.empty(), "instance errors");
  v.require(report.rows.size() == files.size(), "missing rows");
  v.require(csv[0].rfind(std::string(kRowHeader.substr(0, kRowHeader.rfind(','))), 0) == 0,
            "unexpected header");
  v.require(report.runs.size() == 10 * files.size(), "not 10 runs per instance");
  v.require(report.traces.size() == 10 * files.size(), "not 10 traces per instance");
  std::size_t capped = 0;
  for (const RunSummary& run : report.runs) {
    v.require(run.verified, "unverified cover");
    v.require(run.stop_reason.has_value(), "missing stop reason");
    if (run.stop_reason == StopReason::kIterationCap) {
      v.require(run.iterations == 1000, "capped run did not do 1000 iterations");
      ++capped;
    } else {
      v.require(run.iterations < 1000, "converged run exceeded the cap");
    }
  }
  for (const EntropyTrace& t : report.traces) {
    for (std::size_t i = 0; i < t.points.size(); ++i) {
      v.require(t.points[i].iteration == i + 1, "trace iterations not consecutive");
      v.require(t.points[i].mean_entropy >= 0.0 && t.points[i].mean_entropy <= 1.0,
                "trace entropy outside [0,1]");
    }
  }
  if (v.pass) {
    v.detail = fmt("%.0f instances x 10 seeds, %.0f runs hit the 1000 cap, CSV deterministic",
                   files.size(), capped);
  }
  return v;
}

Verdict dimacs_ingestion() {
  Verdict v;
  using EdgeSet = std::set<std::pair<VertexId, VertexId>>;
  const auto edge_set = [](const Graph& g) {
    EdgeSet out;
    for (const Edge& e : g.edges()) out.insert(std::minmax(e.u, e.v));
    return out;
  };
  try {
    const DimacsGraph queen = read_dimacs_file(kDataDir + "/queen5_5.col");
    v.require(queen.graph.num_vertices() == 25, "queen5_5 vertex count");
    v.require(queen.graph.num_edges() == 160 && queen.duplicate_edges == 160,
              "queen5_5 duplicates not collapsed");
    v.require(queen.warnings.size() == 1, "queen5_5 duplicate warning missing");
    v.require(exact_min_cover(queen.graph).size() == 20, "queen5_5 optimum");

    const DimacsGraph myciel = read_dimacs_file(kDataDir + "/myciel3.col");
    v.require(myciel.graph.num_vertices() == 11 && myciel.graph.num_edges() == 20,
              "myciel3 shape");
    v.require(exact_min_cover(myciel.graph).size() == enumerate_min_cover_size(myciel.graph),
              "myciel3 optimum");

    for (const DimacsGraph* parsed : {&queen, &myciel}) {
      std::ostringstream out;
      write_dimacs(out, parsed->graph);
      const DimacsGraph again = parse_dimacs(out.str());
      v.require(again.graph.num_vertices() == parsed->graph.num_vertices() &&
                    edge_set(again.graph) == edge_set(parsed->graph),
                "round trip changed the graph");
    }
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  if (v.pass) v.detail = "queen5_5 (160 duplicates collapsed) and myciel3 parse and round-trip";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 validity fuzzing", validity_fuzzing},
      {"3 approximation bound", approximation_bound},
      {"4 update-rule exactness", update_rule_exactness},
      {"5 entropy law", entropy_law},
      {"6 solver convergence", solver_convergence},
      {"7 LA quality on random instances", la_quality},
      {"8 protocol reproduction", protocol_reproduction},
      {"9 DIMACS ingestion", dimacs_ingestion},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const Verdict verdict = check();
    std::printf("[%s] criterion %s: %s\n", verdict.pass ? "PASS" : "FAIL", name,
                verdict.detail.c_str());
    failures += verdict.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
