// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpnaqc/ahs.hpp"
#include "gpnaqc/annealer.hpp"
#include "gpnaqc/merger.hpp"
#include "gpnaqc/qubo.hpp"

namespace gpnaqc {

// A stage of run_pipeline failed; the message names the stage.
struct PipelineError : std::runtime_error {
  explicit PipelineError(const std::string& what) : std::runtime_error(what) {}
};

// Knobs for the full solve.  Zeros mean "auto": box_side -> 2.5r, theta ->
// 0.1 * max|J| (1 if J == 0), time_step -> total_time/400, schedule
// delta_local_final -> per-register (see resolve_schedule), sa.t_start ->
// 2 * max|Q|.
struct PipelineConfig {
  double blockade_radius = 6.0;  // micrometers
  double box_side = 0.0;
  double theta = 0.0;
  DriveSchedule schedule = default_schedule();
  double time_step = 0.0;
  int shots = 100;
  int atom_cap = kDefaultAtomCap;
  AnnealConfig sa;  // seed field ignored; per-run seeds are derived
  int repeats = 5;
  std::uint64_t global_seed = 1;
  double gamma = 0.5;    // portfolio risk aversion
  double density = 0.3;  // random-instance off-diagonal density
};

// Throws std::invalid_argument on out-of-range fields (after resolving the
// auto sentinels, box_side must exceed 2 * blockade_radius).
void validate_config(const PipelineConfig& cfg);

// TOML-style "key = value" text; '#' comments and blank lines are skipped;
// unknown keys are an error.  See README for the key list.
PipelineConfig parse_config(std::istream& in);
PipelineConfig parse_config_file(const std::string& path);

inline constexpr const char* kMethodGp = "gp_naqc";
inline constexpr const char* kMethodSa = "sim_annealing";

// embed -> partition -> per-box solve -> merge -> finalize.  Deterministic
// given (q, cfg, seed); stage failures rethrow as PipelineError naming the
// stage.
GlobalSolution run_pipeline(const QuboMatrix& q, const PipelineConfig& cfg,
                            std::uint64_t seed);

// One Table-style summary line per (instance, method).
struct BenchmarkRow {
  std::string instance_name;
  std::string method;
  double mean_energy = 0.0;
  double std_energy = 0.0;  // sample std dev; 0.0 when repeats == 1
  int repeats = 0;
  double wall_time_s = 0.0;
  std::optional<double> optimum;  // brute force, filled when n <= 16
};

// One solver execution, re-scorable from the stored assignment.
struct RunRecord {
  std::string instance_name;
  std::string method;
  int rep = 0;
  std::uint64_t seed = 0;
  double energy = 0.0;
  std::vector<int> assignment;
};

struct BenchmarkResult {
  std::vector<BenchmarkRow> rows;
  std::vector<RunRecord> runs;
};

using NamedInstance = std::pair<std::string, QuboMatrix>;

// `repeats` seeded runs of both methods per instance; rows in instance
// order with gp_naqc before sim_annealing.  A failing instance is reported
// on stderr and skipped.
BenchmarkResult run_benchmark(const std::vector<NamedInstance>& instances,
                              const PipelineConfig& cfg);

enum class SuiteMode { kPortfolio, kRandom };

// Portfolio mode slices the first k tickers (column order) of the price
// CSV per size and builds Markowitz QUBOs; random mode draws
// random_instance per size.  Names: Q<k> / R<k> (duplicates get _2, _3...).
std::vector<NamedInstance> instance_suite(SuiteMode mode,
                                          const std::vector<int>& sizes,
                                          const std::string& source,
                                          std::uint64_t seed,
                                          const PipelineConfig& cfg);

// results.csv + runs.csv + per-run solution_<name>_<method>_<rep>.txt
// bitstrings are byte-deterministic for fixed inputs; wall times go to a
// separate timings.csv so the deterministic files stay comparable.
void write_benchmark_outputs(const BenchmarkResult& result,
                             const std::string& out_dir);

}  // namespace gpnaqc
