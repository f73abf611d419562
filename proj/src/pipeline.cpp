// SPDX-License-Identifier: Apache-2.0
#include "gpnaqc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <istream>
#include <sstream>

#include "gpnaqc/embedding.hpp"
#include "gpnaqc/errors.hpp"
#include "gpnaqc/partition.hpp"
#include "gpnaqc/portfolio.hpp"
#include "gpnaqc/rng.hpp"

namespace gpnaqc {
namespace {

// Context words for per-purpose seed streams (see rng.hpp).
constexpr std::uint64_t kSeedLayout = 1;
constexpr std::uint64_t kSeedBox = 2;

double resolved_box_side(const PipelineConfig& cfg) {
  return cfg.box_side > 0.0 ? cfg.box_side : 2.5 * cfg.blockade_radius;
}

double resolved_theta(const PipelineConfig& cfg, const QuboMatrix& q) {
  if (cfg.theta > 0.0) return cfg.theta;
  Eigen::MatrixXd j = q.matrix();
  j.diagonal().setZero();
  const double jmax = j.cwiseAbs().maxCoeff();
  return jmax > 0.0 ? 0.1 * jmax : 1.0;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw PipelineError(std::string("stage ") + name + ": " + e.what());
  }
}

}  // namespace

void validate_config(const PipelineConfig& cfg) {
  if (!(cfg.blockade_radius > 0.0))
    throw std::invalid_argument("config: blockade_radius must be > 0");
  if (!(resolved_box_side(cfg) > 2.0 * cfg.blockade_radius))
    throw std::invalid_argument(
        "config: box_side must exceed twice the blockade radius");
  if (cfg.theta < 0.0)
    throw std::invalid_argument("config: theta must be >= 0 (0 = auto)");
  if (cfg.shots < 1) throw std::invalid_argument("config: shots must be >= 1");
  if (cfg.atom_cap < 1)
    throw std::invalid_argument("config: atom_cap must be >= 1");
  if (cfg.repeats < 1)
    throw std::invalid_argument("config: repeats must be >= 1");
  if (cfg.time_step < 0.0)
    throw std::invalid_argument("config: time_step must be >= 0 (0 = auto)");
  if (!(cfg.gamma >= 0.0))
    throw std::invalid_argument("config: gamma must be >= 0");
  if (cfg.density < 0.0 || cfg.density > 1.0)
    throw std::invalid_argument("config: density must lie in [0, 1]");
  if (cfg.sa.sweeps < 0)
    throw std::invalid_argument("config: sa_sweeps must be >= 0");
  // Schedule fields other than the auto delta_local_final sentinel.
  DriveSchedule s = cfg.schedule;
  if (s.delta_local_final == 0.0) s.delta_local_final = 1.0;
  validate_schedule(s);
}

GlobalSolution run_pipeline(const QuboMatrix& q, const PipelineConfig& cfg,
                            std::uint64_t seed) {
  validate_config(cfg);
  const double r = cfg.blockade_radius;
  const double theta = resolved_theta(cfg, q);

  const auto embedded = stage("embed", [&] {
    return embed(q, r, theta, mix_seed(seed, {kSeedLayout}));
  });
  const UnitDiskGraph& g = embedded.first;

  const GridPartition part = stage("partition", [&] {
    return partition(g, resolved_box_side(cfg));
  });
  const std::vector<Subgraph> boxes = stage("partition", [&] {
    return extract_subgraphs_capped(g, part, cfg.atom_cap);
  });

  const InteractionModel model =
      InteractionModel::calibrated(cfg.schedule.omega_max, r);
  std::vector<SubgraphSolution> locals = stage("solve", [&] {
    std::vector<SubgraphSolution> out;
    out.reserve(boxes.size());
    for (std::size_t k = 0; k < boxes.size(); ++k)
      out.push_back(solve_subgraph(boxes[k], model, cfg.schedule, cfg.shots,
                                   mix_seed(seed, {kSeedBox, k}), cfg.atom_cap,
                                   cfg.time_step));
    return out;
  });

  const std::vector<int> ids = stage("merge", [&] { return merge(g, locals); });
  return stage("finalize", [&] { return finalize(q, g, ids); });
}

BenchmarkResult run_benchmark(const std::vector<NamedInstance>& instances,
                              const PipelineConfig& cfg) {
  if (instances.empty())
    throw std::invalid_argument("run_benchmark: instance list must be nonempty");
  validate_config(cfg);

  BenchmarkResult result;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const auto& [name, q] = instances[idx];
    std::vector<BenchmarkRow> rows;
    std::vector<RunRecord> runs;
    try {
      std::optional<double> optimum;
      if (q.n() <= 16) optimum = brute_force_solve(q).energy;
      const char* methods[2] = {kMethodGp, kMethodSa};
      for (std::uint64_t m = 0; m < 2; ++m) {
        std::vector<double> energies;
        const auto t0 = std::chrono::steady_clock::now();
        for (int rep = 0; rep < cfg.repeats; ++rep) {
          const std::uint64_t run_seed =
              mix_seed(cfg.global_seed, {idx, m, static_cast<std::uint64_t>(rep)});
          RunRecord rec;
          rec.instance_name = name;
          rec.method = methods[m];
          rec.rep = rep;
          rec.seed = run_seed;
          if (m == 0) {
            const GlobalSolution sol = run_pipeline(q, cfg, run_seed);
            rec.energy = sol.qubo_energy;
            rec.assignment = sol.assignment;
          } else {
            AnnealConfig sa = cfg.sa;
            sa.seed = run_seed;
            const QuboSolution sol = anneal(q, sa);
            rec.energy = sol.energy;
            rec.assignment = sol.x;
          }
          energies.push_back(rec.energy);
          runs.push_back(std::move(rec));
        }
        const auto t1 = std::chrono::steady_clock::now();

        BenchmarkRow row;
        row.instance_name = name;
        row.method = methods[m];
        row.repeats = cfg.repeats;
        row.optimum = optimum;
        row.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
        double mean = 0.0;
        for (double e : energies) mean += e;
        mean /= static_cast<double>(energies.size());
        row.mean_energy = mean;
        if (energies.size() > 1) {
          double ss = 0.0;
          for (double e : energies) ss += (e - mean) * (e - mean);
          row.std_energy =
              std::sqrt(ss / static_cast<double>(energies.size() - 1));
        }
        rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      std::cerr << "run_benchmark: skipping instance " << name << ": "
                << e.what() << "\n";
      continue;
    }
    for (auto& r : rows) result.rows.push_back(std::move(r));
    for (auto& r : runs) result.runs.push_back(std::move(r));
  }
  return result;
}

std::vector<NamedInstance> instance_suite(SuiteMode mode,
                                          const std::vector<int>& sizes,
                                          const std::string& source,
                                          std::uint64_t seed,
                                          const PipelineConfig& cfg) {
  std::vector<NamedInstance> out;
  if (sizes.empty()) return out;
  for (int k : sizes)
    if (k < 1) throw std::invalid_argument("instance_suite: sizes must be >= 1");

  auto unique_name = [&out](std::string base) {
    int copy = 1;
    std::string name = base;
    while (std::any_of(out.begin(), out.end(),
                       [&](const NamedInstance& ni) { return ni.first == name; }))
      name = base + "_" + std::to_string(++copy);
    return name;
  };

  if (mode == SuiteMode::kRandom) {
    for (std::size_t i = 0; i < sizes.size(); ++i)
      out.emplace_back(unique_name("R" + std::to_string(sizes[i])),
                       random_instance(sizes[i], cfg.density,
                                       mix_seed(seed, {i})));
    return out;
  }

  const PriceSeries series = load_prices_file(source);
  const int available = static_cast<int>(series.tickers.size());
  const int needed = *std::max_element(sizes.begin(), sizes.end());
  if (available < needed)
    throw DataError("instance_suite: need " + std::to_string(needed) +
                    " assets, price file has " + std::to_string(available));
  const Eigen::MatrixXd returns = log_returns(series);
  for (int k : sizes) {
    const ReturnStatistics stats = annualize(returns.leftCols(k));
    out.emplace_back(unique_name("Q" + std::to_string(k)),
                     build_markowitz_qubo(stats, cfg.gamma));
  }
  return out;
}

void write_benchmark_outputs(const BenchmarkResult& result,
                             const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  {
    std::ofstream out(dir / "results.csv");
    if (!out) throw FormatError("write_benchmark_outputs: cannot write results.csv");
    out << "instance,method,mean_energy,std_energy,repeats,optimum,gap\n";
    for (const BenchmarkRow& r : result.rows) {
      out << r.instance_name << "," << r.method << "," << fmt(r.mean_energy)
          << "," << fmt(r.std_energy) << "," << r.repeats << ",";
      if (r.optimum) {
        out << fmt(*r.optimum) << "," << fmt(r.mean_energy - *r.optimum);
      } else {
        out << ",";
      }
      out << "\n";
    }
  }
  {
    std::ofstream out(dir / "runs.csv");
    if (!out) throw FormatError("write_benchmark_outputs: cannot write runs.csv");
    out << "instance,method,rep,seed,energy\n";
    for (const RunRecord& r : result.runs)
      out << r.instance_name << "," << r.method << "," << r.rep << "," << r.seed
          << "," << fmt(r.energy) << "\n";
  }
  {
    std::ofstream out(dir / "timings.csv");
    if (!out) throw FormatError("write_benchmark_outputs: cannot write timings.csv");
    out << "instance,method,wall_time_s\n";
    char buf[64];
    for (const BenchmarkRow& r : result.rows) {
      std::snprintf(buf, sizeof buf, "%.6f", r.wall_time_s);
      out << r.instance_name << "," << r.method << "," << buf << "\n";
    }
  }
  for (const RunRecord& r : result.runs) {
    const fs::path p = dir / ("solution_" + r.instance_name + "_" + r.method +
                              "_" + std::to_string(r.rep) + ".txt");
    std::ofstream out(p);
    if (!out)
      throw FormatError("write_benchmark_outputs: cannot write " + p.string());
    for (int b : r.assignment) out << b;
    out << "\n";
  }
}

PipelineConfig parse_config(std::istream& in) {
  PipelineConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw FormatError("config line " + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    auto as_double = [&] {
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (end == value.c_str() || *end != '\0')
        throw FormatError("config line " + std::to_string(line_no) +
                          ": bad number '" + value + "'");
      return v;
    };
    auto as_int = [&] { return static_cast<int>(as_double()); };
    auto as_u64 = [&] {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
      if (end == value.c_str() || *end != '\0')
        throw FormatError("config line " + std::to_string(line_no) +
                          ": bad unsigned '" + value + "'");
      return static_cast<std::uint64_t>(v);
    };

    if (key == "blockade_radius") cfg.blockade_radius = as_double();
    else if (key == "box_side") cfg.box_side = as_double();
    else if (key == "theta") cfg.theta = as_double();
    else if (key == "total_time") cfg.schedule.total_time = as_double();
    else if (key == "omega_max") cfg.schedule.omega_max = as_double();
    else if (key == "delta_global") cfg.schedule.delta_global = as_double();
    else if (key == "delta_local_final") cfg.schedule.delta_local_final = as_double();
    else if (key == "ramp_fraction") cfg.schedule.ramp_fraction = as_double();
    else if (key == "time_step") cfg.time_step = as_double();
    else if (key == "shots") cfg.shots = as_int();
    else if (key == "atom_cap") cfg.atom_cap = as_int();
    else if (key == "sa_sweeps") cfg.sa.sweeps = as_int();
    else if (key == "sa_t_start") cfg.sa.t_start = as_double();
    else if (key == "sa_t_end") cfg.sa.t_end = as_double();
    else if (key == "repeats") cfg.repeats = as_int();
    else if (key == "seed") cfg.global_seed = as_u64();
    else if (key == "gamma") cfg.gamma = as_double();
    else if (key == "density") cfg.density = as_double();
    else
      throw FormatError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
  }
  return cfg;
}

PipelineConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("parse_config_file: cannot open " + path);
  return parse_config(in);
}

}  // namespace gpnaqc
