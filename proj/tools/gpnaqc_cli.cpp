// SPDX-License-Identifier: Apache-2.0
//
// gpnaqc: hybrid QUBO solver driver.
//   solve   one instance -> assignment + energy
//   bench   instance suite -> results.csv / runs.csv / solution dumps
//   oracle  brute-force optimum of one instance
//   gen     write random QUBO instance files

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "gpnaqc/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string mode = "random";
  std::vector<int> sizes;
  std::string prices;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "pipeline config file (key = value lines)");
  cmd->add_option("--mode", args.mode, "instance source: portfolio|random")
      ->check(CLI::IsMember({"portfolio", "random"}));
  cmd->add_option("--sizes", args.sizes, "instance sizes, e.g. 10,20,30")
      ->delimiter(',');
  cmd->add_option("--prices", args.prices, "price CSV for portfolio mode");
  cmd->add_option("--seed", args.seed, "global seed")
      ->each([&args](const std::string&) { args.seed_given = true; });
  cmd->add_option("--out", args.out_dir, "output directory");
}

gpnaqc::PipelineConfig load_config(const CommonArgs& args) {
  gpnaqc::PipelineConfig cfg;
  if (!args.config_path.empty())
    cfg = gpnaqc::parse_config_file(args.config_path);
  if (args.seed_given) cfg.global_seed = args.seed;
  return cfg;
}

std::vector<gpnaqc::NamedInstance> build_suite(const CommonArgs& args,
                                               const gpnaqc::PipelineConfig& cfg,
                                               const std::string& qubo_path) {
  if (!qubo_path.empty()) {
    std::vector<gpnaqc::NamedInstance> suite;
    suite.emplace_back(std::filesystem::path(qubo_path).stem().string(),
                       gpnaqc::load_qubo_file(qubo_path));
    return suite;
  }
  const auto mode = args.mode == "portfolio" ? gpnaqc::SuiteMode::kPortfolio
                                             : gpnaqc::SuiteMode::kRandom;
  return gpnaqc::instance_suite(mode, args.sizes, args.prices, cfg.global_seed,
                                cfg);
}

std::string bits_to_string(const std::vector<int>& x) {
  std::string s;
  for (int b : x) s += (b ? '1' : '0');
  return s;
}

void print_energy(const char* label, double e) {
  std::printf("%s = %.17g\n", label, e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gpnaqc: grid-partitioned analog-quantum QUBO solver"};
  app.require_subcommand(1);

  CommonArgs solve_args, bench_args, oracle_args, gen_args;
  std::string solve_path, oracle_path, solve_method = "gp";

  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("qubo", solve_path, "QUBO matrix text file");
  solve->add_option("--method", solve_method, "gp|sa")
      ->check(CLI::IsMember({"gp", "sa"}));
  add_common(solve, solve_args);

  CLI::App* bench = app.add_subcommand("bench", "run the benchmark suite");
  add_common(bench, bench_args);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force one instance");
  oracle->add_option("qubo", oracle_path, "QUBO matrix text file");
  add_common(oracle, oracle_args);

  CLI::App* gen = app.add_subcommand("gen", "generate random instance files");
  add_common(gen, gen_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const auto cfg = load_config(solve_args);
      const auto suite = build_suite(solve_args, cfg, solve_path);
      if (suite.empty()) throw std::invalid_argument("no instance given (use a file or --sizes)");
      const auto& [name, q] = suite.front();
      std::printf("instance %s (n = %d)\n", name.c_str(), q.n());
      if (solve_method == "gp") {
        const auto sol = gpnaqc::run_pipeline(q, cfg, cfg.global_seed);
        std::printf("x = %s\n", bits_to_string(sol.assignment).c_str());
        print_energy("energy", sol.qubo_energy);
        print_energy("mwis_weight", sol.mwis_weight);
      } else {
        auto sa = cfg.sa;
        sa.seed = cfg.global_seed;
        const auto sol = gpnaqc::anneal(q, sa);
        std::printf("x = %s\n", bits_to_string(sol.x).c_str());
        print_energy("energy", sol.energy);
      }
    } else if (bench->parsed()) {
      const auto cfg = load_config(bench_args);
      const auto suite = build_suite(bench_args, cfg, "");
      if (suite.empty()) throw std::invalid_argument("bench needs --sizes");
      const auto result = gpnaqc::run_benchmark(suite, cfg);
      gpnaqc::write_benchmark_outputs(result, bench_args.out_dir);
      for (const auto& row : result.rows)
        std::printf("%-12s %-14s mean %-22.17g std %-22.17g\n",
                    row.instance_name.c_str(), row.method.c_str(),
                    row.mean_energy, row.std_energy);
      std::printf("wrote %s/results.csv\n", bench_args.out_dir.c_str());
    } else if (oracle->parsed()) {
      const auto cfg = load_config(oracle_args);
      const auto suite = build_suite(oracle_args, cfg, oracle_path);
      if (suite.empty()) throw std::invalid_argument("no instance given (use a file or --sizes)");
      for (const auto& [name, q] : suite) {
        const auto sol = gpnaqc::brute_force_solve(q);
        std::printf("instance %s (n = %d)\n", name.c_str(), q.n());
        std::printf("x = %s\n", bits_to_string(sol.x).c_str());
        print_energy("energy", sol.energy);
      }
    } else if (gen->parsed()) {
      const auto cfg = load_config(gen_args);
      if (gen_args.sizes.empty()) throw std::invalid_argument("gen needs --sizes");
      const auto suite = gpnaqc::instance_suite(
          gpnaqc::SuiteMode::kRandom, gen_args.sizes, "", cfg.global_seed, cfg);
      std::filesystem::create_directories(gen_args.out_dir);
      for (const auto& [name, q] : suite) {
        const auto path =
            std::filesystem::path(gen_args.out_dir) / ("qubo_" + name + ".txt");
        gpnaqc::save_qubo_file(q, path.string());
        std::printf("wrote %s\n", path.string().c_str());
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
