// Copyright 2026 The TENP Authors
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

// Command-line front end. Links only the C API.
//
// Exit codes: 0 success (any verdict), 1 usage, 2 load or validation error,
// 3 exact-search budget exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tenp/tenp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

struct Failure {
  int exit_code;
  std::string message;
};

struct InstanceDeleter {
  void operator()(tenp_instance* p) const { tenp_instance_free(p); }
};
struct PlacementDeleter {
  void operator()(tenp_placement* p) const { tenp_placement_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { tenp_string_free(p); }
};
using Instance = std::unique_ptr<tenp_instance, InstanceDeleter>;
using PlacementPtr = std::unique_ptr<tenp_placement, PlacementDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

void Check(tenp_status status) {
  if (status == TENP_OK) return;
  const int code = status == TENP_ERR_BUDGET ? kExitBudget : kExitValidation;
  throw Failure{code, tenp_last_error()};
}

Instance Load(const std::string& path) {
  tenp_instance* raw = nullptr;
  Check(tenp_instance_load_file(path.c_str(), &raw));
  Instance inst(raw);
  for (std::size_t i = 0; i < tenp_instance_notice_count(raw); ++i) {
    std::cerr << "notice: " << tenp_instance_notice(raw, i) << "\n";
  }
  return inst;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitValidation, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path` when given, otherwise to stdout.
void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitValidation, "cannot write '" + path + "'"};
  out << text;
}

struct Options {
  std::string config;
  std::string out;
  std::string placement;
  std::string axis = "lambda";
  double time_s = 0.0;
  std::size_t points = 0;
  std::size_t lambda_points = 18;
  std::size_t u_points = 16;
  double u_min = 0.10;
  double u_max = 0.25;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 1;
  std::uint64_t attempts = 100'000;
};

std::vector<double> LambdaGrid(const tenp_instance* inst, std::size_t points) {
  std::vector<double> grid(points);
  Check(tenp_lambda_grid(inst, points, grid.data()));
  return grid;
}

std::vector<double> UtilityGrid(const Options& o, std::size_t points) {
  std::vector<double> grid(points);
  Check(tenp_utility_grid(o.u_min, o.u_max, points, grid.data()));
  return grid;
}

void RunSolve(const Options& o) {
  Instance inst = Load(o.config);
  tenp_placement* raw = nullptr;
  Check(tenp_solve(inst.get(), &raw));
  PlacementPtr placement(raw);
  char* text = nullptr;
  Check(tenp_placement_write(placement.get(), &text));
  Emit(String(text).get(), o.out);
  if (!o.out.empty()) {
    std::cout << "verdict,"
              << (tenp_placement_satisfiable(placement.get()) ? "SATISFIABLE"
                                                              : "UNSATISFIABLE")
              << "\n";
  }
}

void RunSimulate(const Options& o) {
  Instance inst = Load(o.config);
  tenp_placement* raw = nullptr;
  Check(tenp_placement_parse(ReadText(o.placement).c_str(), &raw));
  PlacementPtr placement(raw);
  char* json = nullptr;
  Check(tenp_simulate(inst.get(), placement.get(), o.time_s, nullptr, &json));
  Emit(String(json).get(), o.out);
}

void RunSweep(const Options& o) {
  Instance inst = Load(o.config);
  const bool lambda = o.axis == "lambda";
  const std::size_t points =
      o.points > 0 ? o.points : (lambda ? o.lambda_points : o.u_points);
  const std::vector<double> grid =
      lambda ? LambdaGrid(inst.get(), points) : UtilityGrid(o, points);
  char* csv = nullptr;
  int nonmonotone = 0;
  Check(tenp_sweep_csv(inst.get(), lambda ? TENP_AXIS_LAMBDA : TENP_AXIS_UTILITY,
                       grid.data(), grid.size(), o.time_s, &csv, &nonmonotone));
  Emit(String(csv).get(), o.out);
  if (nonmonotone) {
    std::cerr << "warning: satisfiable point follows an unsatisfiable one\n";
  }
}

void RunOracle(const Options& o) {
  Instance inst = Load(o.config);
  char* json = nullptr;
  Check(tenp_oracle(inst.get(), o.budget, &json));
  Emit(String(json).get(), o.out);
}

void RunWitness(const Options& o) {
  tenp_instance* raw = nullptr;
  Check(tenp_witness(o.seed, o.attempts, &raw));
  if (raw == nullptr) {
    Emit("ABSENT\n", o.out);
    return;
  }
  Instance inst(raw);
  char* cfg = nullptr;
  Check(tenp_instance_to_config(inst.get(), &cfg));
  Emit(String(cfg).get(), o.out);
}

void RunSummary(const Options& o) {
  Instance inst = Load(o.config);
  const auto lgrid = LambdaGrid(inst.get(), o.lambda_points);
  const auto ugrid = UtilityGrid(o, o.u_points);
  char* csv = nullptr;
  Check(tenp_summary_csv(inst.get(), lgrid.data(), lgrid.size(), ugrid.data(),
                         ugrid.size(), o.time_s, &csv));
  Emit(String(csv).get(), o.out);
}

void AddUtilityRange(CLI::App* cmd, Options& o) {
  cmd->add_option("--u-min", o.u_min, "Smallest utility requirement")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--u-max", o.u_max, "Largest utility requirement")
      ->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task- and energy-aware sensor placement"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Greedy placement");
  solve->add_option("config", o.config, "Instance config")->required();
  solve->add_option("--out", o.out, "Write the placement here");

  auto* simulate = app.add_subcommand("simulate", "Simulate a placement");
  simulate->add_option("config", o.config, "Instance config")->required();
  simulate->add_option("--placement", o.placement, "Placement artifact")
      ->required();
  simulate->add_option("--time", o.time_s, "Simulation time in seconds");
  simulate->add_option("--out", o.out, "Write metrics here");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep as CSV");
  sweep->add_option("config", o.config, "Instance config")->required();
  sweep->add_option("--axis", o.axis, "lambda or utility")
      ->check(CLI::IsMember({"lambda", "utility"}));
  sweep->add_option("--points", o.points,
                    "Grid points (default 18 for lambda, 16 for utility)")
      ->check(CLI::PositiveNumber);
  AddUtilityRange(sweep, o);
  sweep->add_option("--time", o.time_s, "Simulation time in seconds");
  sweep->add_option("--out", o.out, "Write CSV here");

  auto* oracle = app.add_subcommand("oracle", "Exact search");
  oracle->add_option("config", o.config, "Instance config")->required();
  oracle->add_option("--budget", o.budget, "Partial assignment budget");
  oracle->add_option("--out", o.out, "Write the result here");

  auto* witness = app.add_subcommand("witness", "Search for an instance the greedy misses");
  witness->add_option("--seed", o.seed, "Generator seed");
  witness->add_option("--attempts", o.attempts, "Random instances to try")
      ->check(CLI::PositiveNumber);
  witness->add_option("--out", o.out, "Write the fixture here");

  auto* summary = app.add_subcommand("summary", "Per-variant maxima as CSV");
  summary->add_option("config", o.config, "Instance config")->required();
  summary->add_option("--lambda-points", o.lambda_points, "Lambda grid points")
      ->check(CLI::PositiveNumber);
  summary->add_option("--u-points", o.u_points, "Utility grid points")
      ->check(CLI::PositiveNumber);
  AddUtilityRange(summary, o);
  summary->add_option("--time", o.time_s, "Simulation time in seconds");
  summary->add_option("--out", o.out, "Write CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) RunSolve(o);
    if (*simulate) RunSimulate(o);
    if (*sweep) RunSweep(o);
    if (*oracle) RunOracle(o);
    if (*witness) RunWitness(o);
    if (*summary) RunSummary(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitOk;
}
