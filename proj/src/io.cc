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

#include "tenp/io.h"

#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "tenp/error.h"

namespace tenp {
namespace {

using nlohmann::json;

// Reads fields of one JSON object and rejects whatever was not read.
class Fields {
 public:
  Fields(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) Invalid(path_, "expected an object");
  }

  [[noreturn]] static void Invalid(const std::string& path,
                                   const std::string& why) {
    Fail(ErrorCode::kValidation, (path.empty() ? "<root>" : path) + ": " + why);
  }

  std::string Path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* Find(const std::string& key) {
    used_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  const json& Require(const std::string& key) {
    const json* v = Find(key);
    if (v == nullptr) Invalid(Path(key), "missing required field");
    return *v;
  }

  double Number(const std::string& key) { return AsNumber(Require(key), Path(key)); }

  std::optional<double> OptionalNumber(const std::string& key) {
    const json* v = Find(key);
    if (v == nullptr) return std::nullopt;
    return AsNumber(*v, Path(key));
  }

  int Integer(const std::string& key) { return AsInteger(Require(key), Path(key)); }

  void Finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (!used_.contains(key)) Invalid(Path(key), "unknown field");
    }
  }

  static double AsNumber(const json& v, const std::string& path) {
    if (!v.is_number()) Invalid(path, "expected a number");
    return v.get<double>();
  }

  static int AsInteger(const json& v, const std::string& path) {
    if (!v.is_number_integer()) Invalid(path, "expected an integer");
    return v.get<int>();
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> used_;
};

const json& RequireArray(Fields& f, const std::string& key) {
  const json& v = f.Require(key);
  if (!v.is_array()) Fields::Invalid(f.Path(key), "expected an array");
  return v;
}

Cell ReadCell(const json& v, const std::string& path, double* u) {
  Fields f(v, path);
  Cell c{f.Integer("x"), f.Integer("y")};
  if (u != nullptr) *u = f.Number("u");
  f.Finish();
  return c;
}

RadioParams ReadRadio(const json& v) {
  Fields f(v, "radio");
  RadioParams r;
  r.tx_power_dbm = f.Number("tx_power_dbm");
  r.freq_ghz = f.Number("freq_ghz");
  r.path_loss_rate = f.Number("path_loss_rate");
  r.ref_distance_m = f.Number("ref_distance_m");
  r.charge_efficiency = f.Number("charge_efficiency");
  r.frame_s = f.Number("frame_s");
  r.op_time_s = f.Number("op_time_s");
  r.rx_power_dbm = f.Number("rx_power_dbm");
  f.Finish();
  r.Validate();
  return r;
}

LoadedInstance BuildInstance(const json& root) {
  Fields top(root, "");
  std::vector<std::string> notices;

  Fields grid(top.Require("grid"), "grid");
  const int n = grid.Integer("n");
  double cell_size = 1.0;
  if (auto cs = grid.OptionalNumber("cell_size_m")) {
    cell_size = *cs;
  } else {
    notices.push_back("grid.cell_size_m not given; using 1.0 m");
  }
  grid.Finish();

  const json& tasks_json = RequireArray(top, "tasks");
  std::vector<Cell> task_cells;
  std::vector<double> requirements;
  for (std::size_t j = 0; j < tasks_json.size(); ++j) {
    double u = 0.0;
    task_cells.push_back(
        ReadCell(tasks_json[j], "tasks[" + std::to_string(j) + "]", &u));
    requirements.push_back(u);
  }

  const json& ets_json = RequireArray(top, "ets");
  std::vector<Cell> et_cells;
  for (std::size_t k = 0; k < ets_json.size(); ++k) {
    et_cells.push_back(
        ReadCell(ets_json[k], "ets[" + std::to_string(k) + "]", nullptr));
  }

  const json& partition_json = RequireArray(top, "partition");
  if (partition_json.size() != task_cells.size()) {
    Fields::Invalid("partition", "expected one sensor list per task (" +
                                     std::to_string(task_cells.size()) +
                                     "), got " +
                                     std::to_string(partition_json.size()));
  }
  std::vector<SensorGroup> groups;
  for (std::size_t j = 0; j < partition_json.size(); ++j) {
    const std::string path = "partition[" + std::to_string(j) + "]";
    const json& list = partition_json[j];
    if (!list.is_array()) Fields::Invalid(path, "expected an array");
    SensorGroup g{static_cast<int>(j) + 1, {}};
    for (std::size_t i = 0; i < list.size(); ++i) {
      g.sensor_ids.push_back(
          Fields::AsInteger(list[i], path + "[" + std::to_string(i) + "]"));
    }
    groups.push_back(std::move(g));
  }

  const double lambda = top.Number("lambda");
  const RadioParams radio = ReadRadio(top.Require("radio"));

  const json& variant_json = top.Require("variant");
  if (!variant_json.is_string()) Fields::Invalid("variant", "expected a string");
  ProblemVariant variant;
  try {
    variant = ParseVariant(variant_json.get<std::string>());
  } catch (const Error& e) {
    Fields::Invalid("variant", e.what());
  }

  double sim_time = radio.frame_s;
  if (auto st = top.OptionalNumber("simulation_time_s")) {
    sim_time = *st;
  } else {
    notices.push_back("simulation_time_s not given; using one frame");
  }
  top.Finish();

  GridEnvironment env =
      GridEnvironment::Build(n, cell_size, task_cells, et_cells);
  std::vector<Task> tasks;
  for (std::size_t j = 0; j < task_cells.size(); ++j) {
    tasks.push_back({static_cast<int>(j) + 1, task_cells[j], requirements[j]});
  }
  std::vector<EnergyTransmitter> ets;
  for (std::size_t k = 0; k < et_cells.size(); ++k) {
    ets.push_back({static_cast<int>(k) + 1, et_cells[k]});
  }
  return LoadedInstance{
      ProblemInstance(std::move(env), std::move(tasks), std::move(ets),
                      SensorTaskPartition(std::move(groups)), lambda, radio,
                      variant),
      sim_time, std::move(notices)};
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitComma(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Trim(item));
  return out;
}

int ParseInt(const std::string& s, int line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    Fail(ErrorCode::kParse, "placement line " + std::to_string(line_no) +
                                ": '" + s + "' is not an integer");
  }
  return v;
}

std::string OptionalCsv(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

}  // namespace

LoadedInstance ParseInstanceConfig(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParse, std::string("config is not valid JSON: ") + e.what());
  }
  return BuildInstance(root);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedInstance LoadInstanceFile(const std::string& path) {
  return ParseInstanceConfig(ReadFile(path));
}

std::string InstanceToConfig(const ProblemInstance& instance,
                             double simulation_time_s) {
  const GridEnvironment& env = instance.environment();
  json root = json::object();
  root["grid"] = {{"n", env.n()}, {"cell_size_m", env.cell_size_m()}};
  json tasks = json::array();
  for (const Task& t : instance.tasks()) {
    tasks.push_back({{"x", t.cell.x}, {"y", t.cell.y}, {"u", t.utility_requirement}});
  }
  root["tasks"] = tasks;
  json ets = json::array();
  for (const EnergyTransmitter& e : instance.ets()) {
    ets.push_back({{"x", e.cell.x}, {"y", e.cell.y}});
  }
  root["ets"] = ets;
  // The config format ties partition lists to task order.
  json partition = json::array();
  for (const Task& t : instance.tasks()) {
    json ids = json::array();
    for (const SensorGroup& g : instance.partition().groups()) {
      if (g.task_id == t.id) ids = g.sensor_ids;
    }
    partition.push_back(ids);
  }
  root["partition"] = partition;
  root["lambda"] = instance.lambda();
  const RadioParams& r = instance.radio();
  root["radio"] = {{"tx_power_dbm", r.tx_power_dbm},
                   {"freq_ghz", r.freq_ghz},
                   {"path_loss_rate", r.path_loss_rate},
                   {"ref_distance_m", r.ref_distance_m},
                   {"charge_efficiency", r.charge_efficiency},
                   {"frame_s", r.frame_s},
                   {"op_time_s", r.op_time_s},
                   {"rx_power_dbm", r.rx_power_dbm}};
  root["variant"] = ToString(instance.variant());
  root["simulation_time_s"] = simulation_time_s;
  return root.dump(2) + "\n";
}

std::string WritePlacement(const Placement& placement) {
  std::ostringstream os;
  os << "verdict," << ToString(placement.verdict) << "\n";
  os << "sensor,x,y\n";
  for (const auto& [sensor, cell] : placement.assignments) {
    os << sensor << "," << cell.x << "," << cell.y << "\n";
  }
  return os.str();
}

Placement ParsePlacement(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_verdict = false;
  bool have_header = false;
  Placement p;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = SplitComma(line);
    if (!have_verdict) {
      if (cols.size() != 2 || cols[0] != "verdict") {
        Fail(ErrorCode::kParse, "placement line " + std::to_string(line_no) +
                                    ": expected 'verdict,<VERDICT>'");
      }
      p.verdict = ParseVerdict(cols[1]);
      have_verdict = true;
    } else if (!have_header) {
      if (line != "sensor,x,y") {
        Fail(ErrorCode::kParse, "placement line " + std::to_string(line_no) +
                                    ": expected header 'sensor,x,y'");
      }
      have_header = true;
    } else {
      if (cols.size() != 3) {
        Fail(ErrorCode::kParse, "placement line " + std::to_string(line_no) +
                                    ": expected 'sensor,x,y'");
      }
      const int sensor = ParseInt(cols[0], line_no);
      const Cell cell{ParseInt(cols[1], line_no), ParseInt(cols[2], line_no)};
      if (!p.assignments.emplace(sensor, cell).second) {
        Fail(ErrorCode::kParse, "placement line " + std::to_string(line_no) +
                                    ": sensor " + std::to_string(sensor) +
                                    " listed twice");
      }
    }
  }
  if (!have_header) Fail(ErrorCode::kParse, "placement is missing its header");
  return p;
}

void ValidatePlacement(const Placement& placement,
                       const ProblemInstance& instance) {
  const std::vector<int> order = instance.partition().SensorOrder();
  const std::set<int> known(order.begin(), order.end());
  std::set<Cell> used;
  for (const auto& [sensor, cell] : placement.assignments) {
    const std::string who = "sensor " + std::to_string(sensor);
    if (!known.contains(sensor)) {
      Fail(ErrorCode::kValidation, who + " is not part of the instance");
    }
    if (!instance.environment().IsFree(cell)) {
      Fail(ErrorCode::kValidation, who + " sits on non-free cell " + ToString(cell));
    }
    if (!used.insert(cell).second) {
      Fail(ErrorCode::kValidation, who + " shares cell " + ToString(cell));
    }
  }
  const bool total = placement.assignments.size() == instance.sensor_count();
  if (total != (placement.verdict == Verdict::kSatisfiable)) {
    Fail(ErrorCode::kValidation,
         "verdict " + ToString(placement.verdict) + " disagrees with " +
             std::to_string(placement.assignments.size()) + " of " +
             std::to_string(instance.sensor_count()) + " sensors placed");
  }
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string SweepToCsv(const SweepSeries& series) {
  std::ostringstream os;
  os << kSweepCsvHeader << "\n";
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    const SweepPoint& p = series.points[i];
    os << FormatDouble(p.param_value) << "," << ToString(p.verdict) << ","
       << p.placed_count << ",";
    if (p.metrics) {
      os << FormatDouble(p.metrics->avg_harvested_charge) << ","
         << FormatDouble(p.metrics->avg_task_utility);
    } else {
      os << ",";
    }
    os << ",";
    for (std::size_t s = 0; s < series.stalls.size(); ++s) {
      if (i >= series.stalls[s].first && i <= series.stalls[s].last) os << s;
    }
    os << "\n";
  }
  return os.str();
}

std::string SummaryToCsv(const std::array<VariantMaxima, 3>& rows) {
  std::ostringstream os;
  os << kSummaryCsvHeader << "\n";
  for (const VariantMaxima& r : rows) {
    os << ToString(r.variant) << "," << OptionalCsv(r.max_avg_task_utility)
       << "," << OptionalCsv(r.max_avg_harvested_charge) << "\n";
  }
  return os.str();
}

std::string SimMetricsToJson(const SimMetrics& m) {
  json j = {{"avg_harvested_charge", m.avg_harvested_charge},
            {"avg_task_utility", m.avg_task_utility},
            {"per_sensor_charge", m.per_sensor_charge},
            {"per_task_utility", m.per_task_utility}};
  return j.dump(2) + "\n";
}

std::string OptimalResultToJson(const OptimalResult& r) {
  json assignments = json::array();
  for (const auto& [sensor, cell] : r.placement.assignments) {
    assignments.push_back({{"sensor", sensor}, {"x", cell.x}, {"y", cell.y}});
  }
  json j = {{"verdict", ToString(r.placement.verdict)},
            {"objective", r.objective ? json(*r.objective) : json(nullptr)},
            {"explored", r.explored},
            {"assignments", assignments}};
  return j.dump(2) + "\n";
}

bool HasNonMonotoneFeasibility(const SweepSeries& series) {
  bool seen_unsat = false;
  for (const SweepPoint& p : series.points) {
    if (p.verdict == Verdict::kUnsatisfiable) {
      seen_unsat = true;
    } else if (seen_unsat) {
      return true;
    }
  }
  return false;
}

}  // namespace tenp
