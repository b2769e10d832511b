// Copyright 2026 The vqelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqelab/config.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "vqelab/error.h"
#include "vqelab/stats.h"

namespace vqelab {

using nlohmann::json;

namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kConfig, where + ": " + what);
}

void RequireObject(const json& j, const std::string& where,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) Fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(where.empty() ? key : where + "." + key, "unknown key");
    }
  }
}

std::string Path(const std::string& where, std::string_view key) {
  return where.empty() ? std::string(key) : where + "." + std::string(key);
}

template <typename T>
void Read(const json& j, const std::string& where, std::string_view key,
          T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    if constexpr (std::is_same_v<T, bool>) {
      if (!it->is_boolean()) Fail(Path(where, key), "expected a boolean");
    } else if constexpr (std::is_unsigned_v<T>) {
      if (!it->is_number_unsigned()) {
        Fail(Path(where, key), "expected a non-negative integer");
      }
    } else if constexpr (std::is_integral_v<T>) {
      if (!it->is_number_integer()) Fail(Path(where, key), "expected an integer");
    } else if constexpr (std::is_floating_point_v<T>) {
      if (!it->is_number()) Fail(Path(where, key), "expected a number");
    } else if constexpr (std::is_same_v<T, std::string>) {
      if (!it->is_string()) Fail(Path(where, key), "expected a string");
    }
    out = it->get<T>();
  } catch (const json::exception& e) {
    Fail(Path(where, key), e.what());
  }
}

template <typename E, typename FromName>
void ReadEnum(const json& j, const std::string& where, std::string_view key,
              E& out, FromName from_name) {
  std::string name;
  if (j.find(key) == j.end()) return;
  Read(j, where, key, name);
  const auto value = from_name(name);
  if (!value) Fail(Path(where, key), "unknown value \"" + name + "\"");
  out = *value;
}

AnsatzSpec AnsatzFromJson(const json& j, const std::string& where) {
  RequireObject(j, where, {"qubits", "layers", "entanglement"});
  AnsatzSpec spec;
  Read(j, where, "qubits", spec.n_qubits);
  Read(j, where, "layers", spec.layers);
  ReadEnum(j, where, "entanglement", spec.entanglement, EntanglementFromName);
  return spec;
}

json AnsatzToJson(const AnsatzSpec& spec) {
  return {{"qubits", spec.n_qubits},
          {"layers", spec.layers},
          {"entanglement", EntanglementName(spec.entanglement)}};
}

void ReadDoubles(const json& j, const std::string& where, std::string_view key,
                 std::vector<double>& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_array()) Fail(Path(where, key), "expected an array");
  out.clear();
  for (const json& v : *it) {
    if (!v.is_number()) Fail(Path(where, key), "expected numbers");
    out.push_back(v.get<double>());
  }
}

SpsaGains SpsaFromJson(const json& j, const std::string& where,
                       SpsaGains base) {
  RequireObject(j, where, {"a", "c", "A", "alpha", "gamma"});
  Read(j, where, "a", base.a);
  Read(j, where, "c", base.c);
  Read(j, where, "A", base.big_a);
  Read(j, where, "alpha", base.alpha);
  Read(j, where, "gamma", base.gamma);
  return base;
}

json SpsaToJson(const SpsaGains& g) {
  return {{"a", g.a}, {"c", g.c}, {"A", g.big_a}, {"alpha", g.alpha},
          {"gamma", g.gamma}};
}

}  // namespace

VqeConfig VqeConfigFromJson(const json& j) {
  const std::string w = "vqe";
  RequireObject(j, w,
                {"ansatz", "hamiltonian", "noise", "estimator", "optimizer",
                 "budget", "seed", "initial", "iteration_offset",
                 "record_parameters"});
  VqeConfig c;
  if (j.contains("ansatz")) c.ansatz = AnsatzFromJson(j["ansatz"], w + ".ansatz");
  Read(j, w, "hamiltonian", c.hamiltonian);
  if (j.contains("noise")) {
    const json& n = j["noise"];
    const std::string nw = w + ".noise";
    RequireObject(n, nw, {"mode", "probability", "include_basis_rotations"});
    ReadEnum(n, nw, "mode", c.noise.mode, NoiseModeFromName);
    Read(n, nw, "probability", c.noise.probability);
    Read(n, nw, "include_basis_rotations", c.noise.include_basis_rotations);
  }
  if (j.contains("estimator")) {
    const json& e = j["estimator"];
    const std::string ew = w + ".estimator";
    RequireObject(e, ew, {"grouping", "shots"});
    ReadEnum(e, ew, "grouping", c.estimator.grouping, GroupingFromName);
    Read(e, ew, "shots", c.estimator.shots);
  }
  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    const std::string ow = w + ".optimizer";
    RequireObject(o, ow, {"kind", "spsa", "gradient_descent"});
    ReadEnum(o, ow, "kind", c.optimizer, OptimizerKindFromName);
    if (o.contains("spsa")) {
      c.spsa = SpsaFromJson(o["spsa"], ow + ".spsa", c.spsa);
    }
    if (o.contains("gradient_descent")) {
      const json& g = o["gradient_descent"];
      const std::string gw = ow + ".gradient_descent";
      RequireObject(g, gw, {"step", "fd_epsilon"});
      Read(g, gw, "step", c.gd.step);
      Read(g, gw, "fd_epsilon", c.gd.fd_epsilon);
    }
  }
  if (j.contains("budget")) {
    const json& b = j["budget"];
    const std::string bw = w + ".budget";
    RequireObject(b, bw,
                  {"max_iterations", "max_evaluations", "window", "tolerance"});
    Read(b, bw, "max_iterations", c.budget.max_iterations);
    Read(b, bw, "max_evaluations", c.budget.max_evaluations);
    Read(b, bw, "window", c.budget.window);
    Read(b, bw, "tolerance", c.budget.tolerance);
  }
  Read(j, w, "seed", c.seed);
  if (j.contains("initial")) {
    const json& i = j["initial"];
    const std::string iw = w + ".initial";
    RequireObject(i, iw, {"kind", "values", "warm_iters"});
    ReadEnum(i, iw, "kind", c.initial.kind, InitKindFromName);
    ReadDoubles(i, iw, "values", c.initial.values);
    Read(i, iw, "warm_iters", c.initial.warm_iters);
  }
  Read(j, w, "iteration_offset", c.iteration_offset);
  Read(j, w, "record_parameters", c.record_parameters);
  return c;
}

json VqeConfigToJson(const VqeConfig& c) {
  json initial = {{"kind", InitKindName(c.initial.kind)},
                  {"warm_iters", c.initial.warm_iters}};
  if (c.initial.kind == InitKind::kExplicit) initial["values"] = c.initial.values;
  return {
      {"ansatz", AnsatzToJson(c.ansatz)},
      {"hamiltonian", c.hamiltonian},
      {"noise",
       {{"mode", NoiseModeName(c.noise.mode)},
        {"probability", c.noise.probability},
        {"include_basis_rotations", c.noise.include_basis_rotations}}},
      {"estimator",
       {{"grouping", GroupingName(c.estimator.grouping)},
        {"shots", c.estimator.shots}}},
      {"optimizer",
       {{"kind", OptimizerKindName(c.optimizer)},
        {"spsa", SpsaToJson(c.spsa)},
        {"gradient_descent",
         {{"step", c.gd.step}, {"fd_epsilon", c.gd.fd_epsilon}}}}},
      {"budget",
       {{"max_iterations", c.budget.max_iterations},
        {"max_evaluations", c.budget.max_evaluations},
        {"window", c.budget.window},
        {"tolerance", c.budget.tolerance}}},
      {"seed", c.seed},
      {"initial", std::move(initial)},
      {"iteration_offset", c.iteration_offset},
      {"record_parameters", c.record_parameters},
  };
}

void ExperimentConfig::Validate() const {
  vqe.Validate();
  if (threads < 1) throw Error(ErrorCode::kConfig, "threads must be >= 1");
  if (sweep.reps == 0) throw Error(ErrorCode::kConfig, "sweep.reps must be >= 1");
  for (double r : sweep.ratios) NoiseConfig::ErroneousRatio(r).Validate();
  for (double r : converge.ratios) NoiseConfig::ErroneousRatio(r).Validate();
  if (converge.warm_spsa) converge.warm_spsa->Validate();
  if (converge.warm_iters == 0 || converge.run_iters == 0) {
    throw Error(ErrorCode::kConfig,
                "converge.warm_iters and converge.run_iters must be >= 1");
  }
  if (!(converge.tail_fraction > 0.0 && converge.tail_fraction <= 1.0)) {
    throw Error(ErrorCode::kConfig, "converge.tail_fraction must be in (0, 1]");
  }
  if (report.draws < 1) throw Error(ErrorCode::kConfig, "report.draws must be >= 1");
  for (const ReportEntry& e : report.entries) ValidateAnsatzSpec(e.ansatz);
  ValidateAnsatzSpec(faultmap.ansatz);
  if (!faultmap.theta.empty() &&
      faultmap.theta.size() != RyrzParameterCount(faultmap.ansatz)) {
    throw Error(ErrorCode::kConfig,
                "faultmap.theta length does not match the ansatz");
  }
}

ExperimentConfig ExperimentConfigFromJson(const json& j) {
  RequireObject(j, "config",
                {"vqe", "sweep", "converge", "report", "faultmap",
                 "output_dir", "threads"});
  ExperimentConfig c;
  if (j.contains("vqe")) c.vqe = VqeConfigFromJson(j["vqe"]);
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    RequireObject(s, "sweep", {"data_dir", "distances", "ratios", "reps"});
    Read(s, "sweep", "data_dir", c.sweep.data_dir);
    ReadDoubles(s, "sweep", "distances", c.sweep.distances);
    ReadDoubles(s, "sweep", "ratios", c.sweep.ratios);
    Read(s, "sweep", "reps", c.sweep.reps);
  }
  if (j.contains("converge")) {
    const json& s = j["converge"];
    RequireObject(s, "converge",
                  {"ratios", "warm_iters", "run_iters", "tail_fraction",
                   "failure_factor", "warm_spsa"});
    ReadDoubles(s, "converge", "ratios", c.converge.ratios);
    Read(s, "converge", "warm_iters", c.converge.warm_iters);
    Read(s, "converge", "run_iters", c.converge.run_iters);
    Read(s, "converge", "tail_fraction", c.converge.tail_fraction);
    Read(s, "converge", "failure_factor", c.converge.failure_factor);
    if (s.contains("warm_spsa")) {
      c.converge.warm_spsa =
          SpsaFromJson(s["warm_spsa"], "converge.warm_spsa", c.vqe.spsa);
    }
  }
  if (j.contains("report")) {
    const json& s = j["report"];
    RequireObject(s, "report", {"entries", "draws"});
    Read(s, "report", "draws", c.report.draws);
    if (s.contains("entries")) {
      if (!s["entries"].is_array()) Fail("report.entries", "expected an array");
      for (std::size_t i = 0; i < s["entries"].size(); ++i) {
        const json& e = s["entries"][i];
        const std::string w = "report.entries[" + std::to_string(i) + "]";
        RequireObject(e, w, {"ansatz", "hamiltonian"});
        ReportEntry entry;
        if (e.contains("ansatz")) entry.ansatz = AnsatzFromJson(e["ansatz"], w + ".ansatz");
        Read(e, w, "hamiltonian", entry.hamiltonian);
        c.report.entries.push_back(entry);
      }
    }
  }
  if (j.contains("faultmap")) {
    const json& s = j["faultmap"];
    RequireObject(s, "faultmap",
                  {"ansatz", "theta", "include_preparation",
                   "include_measurement"});
    if (s.contains("ansatz")) {
      c.faultmap.ansatz = AnsatzFromJson(s["ansatz"], "faultmap.ansatz");
    }
    ReadDoubles(s, "faultmap", "theta", c.faultmap.theta);
    Read(s, "faultmap", "include_preparation", c.faultmap.include_preparation);
    Read(s, "faultmap", "include_measurement", c.faultmap.include_measurement);
  }
  Read(j, "", "output_dir", c.output_dir);
  Read(j, "", "threads", c.threads);
  try {
    c.Validate();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    throw Error(ErrorCode::kConfig, e.what());
  }
  return c;
}

json ExperimentConfigToJson(const ExperimentConfig& c) {
  json entries = json::array();
  for (const ReportEntry& e : c.report.entries) {
    entries.push_back({{"ansatz", AnsatzToJson(e.ansatz)},
                       {"hamiltonian", e.hamiltonian}});
  }
  json converge = {{"ratios", c.converge.ratios},
                   {"warm_iters", c.converge.warm_iters},
                   {"run_iters", c.converge.run_iters},
                   {"tail_fraction", c.converge.tail_fraction},
                   {"failure_factor", c.converge.failure_factor}};
  if (c.converge.warm_spsa) {
    converge["warm_spsa"] = SpsaToJson(*c.converge.warm_spsa);
  }
  return {
      {"vqe", VqeConfigToJson(c.vqe)},
      {"sweep",
       {{"data_dir", c.sweep.data_dir},
        {"distances", c.sweep.distances},
        {"ratios", c.sweep.ratios},
        {"reps", c.sweep.reps}}},
      {"converge", std::move(converge)},
      {"report", {{"entries", std::move(entries)}, {"draws", c.report.draws}}},
      {"faultmap",
       {{"ansatz", AnsatzToJson(c.faultmap.ansatz)},
        {"theta", c.faultmap.theta},
        {"include_preparation", c.faultmap.include_preparation},
        {"include_measurement", c.faultmap.include_measurement}}},
      {"output_dir", c.output_dir},
      {"threads", c.threads},
  };
}

ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kData, "cannot read config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
  return ExperimentConfigFromJson(j);
}

std::string ConfigHash(const json& j) { return HexU64(Fnv1a64(j.dump())); }

}  // namespace vqelab
