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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "vqelab/config.h"
#include "vqelab/energy.h"
#include "vqelab/experiments.h"
#include "vqelab/oracle.h"
#include "vqelab/stats.h"
#include "vqelab/vqe.h"

namespace vqelab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kData:
    case ErrorCode::kParse:
      return kExitData;
    case ErrorCode::kNumeric:
      return kExitNumeric;
    default:
      return kExitConfig;
  }
}

namespace {

struct Flags {
  std::string config;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t reps = 0;
  double ratio = 0.0;
  int threads = 1;
  bool dry_run = false;
  std::string run_id;
  std::vector<std::string> files;

  bool has_seed = false;
  bool has_out = false;
  bool has_reps = false;
  bool has_ratio = false;
  bool has_threads = false;
};

void AddCommonOptions(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON experiment config");
  cmd->add_option("--seed", f.seed, "master seed (overrides vqe.seed)");
  cmd->add_option("--out", f.out, "output root (default $VQELAB_OUT or out)");
  cmd->add_option("--threads", f.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--run-id", f.run_id,
                  "artifact directory name (default: UTC timestamp)");
  cmd->add_flag("--dry-run", f.dry_run,
                "validate and print the resolved plan, then exit");
}

class Command {
 public:
  Command(std::string name, Flags flags, std::ostream& out, std::ostream& err)
      : name_(std::move(name)), flags_(std::move(flags)), out_(out), err_(err) {}

  int Execute();

 private:
  void Resolve();
  json Echo() const;
  fs::path ArtifactDir();
  void WriteConfigEcho(const fs::path& dir, json extra = json::object());
  void PrintPlan(const std::string& plan);

  int Run();
  int Sweep();
  int Converge();
  int FaultMapCmd();
  int Report();
  int Eig();

  std::string name_;
  Flags flags_;
  std::ostream& out_;
  std::ostream& err_;
  ExperimentConfig cfg_;
};

void Command::Resolve() {
  if (!flags_.config.empty()) cfg_ = LoadExperimentConfig(flags_.config);
  if (flags_.has_seed) cfg_.vqe.seed = flags_.seed;
  if (flags_.has_threads) cfg_.threads = flags_.threads;
  if (flags_.has_reps) cfg_.sweep.reps = flags_.reps;
  if (flags_.has_ratio) {
    cfg_.vqe.noise.mode = NoiseMode::kErroneousRatio;
    cfg_.vqe.noise.probability = flags_.ratio;
    cfg_.sweep.ratios = {flags_.ratio};
    cfg_.converge.ratios = {flags_.ratio};
  }
  if (flags_.has_out) {
    cfg_.output_dir = flags_.out;
  } else if (cfg_.output_dir.empty()) {
    const char* env = std::getenv("VQELAB_OUT");
    cfg_.output_dir = (env != nullptr && *env != '\0') ? env : "out";
  }
  cfg_.Validate();
}

// Execution settings do not enter the hash, so artifacts produced with
// different thread counts or output roots carry the same identity.
json Command::Echo() const {
  json config = ExperimentConfigToJson(cfg_);
  json identity = config;
  identity.erase("threads");
  identity.erase("output_dir");
  return {{"command", name_},
          {"config", config},
          {"config_hash", ConfigHash(identity)},
          {"seed", cfg_.vqe.seed}};
}

fs::path Command::ArtifactDir() {
  const std::string id =
      flags_.run_id.empty() ? TimestampRunId() : flags_.run_id;
  return PrepareArtifactDir(cfg_.output_dir, name_, id);
}

void Command::WriteConfigEcho(const fs::path& dir, json extra) {
  json echo = Echo();
  for (auto& [k, v] : extra.items()) echo[k] = v;
  WriteTextFile(dir / "config.json", echo.dump(2) + "\n");
}

void Command::PrintPlan(const std::string& plan) {
  out_ << "dry run: " << plan << '\n' << Echo().dump(2) << '\n';
}

std::string Describe(const AnsatzSpec& a) {
  return "RYRZ(" + std::to_string(a.n_qubits) + " qubits, " +
         std::to_string(a.layers) + " layers, " +
         std::string(EntanglementName(a.entanglement)) + ")";
}

int Command::Run() {
  const VqeConfig& v = cfg_.vqe;
  if (v.hamiltonian.empty()) {
    throw Error(ErrorCode::kConfig, "vqe.hamiltonian is required for run");
  }
  if (flags_.dry_run) {
    PrintPlan("1 VQE run, " + Describe(v.ansatz) + ", " +
              std::to_string(v.budget.max_iterations) + " iterations on " +
              v.hamiltonian);
    return kExitOk;
  }
  const PauliSum h = LoadHamiltonian(v.hamiltonian);
  const RunRecord rec = RunVqe(v, h);
  const double lambda = ExactMinEigenvalue(h).energy;

  const fs::path dir = ArtifactDir();
  json record = RunRecordToJson(rec);
  record["lambda_min"] = lambda;
  WriteTextFile(dir / "runs" / "run.json", record.dump(2) + "\n");
  std::ostringstream csv;
  csv << "seed,iterations,objective_calls,final_energy,"
         "final_energy_noiseless,best_energy,lambda_min,gap,config_hash\n"
      << v.seed << ',' << rec.iterations.size() << ',' << rec.objective_calls
      << ',' << FormatDouble(rec.final_energy) << ','
      << FormatDouble(rec.final_energy_noiseless) << ','
      << FormatDouble(rec.best_energy) << ',' << FormatDouble(lambda) << ','
      << FormatDouble(rec.final_energy - lambda) << ','
      << record["config_hash"].get<std::string>() << '\n';
  WriteTextFile(dir / "summary.csv", csv.str());
  WriteConfigEcho(dir);

  out_ << "final_energy " << FormatDouble(rec.final_energy) << '\n'
       << "lambda_min " << FormatDouble(lambda) << '\n'
       << "gap " << FormatDouble(rec.final_energy - lambda) << '\n'
       << "artifacts " << dir.string() << '\n';
  if (rec.aborted) {
    err_ << "run aborted: " << rec.abort_message << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

int Command::Sweep() {
  const auto distances = cfg_.sweep.ResolvedDistances();
  if (flags_.dry_run) {
    PrintPlan(std::to_string(distances.size()) + " distances x " +
              std::to_string(cfg_.sweep.ratios.size()) + " ratios x " +
              std::to_string(cfg_.sweep.reps) + " reps = " +
              std::to_string(distances.size() * cfg_.sweep.ratios.size() *
                             cfg_.sweep.reps) +
              " VQE runs, " + Describe(cfg_.vqe.ansatz) + ", data from " +
              cfg_.sweep.data_dir);
    return kExitOk;
  }
  const SweepResult result =
      DissociationSweep(cfg_.vqe, cfg_.sweep, cfg_.threads, &err_);
  if (result.points.empty()) {
    throw Error(ErrorCode::kData,
                "no Hamiltonian files found under " + cfg_.sweep.data_dir);
  }
  const fs::path dir = ArtifactDir();
  std::ostringstream csv;
  WriteSweepSummaryCsv(csv, result);
  WriteTextFile(dir / "summary.csv", csv.str());
  for (const SweepPoint& p : result.points) {
    std::string stem = HamiltonianFileName(p.distance);
    stem = stem.substr(0, stem.size() - 4) + "_r_" + FormatDouble(p.ratio);
    WriteTextFile(dir / "runs" / (stem + ".json"),
                  SweepPointToJson(p).dump(2) + "\n");
  }
  WriteConfigEcho(dir, {{"partial", result.partial},
                        {"missing_files", result.missing_files},
                        {"bounds", "nearest-rank 5th and 95th percentiles"}});
  for (double r : cfg_.sweep.ratios) {
    out_ << "ratio " << FormatDouble(r) << " argmin_distance "
         << FormatDouble(result.ArgminDistance(r)) << '\n';
  }
  out_ << "artifacts " << dir.string() << '\n';
  return kExitOk;
}

int Command::Converge() {
  const VqeConfig& v = cfg_.vqe;
  if (v.hamiltonian.empty()) {
    throw Error(ErrorCode::kConfig, "vqe.hamiltonian is required for converge");
  }
  if (flags_.dry_run) {
    PrintPlan("warm start " + std::to_string(cfg_.converge.warm_iters) +
              " iterations, then " + std::to_string(cfg_.converge.ratios.size()) +
              " traces of " + std::to_string(cfg_.converge.run_iters) +
              " iterations, " + Describe(v.ansatz) + " on " + v.hamiltonian);
    return kExitOk;
  }
  const PauliSum h = LoadHamiltonian(v.hamiltonian);
  const ConvergenceResult result =
      ConvergenceStudy(v, h, cfg_.converge, cfg_.threads);
  const fs::path dir = ArtifactDir();
  std::ostringstream summary, traces;
  WriteConvergenceSummaryCsv(summary, result);
  WriteConvergenceTracesCsv(traces, result);
  WriteTextFile(dir / "summary.csv", summary.str());
  WriteTextFile(dir / "traces.csv", traces.str());
  WriteTextFile(dir / "runs" / "warm_start.json",
                json{{"theta", result.warm_theta},
                     {"energy", result.warm_energy},
                     {"lambda_min", result.lambda_min}}
                        .dump(2) + "\n");
  for (const ConvergenceTrace& t : result.traces) {
    WriteTextFile(dir / "runs" / ("ratio_" + FormatDouble(t.ratio) + ".json"),
                  RunRecordToJson(t.run).dump(2) + "\n");
  }
  WriteConfigEcho(dir);
  for (const ConvergenceTrace& t : result.traces) {
    out_ << "ratio " << FormatDouble(t.ratio) << " residual "
         << FormatDouble(t.residual) << (t.failed ? " FAILED" : "") << '\n';
  }
  out_ << "artifacts " << dir.string() << '\n';
  return kExitOk;
}

int Command::FaultMapCmd() {
  const FaultMapSettings& s = cfg_.faultmap;
  if (flags_.dry_run) {
    PrintPlan("exhaustive fault sweep of " + Describe(s.ansatz));
    return kExitOk;
  }
  const FaultMap map = FaultMapExport(s, cfg_.vqe.seed);
  const fs::path dir = ArtifactDir();
  std::ostringstream csv;
  WriteFaultMapCsv(csv, map);
  WriteTextFile(dir / "summary.csv", csv.str());
  WriteTextFile(dir / "circuit.txt", DumpCircuit(map.circuit));
  WriteConfigEcho(dir, {{"theta", map.theta}});
  out_ << "rows " << map.entries.size() << '\n'
       << "artifacts " << dir.string() << '\n';
  return kExitOk;
}

int Command::Report() {
  if (flags_.dry_run) {
    PrintPlan(std::to_string(cfg_.report.ResolvedEntries().size()) +
              " ansatz configurations, " + std::to_string(cfg_.report.draws) +
              " parameter draws each");
    return kExitOk;
  }
  const std::vector<FidelityRow> rows =
      FidelityReport(cfg_.report, cfg_.vqe.seed, cfg_.threads);
  const std::string text = FormatFidelityReport(rows);
  const fs::path dir = ArtifactDir();
  std::ostringstream csv;
  WriteFidelityReportCsv(csv, rows);
  WriteTextFile(dir / "summary.csv", csv.str());
  WriteTextFile(dir / "report.txt", text);
  WriteConfigEcho(dir);
  out_ << text << "artifacts " << dir.string() << '\n';
  return kExitOk;
}

int Command::Eig() {
  for (const std::string& file : flags_.files) {
    const double lambda = ExactMinEigenvalue(LoadHamiltonian(file)).energy;
    if (flags_.files.size() > 1) out_ << file << ' ';
    out_ << FormatDouble(lambda) << '\n';
  }
  return kExitOk;
}

int Command::Execute() {
  if (name_ == "eig") return Eig();
  Resolve();
  if (name_ == "run") return Run();
  if (name_ == "sweep") return Sweep();
  if (name_ == "converge") return Converge();
  if (name_ == "faultmap") return FaultMapCmd();
  return Report();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Fault-injection simulation lab for the variational quantum "
               "eigensolver"};
  app.name("vqelab");
  app.require_subcommand(1);
  Flags flags;

  CLI::App* run = app.add_subcommand("run", "single VQE run");
  CLI::App* sweep = app.add_subcommand("sweep", "dissociation-curve sweep");
  CLI::App* converge =
      app.add_subcommand("converge", "convergence under erroneous circuits");
  CLI::App* faultmap =
      app.add_subcommand("faultmap", "exhaustive single-fault fidelity map");
  CLI::App* report =
      app.add_subcommand("report", "ansatz characteristics and fidelity");
  CLI::App* eig = app.add_subcommand("eig", "exact minimum eigenvalue");
  for (CLI::App* cmd : {run, sweep, converge, faultmap, report}) {
    AddCommonOptions(cmd, flags);
  }
  for (CLI::App* cmd : {run, sweep, converge}) {
    cmd->add_option("--ratio", flags.ratio, "erroneous-circuit ratio")
        ->check(CLI::Range(0.0, 1.0));
  }
  sweep->add_option("--reps", flags.reps, "repetitions per point")
      ->check(CLI::PositiveNumber);
  eig->add_option("files", flags.files, "Hamiltonian files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "vqelab: " << e.what() << '\n';
    return kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen != eig) {
    flags.has_seed = chosen->count("--seed") > 0;
    flags.has_out = chosen->count("--out") > 0;
    flags.has_threads = chosen->count("--threads") > 0;
  }
  flags.has_reps = chosen == sweep && chosen->count("--reps") > 0;
  flags.has_ratio = (chosen == run || chosen == sweep || chosen == converge) &&
                    chosen->count("--ratio") > 0;

  try {
    return Command(chosen->get_name(), flags, out, err).Execute();
  } catch (const Error& e) {
    err << "vqelab: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "vqelab: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace vqelab::cli
