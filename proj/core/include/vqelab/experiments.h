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

// The three studies: dissociation sweep, fault-impact characterization and
// convergence under a fixed erroneous-circuit ratio.

#ifndef VQELAB_EXPERIMENTS_H_
#define VQELAB_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vqelab/ansatz.h"
#include "vqelab/noise.h"
#include "vqelab/vqe.h"

namespace vqelab {

// ---- Dissociation sweep ---------------------------------------------------

struct SweepSettings {
  std::string data_dir = "data/h2";
  std::vector<double> distances;  // Angstrom; empty means 0.2, 0.3, ..., 2.0
  std::vector<double> ratios = {0.0};
  std::size_t reps = 100;

  std::vector<double> ResolvedDistances() const;

  friend bool operator==(const SweepSettings&, const SweepSettings&) = default;
};

// "d_0.70.ham" for 0.7.
std::string HamiltonianFileName(double distance);

struct SweepPoint {
  double distance = 0.0;
  double ratio = 0.0;
  double lambda_min = 0.0;
  std::vector<double> energies;  // final energy of every repetition
  std::vector<double> noiseless_energies;
  std::vector<std::uint64_t> seeds;
  double mean = 0.0;
  double p05 = 0.0;  // nearest-rank 5th percentile
  double p95 = 0.0;  // nearest-rank 95th percentile
};

struct SweepResult {
  std::vector<SweepPoint> points;  // distance-major, ratios in given order
  std::vector<std::string> missing_files;
  bool partial = false;

  // Distance whose mean energy is lowest at `ratio`.
  double ArgminDistance(double ratio) const;
};

// Runs reps independent VQE runs per (distance, ratio) with seeds
// DeriveSeed(base.seed, {distance index, ratio index, rep}). Missing files
// are reported on `warnings`, skipped, and mark the result partial.
SweepResult DissociationSweep(const VqeConfig& base,
                              const SweepSettings& settings, int threads,
                              std::ostream* warnings = nullptr);

// ---- Convergence study ----------------------------------------------------

struct ConvergeSettings {
  std::vector<double> ratios = {0.0, 0.0001, 0.001, 0.01, 0.05};
  std::size_t warm_iters = 2000;
  std::size_t run_iters = 1000;
  double tail_fraction = 0.1;
  double failure_factor = 10.0;
  // Gains for the noiseless warm start; the run's own gains when unset.
  std::optional<SpsaGains> warm_spsa;

  friend bool operator==(const ConvergeSettings&,
                         const ConvergeSettings&) = default;
};

struct ConvergenceTrace {
  double ratio = 0.0;
  std::vector<double> energies;
  std::vector<bool> erroneous;
  double tail_median = 0.0;
  double residual = 0.0;  // tail_median - lambda_min
  bool failed = false;
  RunRecord run;
};

struct ConvergenceResult {
  double lambda_min = 0.0;
  std::vector<double> warm_theta;
  double warm_energy = 0.0;  // exact energy at warm_theta
  std::vector<ConvergenceTrace> traces;
  // Residual of the ratio-0 trace; nullopt when ratio 0 is not in the list.
  std::optional<double> baseline_residual;
};

// Median of the last ceil(fraction * n) values.
double TailMedian(const std::vector<double>& values, double fraction);

// All traces share one warm-started theta and continue its gain schedule.
// A trace fails when its residual exceeds failure_factor * the baseline.
ConvergenceResult ConvergenceStudy(const VqeConfig& base,
                                   const PauliSum& h,
                                   const ConvergeSettings& settings,
                                   int threads);

// ---- Fidelity report ------------------------------------------------------

struct ReportEntry {
  AnsatzSpec ansatz;
  std::string hamiltonian;  // optional; enables the measurement column

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ReportSettings {
  std::vector<ReportEntry> entries;  // empty means the four reference configs
  int draws = 100;

  std::vector<ReportEntry> ResolvedEntries() const;

  friend bool operator==(const ReportSettings&,
                         const ReportSettings&) = default;
};

struct FidelityRow {
  AnsatzSpec ansatz;
  std::size_t parameters = 0;
  std::size_t gates = 0;
  std::size_t fault_sites = 0;
  std::size_t depth = 0;
  std::optional<std::size_t> measurement_circuits;
  double average_fidelity = 0.0;
  double er_one_fault = 0.0;
  std::uint64_t seed = 0;
};

std::vector<FidelityRow> FidelityReport(const ReportSettings& settings,
                                        std::uint64_t seed, int threads);
void WriteFidelityReportCsv(std::ostream& out,
                            const std::vector<FidelityRow>& rows);
std::string FormatFidelityReport(const std::vector<FidelityRow>& rows);

// ---- Fault map ------------------------------------------------------------

struct FaultMapSettings {
  AnsatzSpec ansatz;
  std::vector<double> theta;  // empty means uniform random from the seed
  bool include_preparation = true;
  bool include_measurement = false;

  friend bool operator==(const FaultMapSettings&,
                         const FaultMapSettings&) = default;
};

struct FaultMap {
  Circuit circuit;
  std::vector<double> theta;
  FidelityMap entries;
  std::vector<std::size_t> layers;  // per entry; preparation is layer 0
};

FaultMap FaultMapExport(const FaultMapSettings& settings, std::uint64_t seed);
void WriteFaultMapCsv(std::ostream& out, const FaultMap& map);

// ---- Artifacts ------------------------------------------------------------

// UTC timestamp "YYYYmmddTHHMMSSZ".
std::string TimestampRunId();

// <root>/<experiment>/<run_id>, created along with its runs/ child.
std::filesystem::path PrepareArtifactDir(const std::filesystem::path& root,
                                         std::string_view experiment,
                                         std::string_view run_id);

// Throws ErrorCode::kData when the file cannot be written.
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

void WriteSweepSummaryCsv(std::ostream& out, const SweepResult& result);
void WriteConvergenceSummaryCsv(std::ostream& out,
                                const ConvergenceResult& result);
void WriteConvergenceTracesCsv(std::ostream& out,
                               const ConvergenceResult& result);
nlohmann::json SweepPointToJson(const SweepPoint& point);

}  // namespace vqelab

#endif  // VQELAB_EXPERIMENTS_H_
