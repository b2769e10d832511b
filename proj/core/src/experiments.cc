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

#include "vqelab/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vqelab/energy.h"
#include "vqelab/error.h"
#include "vqelab/oracle.h"
#include "vqelab/parallel.h"
#include "vqelab/stats.h"

namespace vqelab {

std::vector<double> SweepSettings::ResolvedDistances() const {
  if (!distances.empty()) return distances;
  std::vector<double> d;
  for (int i = 2; i <= 20; ++i) d.push_back(i / 10.0);
  return d;
}

std::string HamiltonianFileName(double distance) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "d_%.2f.ham", distance);
  return buf;
}

double SweepResult::ArgminDistance(double ratio) const {
  const SweepPoint* best = nullptr;
  for (const SweepPoint& p : points) {
    if (p.ratio != ratio) continue;
    if (best == nullptr || p.mean < best->mean) best = &p;
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kUndefined, "no sweep points at the given ratio");
  }
  return best->distance;
}

SweepResult DissociationSweep(const VqeConfig& base,
                              const SweepSettings& settings, int threads,
                              std::ostream* warnings) {
  if (settings.reps == 0) {
    throw Error(ErrorCode::kConfig, "sweep needs at least one repetition");
  }
  for (double r : settings.ratios) NoiseConfig::ErroneousRatio(r).Validate();

  SweepResult result;
  struct Loaded {
    std::size_t index;
    double distance;
    std::string path;
    PauliSum h;
    double lambda_min;
  };
  std::vector<Loaded> loaded;
  const std::vector<double> distances = settings.ResolvedDistances();
  for (std::size_t di = 0; di < distances.size(); ++di) {
    const std::filesystem::path path =
        std::filesystem::path(settings.data_dir) /
        HamiltonianFileName(distances[di]);
    if (!std::filesystem::exists(path)) {
      result.missing_files.push_back(path.string());
      result.partial = true;
      if (warnings) *warnings << "warning: skipping missing " << path.string() << '\n';
      continue;
    }
    PauliSum h = LoadHamiltonian(path);
    const double lambda = ExactMinEigenvalue(h).energy;
    loaded.push_back({di, distances[di], path.string(), std::move(h), lambda});
  }

  const std::size_t n_ratios = settings.ratios.size();
  const std::size_t reps = settings.reps;
  for (const Loaded& l : loaded) {
    for (double r : settings.ratios) {
      SweepPoint p;
      p.distance = l.distance;
      p.ratio = r;
      p.lambda_min = l.lambda_min;
      p.energies.resize(reps);
      p.noiseless_energies.resize(reps);
      p.seeds.resize(reps);
      result.points.push_back(std::move(p));
    }
  }

  const std::size_t n_jobs = loaded.size() * n_ratios * reps;
  ParallelFor(n_jobs, threads, [&](std::size_t job) {
    const std::size_t li = job / (n_ratios * reps);
    const std::size_t ri = (job / reps) % n_ratios;
    const std::size_t rep = job % reps;
    const Loaded& l = loaded[li];
    VqeConfig cfg = base;
    cfg.hamiltonian = l.path;
    cfg.noise = NoiseConfig::ErroneousRatio(settings.ratios[ri]);
    cfg.noise.include_basis_rotations = base.noise.include_basis_rotations;
    cfg.seed = DeriveSeed(base.seed, {l.index, ri, rep});
    cfg.record_parameters = false;
    const RunRecord run = RunVqe(cfg, l.h);
    SweepPoint& p = result.points[li * n_ratios + ri];
    p.energies[rep] = run.final_energy;
    p.noiseless_energies[rep] = run.final_energy_noiseless;
    p.seeds[rep] = cfg.seed;
  });

  for (SweepPoint& p : result.points) {
    p.mean = Mean(p.energies);
    p.p05 = PercentileNearestRank(p.energies, 5.0);
    p.p95 = PercentileNearestRank(p.energies, 95.0);
  }
  return result;
}

double TailMedian(const std::vector<double>& values, double fraction) {
  if (values.empty()) {
    throw Error(ErrorCode::kUndefined, "tail median of an empty trace");
  }
  const auto n = static_cast<double>(values.size());
  std::size_t count = static_cast<std::size_t>(std::ceil(fraction * n));
  count = std::clamp<std::size_t>(count, 1, values.size());
  return Median(std::span(values).last(count));
}

ConvergenceResult ConvergenceStudy(const VqeConfig& base, const PauliSum& h,
                                   const ConvergeSettings& settings,
                                   int threads) {
  if (settings.warm_iters == 0 || settings.run_iters == 0) {
    throw Error(ErrorCode::kConfig,
                "convergence study needs warm_iters and run_iters >= 1");
  }
  if (!(settings.tail_fraction > 0.0 && settings.tail_fraction <= 1.0)) {
    throw Error(ErrorCode::kConfig, "tail_fraction must be in (0, 1]");
  }
  ConvergenceResult result;
  result.lambda_min = ExactMinEigenvalue(h).energy;

  VqeConfig warm = base;
  warm.seed = RunSeeds::Derive(base.seed).warm_start;
  warm.initial = {};
  if (settings.warm_spsa) warm.spsa = *settings.warm_spsa;
  result.warm_theta = WarmStart(warm, h, settings.warm_iters);
  result.warm_energy =
      EnergyEstimator(BuildRyrz(base.ansatz), h, base.estimator)
          .Exact(result.warm_theta);

  // Every trace shares the optimizer and noise seeds, so traces differ only
  // through the configured ratio.
  const std::uint64_t trace_seed = DeriveSeed(base.seed, {5});
  result.traces.resize(settings.ratios.size());
  ParallelFor(settings.ratios.size(), threads, [&](std::size_t i) {
    VqeConfig cfg = base;
    cfg.seed = trace_seed;
    cfg.noise = NoiseConfig::ErroneousRatio(settings.ratios[i]);
    cfg.noise.include_basis_rotations = base.noise.include_basis_rotations;
    cfg.initial = {InitKind::kExplicit, result.warm_theta, 0};
    cfg.iteration_offset = settings.warm_iters;
    cfg.budget = Budget{};
    cfg.budget.max_iterations = settings.run_iters;
    cfg.record_parameters = false;
    ConvergenceTrace& trace = result.traces[i];
    trace.ratio = settings.ratios[i];
    trace.run = RunVqe(cfg, h);
    for (const IterationRecord& it : trace.run.iterations) {
      trace.energies.push_back(it.energy);
      trace.erroneous.push_back(it.erroneous());
    }
    trace.tail_median = TailMedian(trace.energies, settings.tail_fraction);
    trace.residual = trace.tail_median - result.lambda_min;
  });

  for (const ConvergenceTrace& t : result.traces) {
    if (t.ratio == 0.0) {
      result.baseline_residual = t.residual;
      break;
    }
  }
  if (result.baseline_residual) {
    for (ConvergenceTrace& t : result.traces) {
      t.failed = t.residual > settings.failure_factor * *result.baseline_residual;
    }
  }
  return result;
}

std::vector<ReportEntry> ReportSettings::ResolvedEntries() const {
  if (!entries.empty()) return entries;
  return {{{2, 1, Entanglement::kFullPairwise}, "data/h2/d_0.70.ham"},
          {{2, 20, Entanglement::kFullPairwise}, "data/h2/d_0.70.ham"},
          {{6, 1, Entanglement::kFullPairwise}, "data/h4/d_1.00.ham"},
          {{6, 20, Entanglement::kFullPairwise}, "data/h4/d_1.00.ham"}};
}

std::vector<FidelityRow> FidelityReport(const ReportSettings& settings,
                                        std::uint64_t seed, int threads) {
  if (settings.draws < 1) {
    throw Error(ErrorCode::kConfig, "fidelity report needs draws >= 1");
  }
  std::vector<FidelityRow> rows;
  const std::vector<ReportEntry> entries = settings.ResolvedEntries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const ReportEntry& e = entries[i];
    const Circuit c = BuildRyrz(e.ansatz);
    FidelityRow row;
    row.ansatz = e.ansatz;
    row.parameters = c.n_params();
    row.gates = c.size();
    row.fault_sites = FaultSites(c).size();
    row.depth = Depth(c);
    if (!e.hamiltonian.empty()) {
      const PauliSum h = LoadHamiltonian(e.hamiltonian);
      if (h.n_qubits() != e.ansatz.n_qubits) {
        throw Error(ErrorCode::kDimension,
                    e.hamiltonian + " does not match the ansatz width");
      }
      row.measurement_circuits = MeasurementCircuits(h).size();
    }
    row.seed = DeriveSeed(seed, {i});
    Rng rng(row.seed);
    row.average_fidelity = AverageFidelity(c, settings.draws, rng, threads);
    row.er_one_fault = ErOneFault(c);
    rows.push_back(row);
  }
  return rows;
}

void WriteFidelityReportCsv(std::ostream& out,
                            const std::vector<FidelityRow>& rows) {
  out << "qubits,layers,entanglement,parameters,gates,fault_sites,depth,"
         "measurement_circuits,average_fidelity,er_one_fault,seed\n";
  for (const FidelityRow& r : rows) {
    out << r.ansatz.n_qubits << ',' << r.ansatz.layers << ','
        << EntanglementName(r.ansatz.entanglement) << ',' << r.parameters
        << ',' << r.gates << ',' << r.fault_sites << ',' << r.depth << ',';
    if (r.measurement_circuits) out << *r.measurement_circuits;
    out << ',' << FormatDouble(r.average_fidelity) << ','
        << FormatDouble(r.er_one_fault) << ',' << r.seed << '\n';
  }
}

std::string FormatFidelityReport(const std::vector<FidelityRow>& rows) {
  std::string text =
      "qubits  layers  params  sites  depth  measurements  avg_fidelity  "
      "ER(#F=1)\n";
  char line[160];
  for (const FidelityRow& r : rows) {
    const std::string meas = r.measurement_circuits
                                 ? std::to_string(*r.measurement_circuits)
                                 : "-";
    std::snprintf(line, sizeof(line),
                  "%6d  %6d  %6zu  %5zu  %5zu  %12s  %12.3f  %8.4f\n",
                  r.ansatz.n_qubits, r.ansatz.layers, r.parameters,
                  r.fault_sites, r.depth, meas.c_str(), r.average_fidelity,
                  r.er_one_fault);
    text += line;
  }
  return text;
}

FaultMap FaultMapExport(const FaultMapSettings& settings, std::uint64_t seed) {
  FaultMap map;
  map.circuit = BuildRyrz(settings.ansatz);
  if (settings.theta.empty()) {
    Rng rng(seed);
    map.theta.resize(map.circuit.n_params());
    for (double& t : map.theta) t = rng.Uniform(0.0, 2.0 * std::numbers::pi);
  } else {
    map.theta = settings.theta;
  }
  const FaultSiteOptions options{settings.include_preparation,
                                 settings.include_measurement};
  map.entries = ExhaustiveFaultSweep(map.circuit, map.theta, options);
  const std::vector<std::size_t> layers = ScheduleLayers(map.circuit);
  const std::size_t depth = Depth(map.circuit);
  for (const FidelityEntry& e : map.entries) {
    switch (e.location.kind) {
      case SiteKind::kPreparation:
        map.layers.push_back(0);
        break;
      case SiteKind::kAfterGate:
        map.layers.push_back(layers[e.location.gate_index]);
        break;
      case SiteKind::kMeasurement:
        map.layers.push_back(depth + 1);
        break;
    }
  }
  return map;
}

void WriteFaultMapCsv(std::ostream& out, const FaultMap& map) {
  out << "site_kind,gate_index,qubit,layer,pauli,fidelity\n";
  for (std::size_t i = 0; i < map.entries.size(); ++i) {
    const FidelityEntry& e = map.entries[i];
    out << SiteKindName(e.location.kind) << ',' << CsvGateIndex(e.location)
        << ',' << e.location.qubit << ',' << map.layers[i] << ','
        << PauliChar(e.pauli) << ',' << FormatDouble(e.fidelity) << '\n';
  }
}

std::string TimestampRunId() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &utc);
  return buf;
}

std::filesystem::path PrepareArtifactDir(const std::filesystem::path& root,
                                         std::string_view experiment,
                                         std::string_view run_id) {
  const std::filesystem::path dir = root / experiment / run_id;
  std::error_code ec;
  std::filesystem::create_directories(dir / "runs", ec);
  if (ec) {
    throw Error(ErrorCode::kData,
                "cannot create " + dir.string() + ": " + ec.message());
  }
  return dir;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kData, "cannot write " + path.string());
}

void WriteSweepSummaryCsv(std::ostream& out, const SweepResult& result) {
  out << "distance,ratio,reps,mean,p05,p95,min,max,noiseless_mean,"
         "lambda_min\n";
  for (const SweepPoint& p : result.points) {
    const auto [lo, hi] = std::minmax_element(p.energies.begin(), p.energies.end());
    out << FormatDouble(p.distance) << ',' << FormatDouble(p.ratio) << ','
        << p.energies.size() << ',' << FormatDouble(p.mean) << ','
        << FormatDouble(p.p05) << ',' << FormatDouble(p.p95) << ','
        << FormatDouble(*lo) << ',' << FormatDouble(*hi) << ','
        << FormatDouble(Mean(p.noiseless_energies)) << ','
        << FormatDouble(p.lambda_min) << '\n';
  }
}

void WriteConvergenceSummaryCsv(std::ostream& out,
                                const ConvergenceResult& result) {
  out << "ratio,iterations,erroneous_iterations,tail_median,residual,"
         "lambda_min,failed\n";
  for (const ConvergenceTrace& t : result.traces) {
    const auto flagged = std::count(t.erroneous.begin(), t.erroneous.end(), true);
    out << FormatDouble(t.ratio) << ',' << t.energies.size() << ',' << flagged
        << ',' << FormatDouble(t.tail_median) << ','
        << FormatDouble(t.residual) << ',' << FormatDouble(result.lambda_min)
        << ',' << (t.failed ? 1 : 0) << '\n';
  }
}

void WriteConvergenceTracesCsv(std::ostream& out,
                               const ConvergenceResult& result) {
  out << "ratio,t,energy,erroneous\n";
  for (const ConvergenceTrace& tr : result.traces) {
    for (std::size_t i = 0; i < tr.energies.size(); ++i) {
      out << FormatDouble(tr.ratio) << ',' << tr.run.iterations[i].t << ','
          << FormatDouble(tr.energies[i]) << ',' << (tr.erroneous[i] ? 1 : 0)
          << '\n';
    }
  }
}

nlohmann::json SweepPointToJson(const SweepPoint& point) {
  return {{"distance", point.distance},
          {"ratio", point.ratio},
          {"lambda_min", point.lambda_min},
          {"energies", point.energies},
          {"noiseless_energies", point.noiseless_energies},
          {"seeds", point.seeds},
          {"mean", point.mean},
          {"p05", point.p05},
          {"p95", point.p95},
          {"percentile_method", "nearest_rank"}};
}

}  // namespace vqelab
