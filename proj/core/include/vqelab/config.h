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

// JSON experiment documents. Every object rejects keys it does not know;
// absent keys keep their defaults. schema/config.schema.json describes the
// same layout.

#ifndef VQELAB_CONFIG_H_
#define VQELAB_CONFIG_H_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "vqelab/experiments.h"
#include "vqelab/vqe.h"

namespace vqelab {

struct ExperimentConfig {
  VqeConfig vqe;
  SweepSettings sweep;
  ConvergeSettings converge;
  ReportSettings report;
  FaultMapSettings faultmap;
  // Empty: $VQELAB_OUT, then "out".
  std::string output_dir;
  int threads = 1;

  void Validate() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

// Throws ErrorCode::kConfig naming the offending key path.
ExperimentConfig ExperimentConfigFromJson(const nlohmann::json& j);
nlohmann::json ExperimentConfigToJson(const ExperimentConfig& config);

// kData when the file cannot be read, kConfig when it is not valid.
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

VqeConfig VqeConfigFromJson(const nlohmann::json& j);
nlohmann::json VqeConfigToJson(const VqeConfig& config);

// FNV-1a of the compact serialization, as 16 hex digits.
std::string ConfigHash(const nlohmann::json& j);

}  // namespace vqelab

#endif  // VQELAB_CONFIG_H_
