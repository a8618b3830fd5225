// Copyright 2026 The magnon-entangle Authors
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

// JSON run configuration for the command-line tool.
//
//   {
//     "params":   {"g1": 3.2, "omega_nl": 0.6, ...},
//     "material": {"spin_density": 4.22e27, "diameter": 1e-3, "spin": 2.5},
//     "job": {
//       "x": {"name": "delta_c", "lo": -10, "hi": 10, "steps": 201},
//       "y": {"name": "delta_m", "lo": -10, "hi": 10, "steps": 201},
//       "binding": "none",
//       "inner_scan": {"name": "delta_m", "lo": 0.1, "hi": 20, "steps": 401},
//       "quantities": ["e_am1", "r_min"],
//       "threads": 0
//     }
//   }
//
// Unknown keys are rejected at every level; missing params keep the defaults.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "magnon_entangle/magnon_entangle.h"

namespace magnon::cli {

/// Bad configuration or command line; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Library call failed for numerical reasons; maps to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AxisSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
};

struct JobSpec {
  AxisSpec x;
  AxisSpec y;
  std::string binding = "none";
  std::optional<AxisSpec> inner_scan;
  std::vector<std::string> quantities;
  std::optional<unsigned> threads;
};

struct Config {
  me_params params{};
  me_material material{};
  std::optional<JobSpec> job;

  Config();
};

Config parse_config(const std::string& json_text);
Config load_config(const std::string& path);

/// Throws ConfigError or NumericalError depending on the status.
void check(me_status status);

struct JobDeleter {
  void operator()(me_sweep_job* job) const noexcept { me_sweep_job_destroy(job); }
};
struct GridDeleter {
  void operator()(me_grid* grid) const noexcept { me_grid_destroy(grid); }
};
using JobHandle = std::unique_ptr<me_sweep_job, JobDeleter>;
using GridHandle = std::unique_ptr<me_grid, GridDeleter>;

JobHandle make_job(const me_params& base, const JobSpec& spec);

}  // namespace magnon::cli
