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

#include "config.hpp"

#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace magnon::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

double number(const json& v, std::string_view where) {
  if (!v.is_number()) throw ConfigError(std::string(where) + ": expected a number");
  return v.get<double>();
}

AxisSpec parse_axis(const json& obj, const std::string& where) {
  reject_unknown(obj, where, {"name", "lo", "hi", "steps"});
  for (const char* k : {"name", "lo", "hi", "steps"})
    if (!obj.contains(k)) throw ConfigError(where + ": missing '" + k + "'");
  if (!obj["name"].is_string()) throw ConfigError(where + ".name: expected a string");
  if (!obj["steps"].is_number_integer()) throw ConfigError(where + ".steps: expected an integer");
  AxisSpec a;
  a.name = obj["name"].get<std::string>();
  a.lo = number(obj["lo"], where + ".lo");
  a.hi = number(obj["hi"], where + ".hi");
  a.steps = obj["steps"].get<int>();
  return a;
}

JobSpec parse_job(const json& obj) {
  reject_unknown(obj, "job", {"x", "y", "binding", "inner_scan", "quantities", "threads"});
  if (!obj.contains("x") || !obj.contains("y")) throw ConfigError("job: both 'x' and 'y' axes are required");
  JobSpec job;
  job.x = parse_axis(obj["x"], "job.x");
  job.y = parse_axis(obj["y"], "job.y");
  if (obj.contains("binding")) {
    if (!obj["binding"].is_string()) throw ConfigError("job.binding: expected a string");
    job.binding = obj["binding"].get<std::string>();
  }
  if (obj.contains("inner_scan")) job.inner_scan = parse_axis(obj["inner_scan"], "job.inner_scan");
  if (!obj.contains("quantities") || !obj["quantities"].is_array())
    throw ConfigError("job.quantities: expected an array of names");
  for (const auto& q : obj["quantities"]) {
    if (!q.is_string()) throw ConfigError("job.quantities: expected strings");
    job.quantities.push_back(q.get<std::string>());
  }
  if (obj.contains("threads")) {
    if (!obj["threads"].is_number_unsigned()) throw ConfigError("job.threads: expected a non-negative integer");
    job.threads = obj["threads"].get<unsigned>();
  }
  return job;
}

}  // namespace

Config::Config() {
  me_params_default(&params);
  me_material_default(&material);
}

Config parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root, "config", {"params", "material", "job"});

  Config cfg;
  if (root.contains("params")) {
    const std::map<std::string_view, double*> fields{
        {"kappa", &cfg.params.kappa},       {"gamma1", &cfg.params.gamma1},
        {"gamma2", &cfg.params.gamma2},     {"g1", &cfg.params.g1},
        {"g2", &cfg.params.g2},             {"omega_nl", &cfg.params.omega_nl},
        {"eps_p", &cfg.params.eps_p},       {"delta_c", &cfg.params.delta_c},
        {"delta_m1", &cfg.params.delta_m1}, {"delta_m2", &cfg.params.delta_m2}};
    const json& p = root["params"];
    if (!p.is_object()) throw ConfigError("params: expected an object");
    for (const auto& [key, value] : p.items()) {
      const auto it = fields.find(key);
      if (it == fields.end()) throw ConfigError("params: unknown key '" + key + "'");
      *it->second = number(value, "params." + key);
    }
  }
  if (root.contains("material")) {
    const json& m = root["material"];
    reject_unknown(m, "material", {"spin_density", "diameter", "spin"});
    if (m.contains("spin_density")) cfg.material.spin_density = number(m["spin_density"], "material.spin_density");
    if (m.contains("diameter")) cfg.material.diameter = number(m["diameter"], "material.diameter");
    if (m.contains("spin")) cfg.material.spin = number(m["spin"], "material.spin");
  }
  if (root.contains("job")) cfg.job = parse_job(root["job"]);
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void check(me_status status) {
  if (status == ME_OK) return;
  std::string msg = me_status_string(status);
  const std::string detail = me_last_error();
  if (!detail.empty()) msg += ": " + detail;
  if (status == ME_ERR_INVALID_ARGUMENT) throw ConfigError(msg);
  throw NumericalError(msg);
}

JobHandle make_job(const me_params& base, const JobSpec& spec) {
  me_sweep_job* raw = nullptr;
  check(me_sweep_job_create(&base, &raw));
  JobHandle job(raw);
  check(me_sweep_job_set_axis(job.get(), 'x', spec.x.name.c_str(), spec.x.lo, spec.x.hi, spec.x.steps));
  check(me_sweep_job_set_axis(job.get(), 'y', spec.y.name.c_str(), spec.y.lo, spec.y.hi, spec.y.steps));
  check(me_sweep_job_set_binding(job.get(), spec.binding.c_str()));
  if (spec.inner_scan) {
    const auto& s = *spec.inner_scan;
    check(me_sweep_job_set_inner_scan(job.get(), s.name.c_str(), s.lo, s.hi, s.steps));
  }
  for (const auto& q : spec.quantities) check(me_sweep_job_add_quantity(job.get(), q.c_str()));
  if (spec.threads) check(me_sweep_job_set_threads(job.get(), *spec.threads));
  return job;
}

}  // namespace magnon::cli
