// Copyright 2026 The hypgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypgraph/json_io.hpp"

#include <json.hpp>

namespace hypgraph {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string finish(ordered_json& j) { return j.dump() + "\n"; }

}  // namespace

std::string half_decimal(int doubled) {
  std::string s = std::to_string(doubled / 2);
  if (doubled % 2 != 0) s += ".5";
  return s;
}

std::string to_json_line(const HypResult& r, bool include_witness) {
  ordered_json j;
  j["delta_doubled"] = r.delta_doubled;
  j["delta"] = half_decimal(r.delta_doubled);
  if (include_witness) {
    if (r.witness)
      j["witness"] = *r.witness;
    else
      j["witness"] = nullptr;
  }
  j["algorithm"] = algorithm_name(r.algorithm);
  j["pairs_scanned"] = r.pairs_scanned;
  j["runtime_ms"] = r.runtime_ms;
  return finish(j);
}

std::string to_json_line(const DiameterReport& r) {
  ordered_json j;
  if (r.diameter)
    j["diameter"] = *r.diameter;
  else
    j["diameter"] = "inf";
  j["max_component_diameter"] = r.max_component_diameter;
  j["eccentricities"] = r.eccentricities;
  j["per_component"] = r.component_diameters;
  return finish(j);
}

std::string to_json_line(const RegimePrediction& r) {
  ordered_json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["d"] = r.d;
  j["j"] = r.j;
  j["i"] = r.i;
  j["q"] = r.q;
  j["case"] = regime_case_name(r.regime);
  if (r.exact_delta_doubled)
    j["predicted_delta_doubled"] = *r.exact_delta_doubled;
  else if (r.interval_delta_doubled)
    j["predicted_interval"] = ordered_json::array(
        {r.interval_delta_doubled->first, r.interval_delta_doubled->second});
  else if (r.distribution)
    j["predicted_distribution"] = {{"0", r.distribution->p0},
                                   {"0.5", r.distribution->p_half},
                                   {"1", r.distribution->p1}};
  else
    j["predicted_delta_doubled"] = nullptr;
  ordered_json margins = ordered_json::array();
  for (const MarginEntry& m : r.margins)
    margins.push_back(ordered_json{{"j", m.j}, {"margin", m.value}});
  j["margins"] = margins;
  j["asymptotics_suspect"] = r.asymptotics_suspect;
  return finish(j);
}

std::string to_json_line(const ProbeReport& r) {
  ordered_json j;
  j["vertex"] = r.vertex;
  j["radius"] = r.radius;
  j["sphere_sizes"] = r.sphere_sizes;
  j["ball_sizes"] = r.ball_sizes;
  j["is_tree_ball"] = ordered_json::array();
  for (const auto b : r.is_tree_ball) j["is_tree_ball"].push_back(b != 0);
  j["unique_parent_ok"] = ordered_json::array();
  for (const auto b : r.unique_parent_ok)
    j["unique_parent_ok"].push_back(b != 0);
  j["left_size"] = r.left_size;
  j["right_size"] = r.right_size;
  return finish(j);
}

std::string survey_json_line(const SurveyConfig& cfg, const SurveyResult& res) {
  ordered_json j;
  j["samples"] = cfg.samples;
  j["radius"] = cfg.radius;
  j["seed"] = cfg.seed;
  j["forbidden_size"] = cfg.forbidden.size();
  j["mean_degree"] = res.mean_degree;
  j["sphere_ratio_mean"] =
      std::vector<double>(res.ratio_mean.begin() + 1, res.ratio_mean.end());
  j["sphere_ratio_sd"] =
      std::vector<double>(res.ratio_sd.begin() + 1, res.ratio_sd.end());
  j["tree_ball_fraction"] = res.tree_ball_fraction;
  return finish(j);
}

}  // namespace hypgraph
