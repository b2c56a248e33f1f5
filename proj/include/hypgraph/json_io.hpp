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

#ifndef HYPGRAPH_JSON_IO_HPP
#define HYPGRAPH_JSON_IO_HPP

#include <string>

#include "hypgraph/hyperbolicity.hpp"
#include "hypgraph/metric.hpp"
#include "hypgraph/probes.hpp"
#include "hypgraph/regime.hpp"

// Single-line JSON renderings, keys in declaration order of each type,
// newline-terminated.
namespace hypgraph {

std::string half_decimal(int doubled);  // "0", "0.5", "1", ...

std::string to_json_line(const HypResult& r, bool include_witness);
std::string to_json_line(const DiameterReport& r);
std::string to_json_line(const RegimePrediction& r);
std::string to_json_line(const ProbeReport& r);
std::string survey_json_line(const SurveyConfig& cfg, const SurveyResult& res);

}  // namespace hypgraph

#endif  // HYPGRAPH_JSON_IO_HPP
