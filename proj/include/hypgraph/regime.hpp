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

#ifndef HYPGRAPH_REGIME_HPP
#define HYPGRAPH_REGIME_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypgraph/graph.hpp"

namespace hypgraph {

// Which density regime a (n, p) point falls into, by the finite-n
// surrogate of the asymptotic case split. "Boundary" means no guard held
// with the configured margins, so no prediction is made.
enum class RegimeCase { kI, kII, kIII, kIV, kV, kBoundary };

std::string regime_case_name(RegimeCase c);

struct PredictOptions {
  // The asymptotic conditions d^j/n - 2 ln n -> +-inf have no finite-n
  // meaning; an additive margin of tau on that expression stands in for
  // them, and values within (-tau, tau) yield Boundary.
  double tau = 10.0;
  // Case II upper guard is (2 + tau2) n ln n, mirroring (2+o(1)) n ln n.
  double tau2 = 0.1;
  // Dense window on (1-p) n^2: below eps_lo the complement is empty in
  // expectation (case V); above k_hi the dense analysis no longer applies.
  double eps_lo = 0.01;
  double k_hi = 100.0;
  int j_max = 64;
};

struct MarginEntry {
  int j = 0;
  double value = 0.0;  // d^j/n - 2 ln n
};

// Limiting split of delta over {0, 1/2, 1} for p = 1 - 2c/n^2.
struct DensePrediction {
  double p0 = 0.0;      // e^{-c}
  double p_half = 0.0;  // c e^{-c}
  double p1 = 0.0;      // 1 - (c+1) e^{-c}
};

// Returns (e^{-c}, c e^{-c}, 1 - (c+1) e^{-c}); components sum to 1.
DensePrediction dense_probabilities(double c);

// The largest even i >= 2 with d^{i-1} <= n ln n / 16 (clamped to 2 when
// even i = 4 already fails), together with q = exp(-d^{i-1} / (2n)).
struct LowerBoundLevel {
  int i = 2;
  double q = 1.0;
};

LowerBoundLevel compute_i(Vertex n, double d);

// (d^{2i} / 384) q^16 with (i, q) from compute_i, evaluated in log space.
// Diagnostic only; the quantity is asymptotic.
double first_moment_estimate(Vertex n, double d);

struct RegimePrediction {
  Vertex n = 0;
  double p = 0.0;
  double d = 0.0;  // expected degree p(n-1)
  int j = 0;       // smallest j >= 2 with margin(j) >= tau; 0 when none
  int i = 0;
  double q = 0.0;
  RegimeCase regime = RegimeCase::kBoundary;
  std::optional<int> exact_delta_doubled;                   // cases I, III, V
  std::optional<std::pair<int, int>> interval_delta_doubled;  // case II
  std::optional<DensePrediction> distribution;              // case IV
  double c = 0.0;  // complement intensity (1-p) n^2 / 2, case IV
  std::vector<MarginEntry> margins;  // the margin values actually computed
  // True when d sits below the theorem's validity floor
  // ln^5 n / (ln ln n)^2; desk-scale n always trips this.
  bool asymptotics_suspect = false;
};

// Evaluates the case logic at finite n. p = 0 is an input error; n >= 2.
RegimePrediction predict(Vertex n, double p, const PredictOptions& opts = {});

}  // namespace hypgraph

#endif  // HYPGRAPH_REGIME_HPP
