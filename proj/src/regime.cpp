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

#include "hypgraph/regime.hpp"

#include <cmath>

namespace hypgraph {

std::string regime_case_name(RegimeCase c) {
  switch (c) {
    case RegimeCase::kI: return "I";
    case RegimeCase::kII: return "II";
    case RegimeCase::kIII: return "III";
    case RegimeCase::kIV: return "IV";
    case RegimeCase::kV: return "V";
    case RegimeCase::kBoundary: return "BOUNDARY";
  }
  return "BOUNDARY";
}

DensePrediction dense_probabilities(double c) {
  if (!(c > 0.0)) throw InputError("dense_probabilities: c must be positive");
  const double ec = std::exp(-c);
  return {ec, c * ec, 1.0 - (c + 1.0) * ec};
}

LowerBoundLevel compute_i(Vertex n, double d) {
  if (n < 2) throw InputError("compute_i: n must be at least 2");
  if (!(d > 1.0)) throw InputError("compute_i: d must exceed 1");
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_bound = std::log(static_cast<double>(n) * ln_n / 16.0);
  const double ln_d = std::log(d);
  // Largest k with k ln d <= ln(n ln n / 16); i is the largest even
  // integer at most k + 1, and at least 2.
  const double ratio = ln_bound / ln_d;
  int k = static_cast<int>(std::floor(ratio + 1e-12));
  if (k < 0) k = 0;
  int i = (k + 1) % 2 == 0 ? k + 1 : k;
  if (i < 2) i = 2;
  LowerBoundLevel lvl;
  lvl.i = i;
  lvl.q = std::exp(-std::exp(static_cast<double>(i - 1) * ln_d) /
                   (2.0 * static_cast<double>(n)));
  return lvl;
}

double first_moment_estimate(Vertex n, double d) {
  const LowerBoundLevel lvl = compute_i(n, d);
  const double ln_d = std::log(d);
  const double log_q = -std::exp(static_cast<double>(lvl.i - 1) * ln_d) /
                       (2.0 * static_cast<double>(n));
  const double log_e =
      2.0 * lvl.i * ln_d - std::log(384.0) + 16.0 * log_q;
  return std::exp(log_e);
}

RegimePrediction predict(Vertex n, double p, const PredictOptions& opts) {
  if (n < 2) throw InputError("predict: n must be at least 2");
  if (!(p > 0.0 && p <= 1.0))
    throw InputError("predict: p must lie in (0, 1]");

  RegimePrediction out;
  out.n = n;
  out.p = p;
  out.d = p * (static_cast<double>(n) - 1.0);
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_ln_n = std::log(ln_n);
  out.asymptotics_suspect =
      out.d < std::pow(ln_n, 5) / (ln_ln_n * ln_ln_n);

  // Dense window first: the complement carries the whole story there.
  const double complement_mass =
      (1.0 - p) * static_cast<double>(n) * static_cast<double>(n);
  if (complement_mass < opts.eps_lo) {
    out.regime = RegimeCase::kV;
    out.exact_delta_doubled = 0;
    if (out.d > 1.0) {
      const LowerBoundLevel lvl = compute_i(n, out.d);
      out.i = lvl.i;
      out.q = lvl.q;
    }
    return out;
  }
  if (complement_mass <= opts.k_hi) {
    out.regime = RegimeCase::kIV;
    out.c = complement_mass / 2.0;
    out.distribution = dense_probabilities(out.c);
    if (out.d > 1.0) {
      const LowerBoundLevel lvl = compute_i(n, out.d);
      out.i = lvl.i;
      out.q = lvl.q;
    }
    return out;
  }

  if (out.d <= 1.0) return out;  // below any expansion; Boundary
  const LowerBoundLevel lvl = compute_i(n, out.d);
  out.i = lvl.i;
  out.q = lvl.q;

  const double ln_d = std::log(out.d);
  const auto margin_of = [&](int j) {
    return std::exp(static_cast<double>(j) * ln_d - ln_n) - 2.0 * ln_n;
  };
  int j = 0;
  for (int cand = 2; cand <= opts.j_max; ++cand) {
    const double m = margin_of(cand);
    out.margins.push_back({cand, m});
    if (m >= opts.tau) {
      j = cand;
      break;
    }
  }
  if (j == 0) return out;  // no level cleared the margin; Boundary
  if (j > 2 && margin_of(j - 1) > -opts.tau) return out;  // ambiguous level
  out.j = j;

  const double ln_pow = static_cast<double>(j - 1) * ln_d;  // ln d^{j-1}
  const double ln_low_guard = std::log(static_cast<double>(n) * ln_n / 16.0);
  const double ln_high_guard =
      std::log((2.0 + opts.tau2) * static_cast<double>(n) * ln_n);
  if (j % 2 == 0) {
    if (ln_pow <= ln_low_guard) {
      out.regime = RegimeCase::kI;
      out.exact_delta_doubled = j;
    } else if (ln_pow <= ln_high_guard) {
      out.regime = RegimeCase::kII;
      out.interval_delta_doubled = std::make_pair(j - 2, j);
    }
    // Past the high guard no case applies; Boundary.
  } else {
    out.regime = RegimeCase::kIII;
    out.exact_delta_doubled = j - 1;
  }
  return out;
}

}  // namespace hypgraph
