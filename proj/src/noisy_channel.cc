// Copyright 2026 jointdec contributors
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

#include "jointdec/noisy_channel.h"

#include <cmath>
#include <string>

#include "jointdec/error.h"

namespace jointdec {

namespace {

void check_row_stochastic(const std::vector<std::vector<double>>& matrix,
                          int32_t size, const std::string& name,
                          bool zero_eos_column, int32_t eos_id) {
  if (static_cast<int32_t>(matrix.size()) != size) {
    throw ValidationError(name + " must have one row per vocab token");
  }
  for (int32_t r = 0; r < size; ++r) {
    const auto& row = matrix[r];
    if (static_cast<int32_t>(row.size()) != size) {
      throw ValidationError(name + " row " + std::to_string(r) +
                            " has wrong width");
    }
    double sum = 0.0;
    for (int32_t c = 0; c < size; ++c) {
      if (!(row[c] >= 0.0)) {
        throw ValidationError(name + " entry (" + std::to_string(r) + "," +
                              std::to_string(c) + ") is negative or NaN");
      }
      sum += row[c];
    }
    if (std::abs(sum - 1.0) > kProbSumTolerance) {
      throw ValidationError(name + " row " + std::to_string(r) +
                            " sums to " + std::to_string(sum) +
                            ", expected 1");
    }
    if (zero_eos_column && row[eos_id] != 0.0) {
      throw ValidationError(name + " row " + std::to_string(r) +
                            " puts mass on EOS; termination is driven by "
                            "the observation length");
    }
  }
}

}  // namespace

bool extends_entity_match(const ContextSpec& ctx,
                          std::span<const int32_t> prefix, int32_t token) {
  const size_t n = prefix.size();
  for (const Phrase& entity : ctx.entities) {
    // After appending `token`, a live match of length len means the last
    // len-1 prefix tokens plus the token equal entity[0..len).
    const size_t max_len = std::min(entity.size(), n + 1);
    for (size_t len = 1; len <= max_len; ++len) {
      if (entity[len - 1] != token) continue;
      bool live = true;
      for (size_t k = 0; k + 1 < len; ++k) {
        if (prefix[n - (len - 1) + k] != entity[k]) {
          live = false;
          break;
        }
      }
      if (live) return true;
    }
  }
  return false;
}

NoisyChannelLM::NoisyChannelLM(NoisyChannelParams params)
    : params_(std::move(params)) {
  const int32_t size = params_.vocab.size();
  const int32_t eos = params_.vocab.eos_id();
  check_row_stochastic(params_.emission, size, "emission", false, eos);
  check_row_stochastic(params_.prior, size, "prior", true, eos);
  if (!(params_.ctx_boost >= 1.0)) {
    throw ValidationError("ctx_boost must be >= 1, got " +
                          std::to_string(params_.ctx_boost));
  }
}

ProbDist NoisyChannelLM::next_dist(std::span<const int32_t> prefix,
                                   const Observation& obs,
                                   const ContextSpec* ctx) const {
  check_query(prefix, obs, ctx);
  const int32_t size = params_.vocab.size();
  const int32_t eos = params_.vocab.eos_id();
  const size_t t = prefix.size();
  if (t > obs.tokens.size()) {
    throw ValidationError("prefix length " + std::to_string(t) +
                          " exceeds observation length " +
                          std::to_string(obs.tokens.size()));
  }
  if (t == obs.tokens.size()) {
    return ProbDist::one_hot(size, eos);
  }

  const int32_t last = prefix.empty() ? eos : prefix.back();
  const int32_t observed = obs.tokens[t];
  const bool boosting = ctx != nullptr && !ctx->empty() &&
                        params_.ctx_boost > 1.0;

  std::vector<double> scores(size, 0.0);
  double total = 0.0;
  for (int32_t v = 0; v < size; ++v) {
    if (v == eos) continue;
    double s = params_.prior[last][v] * params_.emission[v][observed];
    if (s > 0.0 && boosting && extends_entity_match(*ctx, prefix, v)) {
      s *= params_.ctx_boost;
    }
    scores[v] = s;
    total += s;
  }
  if (total <= 0.0) {
    // The observed token is outside every reachable emission support;
    // fall back to uniform over content tokens.
    const double p = 1.0 / (size - 1);
    for (int32_t v = 0; v < size; ++v) scores[v] = (v == eos) ? 0.0 : p;
    return ProbDist(std::move(scores));
  }
  for (double& s : scores) s /= total;
  return ProbDist(std::move(scores));
}

}  // namespace jointdec
