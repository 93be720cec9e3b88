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

#pragma once

#include <memory>

#include "jointdec/model.h"

namespace jointdec {

/// Parameters of the noisy-channel stand-in for a speech model.
///
/// emission[v][o] is the probability of observing token o when the true
/// token is v (rows sum to 1). prior[u][v] is the transition probability
/// of v after u; the EOS row doubles as the sentence-start distribution,
/// and the EOS column must be zero everywhere (termination is driven by
/// the observation length, not the prior).
struct NoisyChannelParams {
  Vocab vocab;
  std::vector<std::vector<double>> emission;
  std::vector<std::vector<double>> prior;
  double ctx_boost = 1.0;  // beta >= 1

  bool operator==(const NoisyChannelParams&) const = default;
};

/// Toy conditional model: at step t the unnormalized score of content
/// token v is prior(v | last) * emission(obs[t] | v) * B(v), where B(v) is
/// ctx_boost when appending v starts or extends a partial match of any
/// context entity, else 1. Once the observation is exhausted all mass is
/// on EOS. With ctx_boost == 1 or an empty context, the output does not
/// depend on the context at all.
class NoisyChannelLM : public ConditionalLM {
 public:
  explicit NoisyChannelLM(NoisyChannelParams params);

  const Vocab& vocab() const override { return params_.vocab; }
  const NoisyChannelParams& params() const { return params_; }

  ProbDist next_dist(std::span<const int32_t> prefix, const Observation& obs,
                     const ContextSpec* ctx) const override;

 private:
  NoisyChannelParams params_;
};

/// True when appending `token` to `prefix` leaves some suffix of the
/// extended sequence equal to a prefix of an entity in `ctx` (including a
/// freshly started or just-completed match). This is what the boost
/// factor keys on: matches may restart and overlap.
bool extends_entity_match(const ContextSpec& ctx,
                          std::span<const int32_t> prefix, int32_t token);

}  // namespace jointdec
