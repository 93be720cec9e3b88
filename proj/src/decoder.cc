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

#include "jointdec/decoder.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "jointdec/error.h"

namespace jointdec {

namespace {

void check_max_len(int max_len) {
  if (max_len < 1) {
    throw ValidationError("max_len must be >= 1, got " +
                          std::to_string(max_len));
  }
}

// Wraps model queries so failures carry the decode step index.
ProbDist query(const ConditionalLM& model, std::span<const int32_t> prefix,
               const Observation& obs, const ContextSpec* ctx, size_t step) {
  try {
    return model.next_dist(prefix, obs, ctx);
  } catch (const Error& e) {
    throw Error("model query failed at step " + std::to_string(step) + ": " +
                e.what());
  }
}

}  // namespace

bool hypothesis_better(const BeamHypothesis& a, const BeamHypothesis& b) {
  if (a.cum_log_fused != b.cum_log_fused) {
    return a.cum_log_fused > b.cum_log_fused;
  }
  return std::lexicographical_compare(a.tokens.begin(), a.tokens.end(),
                                      b.tokens.begin(), b.tokens.end());
}

DecodeResult joint_greedy_decode(const ConditionalLM& model,
                                 const Observation& obs,
                                 const ContextSpec& ctx, double alpha,
                                 int max_len) {
  check_max_len(max_len);
  const int32_t eos = model.vocab().eos_id();
  DecodeResult result;
  while (static_cast<int>(result.tokens.size()) < max_len) {
    const size_t step = result.tokens.size();
    // Both streams see the same shared prefix.
    ProbDist p_ctx = query(model, result.tokens, obs, &ctx, step);
    ProbDist p_noctx = query(model, result.tokens, obs, nullptr, step);
    ScoreVector fused = fuse_score(p_ctx, p_noctx, alpha);
    const int32_t chosen = fused.argmax();

    result.logprob_ctx += std::log(p_ctx[chosen]);
    result.logprob_noctx += std::log(p_noctx[chosen]);
    result.steps.push_back(
        DecodeStep{std::move(p_ctx), std::move(p_noctx), std::move(fused),
                   chosen});
    result.tokens.push_back(chosen);
    if (chosen == eos) return result;
  }
  result.truncated = true;
  return result;
}

std::vector<BeamHypothesis> joint_beam_decode(const ConditionalLM& model,
                                              const Observation& obs,
                                              const ContextSpec& ctx,
                                              double alpha, int beam_width,
                                              int max_len) {
  check_max_len(max_len);
  if (beam_width < 1) {
    throw ValidationError("beam_width must be >= 1, got " +
                          std::to_string(beam_width));
  }
  if (alpha < 0.0) {
    throw UsageError(
        "beam decoding requires alpha >= 0 (log-domain scores need "
        "positive fused mass); suppression is greedy-only");
  }
  const int32_t eos = model.vocab().eos_id();
  const int32_t vocab_size = model.vocab().size();

  std::vector<BeamHypothesis> active{BeamHypothesis{}};
  std::vector<BeamHypothesis> finished;

  for (int step = 0; step < max_len && !active.empty(); ++step) {
    std::vector<BeamHypothesis> candidates;
    candidates.reserve(active.size() * vocab_size);
    for (const BeamHypothesis& hyp : active) {
      const ProbDist p_ctx =
          query(model, hyp.tokens, obs, &ctx, static_cast<size_t>(step));
      const ProbDist p_noctx =
          query(model, hyp.tokens, obs, nullptr, static_cast<size_t>(step));
      const ScoreVector fused = fuse_normalized(p_ctx, p_noctx, alpha);
      for (int32_t v = 0; v < vocab_size; ++v) {
        if (fused[v] <= 0.0) continue;  // never expand zero-probability paths
        BeamHypothesis next;
        next.tokens = hyp.tokens;
        next.tokens.push_back(v);
        next.cum_log_fused = hyp.cum_log_fused + std::log(fused[v]);
        next.finished = (v == eos);
        candidates.push_back(std::move(next));
      }
    }
    std::sort(candidates.begin(), candidates.end(), hypothesis_better);
    if (static_cast<int>(candidates.size()) > beam_width) {
      candidates.resize(beam_width);
    }
    active.clear();
    for (BeamHypothesis& cand : candidates) {
      if (cand.finished) {
        finished.push_back(std::move(cand));
      } else {
        active.push_back(std::move(cand));
      }
    }
  }

  // Length-limited survivors stay in the ranked output, marked unfinished.
  for (BeamHypothesis& hyp : active) finished.push_back(std::move(hyp));
  std::sort(finished.begin(), finished.end(), hypothesis_better);
  if (static_cast<int>(finished.size()) > beam_width) {
    finished.resize(beam_width);
  }
  return finished;
}

StreamResult greedy_stream_decode(const ConditionalLM& model,
                                  const Observation& obs,
                                  const ContextSpec* ctx, int max_len) {
  check_max_len(max_len);
  const int32_t eos = model.vocab().eos_id();
  StreamResult result;
  while (static_cast<int>(result.tokens.size()) < max_len) {
    const size_t step = result.tokens.size();
    ProbDist dist = query(model, result.tokens, obs, ctx, step);
    const int32_t chosen = argmax_lowest(dist.span());
    result.dists.push_back(std::move(dist));
    result.tokens.push_back(chosen);
    if (chosen == eos) return result;
  }
  result.truncated = true;
  return result;
}

}  // namespace jointdec
