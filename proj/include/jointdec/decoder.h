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

#include "jointdec/fusion.h"
#include "jointdec/model.h"

namespace jointdec {

/// Per-step decode diagnostics: both stream distributions, the fused
/// ranking vector, and the selected token.
struct DecodeStep {
  ProbDist p_ctx;
  ProbDist p_noctx;
  ScoreVector fused;
  int32_t chosen;
};

/// Output of a joint greedy decode. `tokens` is EOS-terminated unless the
/// length limit cut it off (`truncated`). One step per emitted token.
struct DecodeResult {
  TokenSeq tokens;
  std::vector<DecodeStep> steps;
  double logprob_ctx = 0.0;    // sum of log p_ctx(chosen)
  double logprob_noctx = 0.0;  // sum of log p_noctx(chosen)
  bool truncated = false;
};

/// One beam entry: a shared-prefix token sequence feeding both streams,
/// scored by the accumulated log of its normalized fused probabilities.
struct BeamHypothesis {
  TokenSeq tokens;
  double cum_log_fused = 0.0;
  bool finished = false;  // implies tokens ends with EOS
};

/// Output of a plain single-stream greedy decode (the ctx == nullptr
/// baseline, or the pure context stream).
struct StreamResult {
  TokenSeq tokens;
  std::vector<ProbDist> dists;
  bool truncated = false;
};

/// Joint greedy decoding: one shared prefix feeds both streams, whose
/// distributions are fused by fuse_score each step (argmax-equivalent to
/// the normalized form for alpha > -1, and defined for every alpha).
/// The fused argmax, ties to the lowest token id, is forced onto both
/// streams; decoding stops at EOS or after max_len tokens.
DecodeResult joint_greedy_decode(const ConditionalLM& model,
                                 const Observation& obs,
                                 const ContextSpec& ctx, double alpha,
                                 int max_len);

/// Beam-search variant for alpha >= 0 (log-domain scores need positive
/// fused mass; suppression stays greedy-only). Each hypothesis carries one
/// shared prefix; per-step fusion uses fuse_normalized and hypotheses are
/// ranked by cum_log_fused, ties broken lexicographically by token ids.
/// Returns up to beam_width hypotheses, best first; zero-probability
/// extensions are never expanded. Throws UsageError for alpha < 0.
std::vector<BeamHypothesis> joint_beam_decode(const ConditionalLM& model,
                                              const Observation& obs,
                                              const ContextSpec& ctx,
                                              double alpha, int beam_width,
                                              int max_len);

/// Greedy decoding of a single stream (pass nullptr for the context-free
/// stream). Same tie-breaking and stopping rules as the joint decoder.
StreamResult greedy_stream_decode(const ConditionalLM& model,
                                  const Observation& obs,
                                  const ContextSpec* ctx, int max_len);

/// Hypothesis ordering used everywhere: higher score first, then
/// lexicographically smaller token sequence.
bool hypothesis_better(const BeamHypothesis& a, const BeamHypothesis& b);

}  // namespace jointdec
