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

#include "jointdec/decoder.h"

namespace jointdec {

/// Tractability bounds for exhaustive search: vocab^max_len may not
/// exceed one million sequences.
struct OracleBudget {
  int max_vocab = 8;
  int max_len = 6;
};

struct OracleResult {
  TokenSeq tokens;
  double score = 0.0;  // sum over steps of log fuse_normalized[token]
};

/// Brute-force reference for joint decoding: enumerates every sequence
/// the decoder could emit (EOS-terminated up to max_len, or exactly
/// max_len without EOS), scores each as the sum of per-step logs of the
/// normalized fused probability, and returns the best, ties broken
/// lexicographically. Agrees with joint_beam_decode at saturating width.
/// Requires alpha >= 0; throws UsageError when the budget is exceeded.
OracleResult exhaustive_joint_decode(const ConditionalLM& model,
                                     const Observation& obs,
                                     const ContextSpec& ctx, double alpha,
                                     int max_len, const OracleBudget& budget);

/// Position-by-position scan reference for occurrence counting:
/// non-overlapping, greedy-left.
int64_t scan_entity_occurrences(std::span<const int32_t> seq,
                                const Phrase& phrase);

}  // namespace jointdec
