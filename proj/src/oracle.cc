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

#include "jointdec/oracle.h"

#include <cmath>
#include <optional>
#include <string>

#include "jointdec/error.h"

namespace jointdec {

namespace {

struct Search {
  const ConditionalLM& model;
  const Observation& obs;
  const ContextSpec& ctx;
  double alpha;
  int max_len;
  int32_t eos;
  std::optional<OracleResult> best;

  void offer(const TokenSeq& tokens, double score) {
    if (!best.has_value() || score > best->score ||
        (score == best->score &&
         std::lexicographical_compare(tokens.begin(), tokens.end(),
                                      best->tokens.begin(),
                                      best->tokens.end()))) {
      best = OracleResult{tokens, score};
    }
  }

  // Depth-first enumeration over content prefixes; `cum` accumulates the
  // per-step logs left to right, matching the beam's summation order.
  void expand(TokenSeq& prefix, double cum) {
    const ProbDist p_ctx = model.next_dist(prefix, obs, &ctx);
    const ProbDist p_noctx = model.next_dist(prefix, obs, nullptr);
    const ScoreVector fused = fuse_normalized(p_ctx, p_noctx, alpha);
    const bool last_step = static_cast<int>(prefix.size()) + 1 == max_len;
    for (int32_t v = 0; v < fused.size(); ++v) {
      if (fused[v] <= 0.0) continue;  // unreachable path
      const double score = cum + std::log(fused[v]);
      prefix.push_back(v);
      if (v == eos || last_step) {
        offer(prefix, score);
      } else {
        expand(prefix, score);
      }
      prefix.pop_back();
    }
  }
};

}  // namespace

OracleResult exhaustive_joint_decode(const ConditionalLM& model,
                                     const Observation& obs,
                                     const ContextSpec& ctx, double alpha,
                                     int max_len, const OracleBudget& budget) {
  if (alpha < 0.0) {
    throw UsageError("exhaustive_joint_decode requires alpha >= 0");
  }
  if (max_len < 1) throw ValidationError("max_len must be >= 1");
  const int vocab_size = model.vocab().size();
  double sequences = 1.0;
  for (int i = 0; i < budget.max_len; ++i) sequences *= budget.max_vocab;
  if (sequences > 1e6) {
    throw UsageError("oracle budget itself is intractable (vocab^len > 1e6)");
  }
  if (vocab_size > budget.max_vocab || max_len > budget.max_len) {
    throw UsageError("exhaustive search refused: vocab " +
                     std::to_string(vocab_size) + ", max_len " +
                     std::to_string(max_len) + " exceeds budget " +
                     std::to_string(budget.max_vocab) + "^" +
                     std::to_string(budget.max_len));
  }

  Search search{model, obs, ctx, alpha, max_len, model.vocab().eos_id(), {}};
  TokenSeq prefix;
  search.expand(prefix, 0.0);
  if (!search.best.has_value()) {
    throw Error("no sequence with positive probability exists");
  }
  return *search.best;
}

int64_t scan_entity_occurrences(std::span<const int32_t> seq,
                                const Phrase& phrase) {
  if (phrase.empty()) {
    throw ValidationError("entity phrase must be non-empty");
  }
  int64_t count = 0;
  size_t i = 0;
  while (i + phrase.size() <= seq.size()) {
    bool hit = true;
    for (size_t k = 0; k < phrase.size(); ++k) {
      if (seq[i + k] != phrase[k]) {
        hit = false;
        break;
      }
    }
    if (hit) {
      ++count;
      i += phrase.size();
    } else {
      ++i;
    }
  }
  return count;
}

}  // namespace jointdec
