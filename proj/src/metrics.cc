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

#include "jointdec/metrics.h"

#include <algorithm>

#include "jointdec/error.h"

namespace jointdec {

EntityScore EntityScore::from_counts(int64_t tp, int64_t hyp, int64_t ref) {
  if (ref <= 0) {
    throw ValidationError(
        "no entity occurs in any reference; the evaluation setup is broken");
  }
  EntityScore score;
  score.true_positives = tp;
  score.hyp_occurrences = hyp;
  score.ref_occurrences = ref;
  score.precision = hyp == 0 ? 1.0
                             : static_cast<double>(tp) /
                                   static_cast<double>(hyp);
  score.recall = static_cast<double>(tp) / static_cast<double>(ref);
  const double pr = score.precision + score.recall;
  score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
  return score;
}

EditCounts edit_alignment(std::span<const int32_t> reference,
                          std::span<const int32_t> hypothesis) {
  const size_t n = reference.size();
  const size_t m = hypothesis.size();
  // dist[i][j] = edit distance between reference[0..i) and hypothesis[0..j).
  std::vector<std::vector<int64_t>> dist(n + 1,
                                         std::vector<int64_t>(m + 1, 0));
  for (size_t i = 1; i <= n; ++i) dist[i][0] = static_cast<int64_t>(i);
  for (size_t j = 1; j <= m; ++j) dist[0][j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      const int64_t diag =
          dist[i - 1][j - 1] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      dist[i][j] = std::min({diag, dist[i - 1][j] + 1, dist[i][j - 1] + 1});
    }
  }

  // Backtrace with fixed preference: match > substitution > deletion >
  // insertion. This makes the breakdown deterministic when several
  // alignments share the minimum cost.
  EditCounts counts;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && reference[i - 1] == hypothesis[j - 1] &&
        dist[i][j] == dist[i - 1][j - 1]) {
      ++counts.matches;
      --i;
      --j;
    } else if (i > 0 && j > 0 && reference[i - 1] != hypothesis[j - 1] &&
               dist[i][j] == dist[i - 1][j - 1] + 1) {
      ++counts.substitutions;
      --i;
      --j;
    } else if (i > 0 && dist[i][j] == dist[i - 1][j] + 1) {
      ++counts.deletions;
      --i;
    } else {
      ++counts.insertions;
      --j;
    }
  }
  return counts;
}

CerBreakdown cer(const std::vector<SequencePair>& corpus) {
  if (corpus.empty()) {
    throw ValidationError("cannot compute CER of an empty corpus");
  }
  CerBreakdown out;
  for (const auto& [reference, hypothesis] : corpus) {
    const EditCounts c = edit_alignment(reference, hypothesis);
    out.counts.matches += c.matches;
    out.counts.substitutions += c.substitutions;
    out.counts.insertions += c.insertions;
    out.counts.deletions += c.deletions;
    out.ref_len += static_cast<int64_t>(reference.size());
  }
  if (out.ref_len <= 0) {
    throw ValidationError("total reference length is zero");
  }
  const double denom = static_cast<double>(out.ref_len);
  out.sub_rate = static_cast<double>(out.counts.substitutions) / denom;
  out.ins_rate = static_cast<double>(out.counts.insertions) / denom;
  out.del_rate = static_cast<double>(out.counts.deletions) / denom;
  out.cer = out.sub_rate + out.ins_rate + out.del_rate;
  return out;
}

int64_t count_occurrences(std::span<const int32_t> seq, const Phrase& phrase) {
  if (phrase.empty()) {
    throw ValidationError("entity phrase must be non-empty");
  }
  int64_t count = 0;
  auto it = seq.begin();
  while (true) {
    it = std::search(it, seq.end(), phrase.begin(), phrase.end());
    if (it == seq.end()) return count;
    ++count;
    it += static_cast<std::ptrdiff_t>(phrase.size());
  }
}

EntityScore entity_prf(const std::vector<SequencePair>& corpus,
                       const std::vector<Phrase>& entities) {
  int64_t tp = 0, hyp = 0, ref = 0;
  for (const auto& [reference, hypothesis] : corpus) {
    for (const Phrase& entity : entities) {
      const int64_t r = count_occurrences(reference, entity);
      const int64_t h = count_occurrences(hypothesis, entity);
      tp += std::min(r, h);
      ref += r;
      hyp += h;
    }
  }
  return EntityScore::from_counts(tp, hyp, ref);
}

}  // namespace jointdec
