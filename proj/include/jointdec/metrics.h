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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jointdec/vocab.h"

namespace jointdec {

/// Counts from one minimum-edit-distance alignment. Satisfies
///   matches + substitutions + deletions  == |reference|
///   matches + substitutions + insertions == |hypothesis|
struct EditCounts {
  int64_t matches = 0;
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;

  int64_t errors() const { return substitutions + insertions + deletions; }
  bool operator==(const EditCounts&) const = default;
};

/// Corpus-level error rates as fractions of the total reference length.
struct CerBreakdown {
  double cer = 0.0;
  double sub_rate = 0.0;
  double ins_rate = 0.0;
  double del_rate = 0.0;
  EditCounts counts;
  int64_t ref_len = 0;
};

/// Occurrence-level agreement on a set of entity phrases.
struct EntityScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int64_t true_positives = 0;
  int64_t hyp_occurrences = 0;
  int64_t ref_occurrences = 0;

  /// precision = tp/hyp (1 when hyp == 0), recall = tp/ref,
  /// f1 = 2pr/(p+r) or 0. Throws ValidationError when ref == 0.
  static EntityScore from_counts(int64_t tp, int64_t hyp, int64_t ref);
};

using SequencePair = std::pair<TokenSeq, TokenSeq>;  // (reference, hypothesis)

/// Unit-cost Levenshtein alignment counts. Sequences must be EOS-free
/// (the caller strips terminators). When several alignments reach the
/// minimum cost, the backtrace prefers match > substitution > deletion >
/// insertion at each position from the end, which pins the
/// sub/ins/del breakdown.
EditCounts edit_alignment(std::span<const int32_t> reference,
                          std::span<const int32_t> hypothesis);

/// Corpus CER: counts are summed over all pairs and divided by the summed
/// reference length; cer = sub_rate + ins_rate + del_rate. Throws
/// ValidationError on an empty corpus or zero total reference length.
CerBreakdown cer(const std::vector<SequencePair>& corpus);

/// Non-overlapping occurrences of `phrase` in `seq` under greedy-left
/// matching (each match consumes its span).
int64_t count_occurrences(std::span<const int32_t> seq, const Phrase& phrase);

/// Micro-averaged occurrence precision/recall/F1: per utterance and per
/// entity, tp = min(reference count, hypothesis count); counts are summed
/// over the corpus. Throws ValidationError if no entity ever occurs in a
/// reference (the evaluation setup is broken) or any phrase is empty.
EntityScore entity_prf(const std::vector<SequencePair>& corpus,
                       const std::vector<Phrase>& entities);

}  // namespace jointdec
