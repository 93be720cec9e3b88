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

#include <compare>
#include <map>

#include "jointdec/model.h"

namespace jointdec {

/// Lookup key of one stored table row. A null context canonicalizes to an
/// empty entity list, so "no context" and "empty context" share rows.
struct TableKey {
  TokenSeq prefix;
  TokenSeq obs;
  std::vector<Phrase> ctx_entities;

  auto operator<=>(const TableKey&) const = default;
};

/// Deterministic table-driven model for tests and oracles: stored rows are
/// returned verbatim, unseen keys fall back to the uniform distribution.
class TableLM : public ConditionalLM {
 public:
  explicit TableLM(Vocab vocab) : vocab_(std::move(vocab)) {}

  /// Registers a row. `dist` must match the vocab size; the ProbDist
  /// constructor has already enforced normalization.
  void add_row(TokenSeq prefix, TokenSeq obs, std::vector<Phrase> ctx_entities,
               ProbDist dist);

  const Vocab& vocab() const override { return vocab_; }

  ProbDist next_dist(std::span<const int32_t> prefix, const Observation& obs,
                     const ContextSpec* ctx) const override;

 private:
  Vocab vocab_;
  std::map<TableKey, ProbDist> rows_;
};

}  // namespace jointdec
