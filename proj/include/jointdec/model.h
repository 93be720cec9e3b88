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

#include <span>

#include "jointdec/context.h"
#include "jointdec/prob_dist.h"
#include "jointdec/vocab.h"

namespace jointdec {

/// Conditional next-token model queried with and without context.
///
/// Implementations are immutable after construction and deterministic:
/// identical arguments must return bit-identical distributions, and a
/// null (or empty) context must reproduce the context-free conditional.
class ConditionalLM {
 public:
  virtual ~ConditionalLM() = default;

  virtual const Vocab& vocab() const = 0;

  /// Distribution of the next token given the decoded prefix, the
  /// observation, and an optional context (nullptr = no context).
  /// Throws ValidationError on out-of-vocab or EOS-bearing prefixes.
  virtual ProbDist next_dist(std::span<const int32_t> prefix,
                             const Observation& obs,
                             const ContextSpec* ctx) const = 0;

 protected:
  /// Shared precondition check for implementations.
  void check_query(std::span<const int32_t> prefix, const Observation& obs,
                   const ContextSpec* ctx) const;
};

}  // namespace jointdec
