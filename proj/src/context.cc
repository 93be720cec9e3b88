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

#include "jointdec/context.h"

#include "jointdec/error.h"

namespace jointdec {

void validate_observation(const Vocab& vocab, const Observation& obs) {
  if (obs.tokens.empty()) {
    throw ValidationError("observation must be non-empty");
  }
  check_eos_free(vocab, obs.tokens, "observation");
}

void validate_context(const Vocab& vocab, const ContextSpec& ctx) {
  for (size_t i = 0; i < ctx.entities.size(); ++i) {
    if (ctx.entities[i].empty()) {
      throw ValidationError("context entity " + std::to_string(i) +
                            " is empty");
    }
    check_eos_free(vocab, ctx.entities[i],
                   "context entity " + std::to_string(i));
  }
}

}  // namespace jointdec
