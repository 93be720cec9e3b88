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

#include "jointdec/model.h"

namespace jointdec {

void ConditionalLM::check_query(std::span<const int32_t> prefix,
                                const Observation& obs,
                                const ContextSpec* ctx) const {
  check_eos_free(vocab(), prefix, "prefix");
  validate_observation(vocab(), obs);
  if (ctx != nullptr) validate_context(vocab(), *ctx);
}

}  // namespace jointdec
