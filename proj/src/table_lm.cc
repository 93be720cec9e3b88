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

#include "jointdec/table_lm.h"

#include "jointdec/error.h"

namespace jointdec {

void TableLM::add_row(TokenSeq prefix, TokenSeq obs,
                      std::vector<Phrase> ctx_entities, ProbDist dist) {
  if (dist.size() != vocab_.size()) {
    throw ValidationError("table row has " + std::to_string(dist.size()) +
                          " entries, vocab has " +
                          std::to_string(vocab_.size()));
  }
  TableKey key{std::move(prefix), std::move(obs), std::move(ctx_entities)};
  rows_.insert_or_assign(std::move(key), std::move(dist));
}

ProbDist TableLM::next_dist(std::span<const int32_t> prefix,
                            const Observation& obs,
                            const ContextSpec* ctx) const {
  check_query(prefix, obs, ctx);
  TableKey key{TokenSeq(prefix.begin(), prefix.end()), obs.tokens,
               ctx == nullptr ? std::vector<Phrase>{} : ctx->entities};
  auto it = rows_.find(key);
  if (it != rows_.end()) return it->second;
  return ProbDist::uniform(vocab_.size());
}

}  // namespace jointdec
