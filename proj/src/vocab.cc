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

#include "jointdec/vocab.h"

#include "jointdec/error.h"

namespace jointdec {

Vocab::Vocab(std::vector<std::string> tokens, int32_t eos_id)
    : tokens_(std::move(tokens)), eos_id_(eos_id) {
  if (tokens_.size() < 2) {
    throw ValidationError("vocab needs at least one content token plus EOS");
  }
  if (eos_id_ < 0 || eos_id_ >= size()) {
    throw ValidationError("eos_id " + std::to_string(eos_id_) +
                          " out of range for vocab of size " +
                          std::to_string(tokens_.size()));
  }
  index_.reserve(tokens_.size());
  for (int32_t i = 0; i < size(); ++i) {
    if (tokens_[i].empty()) {
      throw ValidationError("vocab token " + std::to_string(i) + " is empty");
    }
    if (!index_.emplace(tokens_[i], i).second) {
      throw ValidationError("duplicate vocab token '" + tokens_[i] + "'");
    }
  }
}

const std::string& Vocab::token(int32_t id) const {
  if (!contains(id)) {
    throw ValidationError("token id " + std::to_string(id) + " out of range");
  }
  return tokens_[id];
}

int32_t Vocab::find(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

int32_t Vocab::id_of(const std::string& token) const {
  const int32_t id = find(token);
  if (id < 0) {
    throw ValidationError("unknown token '" + token + "'");
  }
  return id;
}

std::string Vocab::to_text(std::span<const int32_t> seq) const {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += token(seq[i]);
  }
  return out;
}

void check_eos_free(const Vocab& vocab, std::span<const int32_t> seq,
                    const std::string& what) {
  for (size_t i = 0; i < seq.size(); ++i) {
    if (!vocab.contains(seq[i])) {
      throw ValidationError(what + ": token id " + std::to_string(seq[i]) +
                            " at position " + std::to_string(i) +
                            " is out of vocab");
    }
    if (seq[i] == vocab.eos_id()) {
      throw ValidationError(what + ": EOS token at position " +
                            std::to_string(i) + " is not allowed");
    }
  }
}

}  // namespace jointdec
