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
#include <string>
#include <unordered_map>
#include <vector>

namespace jointdec {

using TokenSeq = std::vector<int32_t>;
using Phrase = TokenSeq;

/// Fixed token alphabet with one reserved end-of-sequence token.
///
/// Token strings must be distinct and non-empty; there must be at least
/// one content token besides EOS.
class Vocab {
 public:
  Vocab(std::vector<std::string> tokens, int32_t eos_id);

  int32_t size() const { return static_cast<int32_t>(tokens_.size()); }
  int32_t eos_id() const { return eos_id_; }
  bool contains(int32_t id) const { return id >= 0 && id < size(); }

  const std::string& token(int32_t id) const;
  /// Returns the id of `token`, or -1 if unknown.
  int32_t find(const std::string& token) const;
  /// Like find(), but throws ValidationError on unknown tokens.
  int32_t id_of(const std::string& token) const;

  const std::vector<std::string>& tokens() const { return tokens_; }

  /// Joins token strings of `seq` with single spaces (for display).
  std::string to_text(std::span<const int32_t> seq) const;

  bool operator==(const Vocab& other) const {
    return tokens_ == other.tokens_ && eos_id_ == other.eos_id_;
  }

 private:
  std::vector<std::string> tokens_;
  int32_t eos_id_;
  std::unordered_map<std::string, int32_t> index_;
};

/// Throws ValidationError unless every id is in-vocab and none is EOS.
/// `what` names the offending field in error messages.
void check_eos_free(const Vocab& vocab, std::span<const int32_t> seq,
                    const std::string& what);

}  // namespace jointdec
