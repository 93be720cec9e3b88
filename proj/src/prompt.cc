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

#include "jointdec/prompt.h"

#include "jointdec/error.h"

namespace jointdec {

namespace {

constexpr const char* kEntitiesPlaceholder = "{entities}";
constexpr const char* kSpeechPlaceholder = "{speech}";

// Replaces the single occurrence of `placeholder`; throws if absent.
std::string substitute(const std::string& tmpl, const std::string& placeholder,
                       const std::string& value) {
  const size_t pos = tmpl.find(placeholder);
  if (pos == std::string::npos) {
    throw FormatError("prompt template is missing placeholder " + placeholder);
  }
  std::string out = tmpl;
  out.replace(pos, placeholder.size(), value);
  return out;
}

}  // namespace

std::string phrase_to_string(const Vocab& vocab, const Phrase& phrase) {
  std::string out;
  for (int32_t id : phrase) out += vocab.token(id);
  return out;
}

std::string render_entity_list(const Vocab& vocab, const ContextSpec& ctx) {
  std::string out;
  for (size_t i = 0; i < ctx.entities.size(); ++i) {
    if (i > 0) out += kEntityDelimiter;
    out += phrase_to_string(vocab, ctx.entities[i]);
  }
  return out;
}

std::vector<std::string> split_entity_list(const std::string& text) {
  std::vector<std::string> phrases;
  if (text.empty()) return phrases;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(kEntityDelimiter, start);
    if (pos == std::string::npos) {
      phrases.push_back(text.substr(start));
      return phrases;
    }
    phrases.push_back(text.substr(start, pos - start));
    start = pos + kEntityDelimiter.size();
  }
}

std::string render_prompt(const Vocab& vocab, const ContextSpec& ctx) {
  if (ctx.entities.empty()) {
    return substitute(ctx.plain_template, kSpeechPlaceholder, kSpeechSlot);
  }
  std::string out = substitute(ctx.prompt_template, kEntitiesPlaceholder,
                               render_entity_list(vocab, ctx));
  return substitute(out, kSpeechPlaceholder, kSpeechSlot);
}

}  // namespace jointdec
