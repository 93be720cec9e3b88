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

#include <string>
#include <vector>

#include "jointdec/vocab.h"

namespace jointdec {

// Default instruction templates. {entities} receives the rendered hotword
// list, {speech} the audio slot marker.
inline const std::string kPlainPromptTemplate =
    "请识别语音并转写为文字: {speech}";
inline const std::string kContextualPromptTemplate =
    "请识别语音并转写为文字,下面的热词可能会提供帮助，{entities}: {speech}";
inline const std::string kSpeechSlot = "<|speech|>";
inline const std::string kEntityDelimiter = ", ";

/// One utterance's input: a token sequence standing in for the acoustic
/// feature stream, aligned one-to-one with output positions.
struct Observation {
  TokenSeq tokens;
};

/// Context handed to the biased decoding stream: an ordered hotword list
/// plus the instruction templates used when rendering a prompt.
struct ContextSpec {
  std::vector<Phrase> entities;
  std::string prompt_template = kContextualPromptTemplate;
  std::string plain_template = kPlainPromptTemplate;

  bool empty() const { return entities.empty(); }
};

/// Throws ValidationError unless the observation is non-empty, in-vocab,
/// and EOS-free.
void validate_observation(const Vocab& vocab, const Observation& obs);

/// Throws ValidationError unless every entity phrase is non-empty,
/// in-vocab, and EOS-free. An empty entity list is allowed.
void validate_context(const Vocab& vocab, const ContextSpec& ctx);

}  // namespace jointdec
