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

#include "jointdec/context.h"
#include "jointdec/vocab.h"

namespace jointdec {

// Prompt rendering is purely structural: the toy models consume the
// ContextSpec directly, while real-LLM adapters would feed the rendered
// string. Each phrase is the concatenation of its token strings; phrases
// are joined by kEntityDelimiter.

/// Token strings of `phrase` concatenated without separators.
std::string phrase_to_string(const Vocab& vocab, const Phrase& phrase);

/// All entity phrases of `ctx` joined by kEntityDelimiter.
std::string render_entity_list(const Vocab& vocab, const ContextSpec& ctx);

/// Splits a rendered entity list back into phrase strings. Exact inverse
/// of render_entity_list as long as no token contains the delimiter.
std::vector<std::string> split_entity_list(const std::string& text);

/// Instantiates the context template (or the plain template when the
/// entity list is empty). Throws FormatError when the chosen template
/// lacks a required placeholder.
std::string render_prompt(const Vocab& vocab, const ContextSpec& ctx);

}  // namespace jointdec
