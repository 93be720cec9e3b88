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

#include "jointdec/noisy_channel.h"

namespace jointdec {

// Model parameter files are a single JSON document:
//   {"vocab": {"tokens": [...], "eos_id": N},
//    "emission": [[...],...], "prior": [[...],...], "beta": 4.0}

/// Serializes params to a JSON string (stable field order, full
/// double precision).
std::string noisy_channel_to_json(const NoisyChannelParams& params);

/// Parses and validates a model document. Throws FormatError on malformed
/// JSON or missing fields, ValidationError on invariant violations.
NoisyChannelParams noisy_channel_from_json(const std::string& text);

void save_noisy_channel(const NoisyChannelParams& params,
                        const std::string& path);
NoisyChannelParams load_noisy_channel(const std::string& path);

}  // namespace jointdec
