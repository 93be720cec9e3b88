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

#include "jointdec/model_io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jointdec/error.h"

namespace jointdec {

using nlohmann::json;

std::string noisy_channel_to_json(const NoisyChannelParams& params) {
  json doc;
  doc["vocab"]["tokens"] = params.vocab.tokens();
  doc["vocab"]["eos_id"] = params.vocab.eos_id();
  doc["emission"] = params.emission;
  doc["prior"] = params.prior;
  doc["beta"] = params.ctx_boost;
  return doc.dump(2) + "\n";
}

NoisyChannelParams noisy_channel_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("model document is not valid JSON: ") +
                      e.what());
  }
  try {
    Vocab vocab(doc.at("vocab").at("tokens").get<std::vector<std::string>>(),
                doc.at("vocab").at("eos_id").get<int32_t>());
    NoisyChannelParams params{
        std::move(vocab),
        doc.at("emission").get<std::vector<std::vector<double>>>(),
        doc.at("prior").get<std::vector<std::vector<double>>>(),
        doc.at("beta").get<double>()};
    // Run the model's own validation before handing the params out.
    NoisyChannelLM check(params);
    return params;
  } catch (const json::exception& e) {
    throw FormatError(std::string("model document field error: ") + e.what());
  }
}

void save_noisy_channel(const NoisyChannelParams& params,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << noisy_channel_to_json(params);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

NoisyChannelParams load_noisy_channel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return noisy_channel_from_json(buf.str());
  } catch (const Error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace jointdec
