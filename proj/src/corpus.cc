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

#include "jointdec/corpus.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "jointdec/error.h"
#include "jointdec/metrics.h"
#include "jointdec/rng.h"

namespace jointdec {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownTags = {"common", "rare", "sensitive"};

void validate_config(const CorpusGenConfig& cfg) {
  if (cfg.vocab_size < 3) {
    throw ValidationError("vocab_size must be >= 3 (two content tokens plus "
                          "EOS)");
  }
  if (cfg.n_utterances < 1) throw ValidationError("n_utterances must be >= 1");
  if (cfg.utterance_len < 1) {
    throw ValidationError("utterance_len must be >= 1");
  }
  if (cfg.n_common < 1) throw ValidationError("n_common must be >= 1");
  if (cfg.n_rare < 0 || cfg.n_rare > cfg.n_common) {
    throw ValidationError("the rare inventory must be a subset of the "
                          "common one (0 <= n_rare <= n_common)");
  }
  if (cfg.inject_rate < 0.0) throw ValidationError("inject_rate must be >= 0");
  if (cfg.p_sub < 0.0 || cfg.p_sub > 0.5) {
    throw ValidationError("p_sub must be within [0, 0.5]");
  }
  if (cfg.beta < 1.0) throw ValidationError("beta must be >= 1");
  if (cfg.entity_min_len < 1 || cfg.entity_max_len < cfg.entity_min_len) {
    throw ValidationError("entity length range is invalid");
  }
  if (cfg.entity_max_len > cfg.utterance_len) {
    throw ValidationError("entities cannot be longer than an utterance");
  }
  if (cfg.emission_identity <= 0.0 || cfg.emission_identity > 1.0) {
    throw ValidationError("emission_identity must be within (0, 1]");
  }
  if (cfg.entity_prior_weight < 0.0 || cfg.entity_prior_weight >= 1.0) {
    throw ValidationError("entity_prior_weight must be within [0, 1)");
  }
  if (cfg.prior_concentration < 1) {
    throw ValidationError("prior_concentration must be >= 1");
  }

  // Count the constructible phrase space before trying to sample it.
  const double content = cfg.vocab_size - 1;
  double space = 0.0;
  for (int len = cfg.entity_min_len; len <= cfg.entity_max_len; ++len) {
    space += std::pow(content, len);
    if (space > 1e12) return;  // plenty
  }
  if (static_cast<double>(cfg.n_common) > space) {
    throw ValidationError(
        "entity inventory larger than the constructible phrase space");
  }
}

std::string content_token_name(int ordinal) {
  if (ordinal < 26) return std::string(1, static_cast<char>('a' + ordinal));
  if (ordinal < 36) return std::string(1, static_cast<char>('0' + ordinal - 26));
  return "t" + std::to_string(ordinal);
}

// EOS sits at id 0 so that all-zero fused score ties (which arise at
// alpha = -1 when no boost is live) resolve to clean termination under
// lowest-id tie-breaking.
Vocab make_gen_vocab(int vocab_size) {
  std::vector<std::string> tokens;
  tokens.reserve(vocab_size);
  tokens.emplace_back("</s>");
  for (int i = 0; i + 1 < vocab_size; ++i) {
    tokens.push_back(content_token_name(i));
  }
  return Vocab(std::move(tokens), 0);
}

std::vector<Phrase> sample_inventory(Rng& rng, const CorpusGenConfig& cfg) {
  std::vector<Phrase> inventory;
  std::set<Phrase> seen;
  while (static_cast<int>(inventory.size()) < cfg.n_common) {
    const int len = rng.uniform_int(cfg.entity_min_len, cfg.entity_max_len);
    Phrase phrase(len);
    for (int k = 0; k < len; ++k) {
      phrase[k] = static_cast<int32_t>(rng.uniform_int(1, cfg.vocab_size - 1));
    }
    if (seen.insert(phrase).second) inventory.push_back(std::move(phrase));
  }
  return inventory;
}

// Background bigram rows mixed with the transition statistics of the
// inventory entities, so the generated decoder "knows" its entities the
// way a trained model would.
std::vector<std::vector<double>> make_prior(Rng& rng,
                                            const CorpusGenConfig& cfg,
                                            const std::vector<Phrase>& common,
                                            int32_t eos) {
  const int size = cfg.vocab_size;
  std::vector<std::vector<double>> entity_counts(
      size, std::vector<double>(size, 0.0));
  for (const Phrase& phrase : common) {
    for (size_t k = 0; k + 1 < phrase.size(); ++k) {
      entity_counts[phrase[k]][phrase[k + 1]] += 1.0;
    }
  }

  std::vector<std::vector<double>> prior(size, std::vector<double>(size, 0.0));
  for (int u = 0; u < size; ++u) {
    std::vector<double> background(size, 0.0);
    double bg_total = 0.0;
    for (int v = 0; v < size; ++v) {
      if (v == eos) continue;
      background[v] = rng.gamma_int(cfg.prior_concentration);
      bg_total += background[v];
    }
    double ent_total = 0.0;
    for (int v = 0; v < size; ++v) ent_total += entity_counts[u][v];

    const double w =
        ent_total > 0.0 && u != eos ? cfg.entity_prior_weight : 0.0;
    for (int v = 0; v < size; ++v) {
      if (v == eos) continue;
      double p = (1.0 - w) * background[v] / bg_total;
      if (w > 0.0) p += w * entity_counts[u][v] / ent_total;
      prior[u][v] = p;
    }
  }
  return prior;
}

// Ring-structured confusion: each content token is confusable with its
// two ring neighbours only.
std::vector<std::vector<double>> make_emission(const CorpusGenConfig& cfg,
                                               int32_t eos) {
  const int size = cfg.vocab_size;
  const int content = size - 1;
  std::vector<std::vector<double>> emission(size,
                                            std::vector<double>(size, 0.0));
  emission[eos][eos] = 1.0;
  const double spill = (1.0 - cfg.emission_identity) / 2.0;
  for (int c = 0; c < content; ++c) {
    const int v = c + 1;
    emission[v][v] += cfg.emission_identity;
    emission[v][1 + (c + 1) % content] += spill;
    emission[v][1 + (c + content - 1) % content] += spill;
  }
  return emission;
}

json phrase_list_to_json(const std::vector<Phrase>& phrases,
                         const Vocab& vocab) {
  json out = json::array();
  for (const Phrase& phrase : phrases) {
    json arr = json::array();
    for (int32_t id : phrase) arr.push_back(vocab.token(id));
    out.push_back(std::move(arr));
  }
  return out;
}

TokenSeq token_strings_to_ids(const json& arr, const Vocab& vocab,
                              const std::string& where) {
  if (!arr.is_array()) throw FormatError(where + " must be an array");
  TokenSeq seq;
  seq.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw FormatError(where + " must contain token strings");
    }
    const int32_t id = vocab.find(item.get<std::string>());
    if (id < 0) {
      throw FormatError(where + ": unknown token '" +
                        item.get<std::string>() + "'");
    }
    seq.push_back(id);
  }
  return seq;
}

std::vector<Phrase> phrase_list_from_json(const json& arr, const Vocab& vocab,
                                          const std::string& where) {
  if (!arr.is_array()) throw FormatError(where + " must be an array");
  std::vector<Phrase> phrases;
  phrases.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    phrases.push_back(token_strings_to_ids(
        arr[i], vocab, where + "[" + std::to_string(i) + "]"));
  }
  return phrases;
}

}  // namespace

void validate_record(const Vocab& vocab, const EvalRecord& record,
                     const std::string& where) {
  if (record.id.empty()) throw ValidationError(where + ": id is empty");
  if (record.observation.empty()) {
    throw ValidationError(where + ": field observation is empty");
  }
  if (record.reference.empty()) {
    throw ValidationError(where + ": field reference is empty");
  }
  try {
    check_eos_free(vocab, record.observation, "field observation");
    check_eos_free(vocab, record.reference, "field reference");
    for (size_t i = 0; i < record.context_entities.size(); ++i) {
      if (record.context_entities[i].empty()) {
        throw ValidationError("field context_entities[" + std::to_string(i) +
                              "] is empty");
      }
      check_eos_free(vocab, record.context_entities[i],
                     "field context_entities[" + std::to_string(i) + "]");
    }
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
  if (!record.tags.empty()) {
    if (record.tags.size() != record.context_entities.size()) {
      throw ValidationError(where +
                            ": field tags must parallel context_entities");
    }
    for (const auto& tag_set : record.tags) {
      for (const std::string& tag : tag_set) {
        if (!kKnownTags.contains(tag)) {
          throw ValidationError(where + ": field tags has unknown tag '" +
                                tag + "'");
        }
      }
    }
  }
}

SyntheticCorpus gen_synthetic_corpus(const CorpusGenConfig& cfg) {
  validate_config(cfg);
  Rng rng(cfg.seed);

  Vocab vocab = make_gen_vocab(cfg.vocab_size);
  const int32_t eos = vocab.eos_id();

  // Inventory, then the rare subset (kept in common order).
  std::vector<Phrase> common = sample_inventory(rng, cfg);
  std::vector<int> indices(common.size());
  for (size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
  rng.shuffle(indices);
  indices.resize(cfg.n_rare);
  std::sort(indices.begin(), indices.end());
  std::set<int> rare_set(indices.begin(), indices.end());
  std::vector<Phrase> rare;
  for (int i : indices) rare.push_back(common[i]);

  SyntheticCorpus corpus{
      NoisyChannelParams{vocab, make_emission(cfg, eos),
                         make_prior(rng, cfg, common, eos), cfg.beta},
      {},
      EntityInventory{common, rare}};

  const auto& prior = corpus.model.prior;
  const auto& emission = corpus.model.emission;

  for (int n = 0; n < cfg.n_utterances; ++n) {
    EvalRecord record;
    char id[16];
    std::snprintf(id, sizeof(id), "utt%04d", n);
    record.id = id;

    // Reference: bigram chain, then entity injections.
    record.reference.resize(cfg.utterance_len);
    int32_t last = eos;
    for (int t = 0; t < cfg.utterance_len; ++t) {
      const double draw = rng.u01();
      double cum = 0.0;
      int32_t picked = cfg.vocab_size - 1;
      for (int32_t v = 0; v < cfg.vocab_size; ++v) {
        if (v == eos) continue;
        cum += prior[last][v];
        if (draw < cum) {
          picked = v;
          break;
        }
      }
      record.reference[t] = picked;
      last = picked;
    }
    int n_inject = static_cast<int>(cfg.inject_rate);
    if (rng.bernoulli(cfg.inject_rate - n_inject)) ++n_inject;
    for (int k = 0; k < n_inject; ++k) {
      const Phrase& entity =
          common[rng.uniform_int(0, static_cast<int>(common.size()) - 1)];
      const int pos = rng.uniform_int(
          0, cfg.utterance_len - static_cast<int>(entity.size()));
      std::copy(entity.begin(), entity.end(), record.reference.begin() + pos);
    }

    // Observation: independent substitutions among confusable tokens.
    record.observation = record.reference;
    for (int t = 0; t < cfg.utterance_len; ++t) {
      if (!rng.bernoulli(cfg.p_sub)) continue;
      const int32_t truth = record.reference[t];
      TokenSeq alternatives;
      for (int32_t o = 0; o < cfg.vocab_size; ++o) {
        if (o != truth && emission[truth][o] > 0.0) alternatives.push_back(o);
      }
      if (alternatives.empty()) continue;
      record.observation[t] = alternatives[rng.uniform_int(
          0, static_cast<int>(alternatives.size()) - 1)];
    }

    // Ground-truth context: inventory entities present in the reference.
    for (size_t i = 0; i < common.size(); ++i) {
      if (count_occurrences(record.reference, common[i]) > 0) {
        record.context_entities.push_back(common[i]);
        std::vector<std::string> tag_set{"common"};
        if (rare_set.contains(static_cast<int>(i))) {
          tag_set.emplace_back("rare");
          tag_set.emplace_back("sensitive");
        }
        record.tags.push_back(std::move(tag_set));
      }
    }

    validate_record(vocab, record, record.id);
    corpus.records.push_back(std::move(record));
  }
  return corpus;
}

std::vector<EvalRecord> load_dataset(const std::string& path,
                                     const Vocab& vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open dataset file '" + path + "'");
  std::vector<EvalRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError(where + ": invalid JSON: " + e.what());
    }
    EvalRecord record;
    try {
      record.id = doc.at("id").get<std::string>();
      record.observation =
          token_strings_to_ids(doc.at("observation"), vocab,
                               "field observation");
      record.reference =
          token_strings_to_ids(doc.at("reference"), vocab, "field reference");
      if (doc.contains("context_entities")) {
        record.context_entities = phrase_list_from_json(
            doc["context_entities"], vocab, "field context_entities");
      }
      if (doc.contains("tags")) {
        record.tags =
            doc["tags"].get<std::vector<std::vector<std::string>>>();
      }
    } catch (const json::exception& e) {
      throw FormatError(where + ": " + e.what());
    } catch (const FormatError& e) {
      throw FormatError(where + ": " + e.what());
    }
    try {
      validate_record(vocab, record, "record '" + record.id + "'");
    } catch (const ValidationError& e) {
      throw FormatError(where + ": " + e.what());
    }
    records.push_back(std::move(record));
  }
  if (records.empty()) {
    std::fprintf(stderr, "warning: dataset '%s' contains no records\n",
                 path.c_str());
  }
  return records;
}

void save_dataset(const std::vector<EvalRecord>& records, const Vocab& vocab,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  for (const EvalRecord& record : records) {
    json doc;
    doc["id"] = record.id;
    json obs = json::array();
    for (int32_t id : record.observation) obs.push_back(vocab.token(id));
    doc["observation"] = std::move(obs);
    json ref = json::array();
    for (int32_t id : record.reference) ref.push_back(vocab.token(id));
    doc["reference"] = std::move(ref);
    doc["context_entities"] =
        phrase_list_to_json(record.context_entities, vocab);
    doc["tags"] = record.tags;
    out << doc.dump() << "\n";
  }
  if (!out) throw FormatError("failed writing '" + path + "'");
}

EntityInventory load_inventory(const std::string& path, const Vocab& vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open entity file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw FormatError(path + ": invalid JSON: " + e.what());
  }
  EntityInventory inventory;
  try {
    inventory.common =
        phrase_list_from_json(doc.at("common"), vocab, "field common");
    inventory.rare =
        phrase_list_from_json(doc.at("rare"), vocab, "field rare");
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
  // The rare list must be drawn from the common one.
  std::set<Phrase> common_set(inventory.common.begin(),
                              inventory.common.end());
  for (const Phrase& phrase : inventory.rare) {
    if (!common_set.contains(phrase)) {
      throw FormatError(path + ": rare entity '" + vocab.to_text(phrase) +
                        "' is not in the common inventory");
    }
  }
  return inventory;
}

void save_inventory(const EntityInventory& inventory, const Vocab& vocab,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  json doc;
  doc["common"] = phrase_list_to_json(inventory.common, vocab);
  doc["rare"] = phrase_list_to_json(inventory.rare, vocab);
  out << doc.dump(2) << "\n";
  if (!out) throw FormatError("failed writing '" + path + "'");
}

}  // namespace jointdec
