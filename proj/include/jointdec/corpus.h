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

#include "jointdec/noisy_channel.h"

namespace jointdec {

/// One evaluation utterance: the observed token stream, its reference
/// transcript, and the entity phrases present in the reference (the
/// per-utterance ground-truth context) with their inventory tags.
struct EvalRecord {
  std::string id;
  TokenSeq observation;
  TokenSeq reference;
  std::vector<Phrase> context_entities;
  // Parallel to context_entities; values from {common, rare, sensitive}.
  std::vector<std::vector<std::string>> tags;

  bool operator==(const EvalRecord&) const = default;
};

/// Named entity inventories: the rare list is a subset of the common one,
/// and doubles as the sensitive-word list for suppression runs.
struct EntityInventory {
  std::vector<Phrase> common;
  std::vector<Phrase> rare;

  bool operator==(const EntityInventory&) const = default;
};

/// Knobs of the synthetic desk-scale corpus. The defaults are sized so a
/// full sweep finishes in seconds while trend statistics stay stable.
struct CorpusGenConfig {
  int vocab_size = 30;  // including EOS
  int n_utterances = 500;
  int utterance_len = 12;
  int n_common = 40;
  int n_rare = 15;
  double inject_rate = 1.5;  // expected entity injections per utterance
  double p_sub = 0.15;       // observation substitution probability
  double beta = 4.0;         // ctx boost of the generated model
  uint64_t seed = 1;

  // Shape of the generated model.
  int entity_min_len = 3;
  int entity_max_len = 4;
  double emission_identity = 0.7;    // self mass; rest split over neighbors
  double entity_prior_weight = 0.18; // entity-transition share of the prior
  int prior_concentration = 3;       // Dirichlet shape of background rows
};

struct SyntheticCorpus {
  NoisyChannelParams model;
  std::vector<EvalRecord> records;
  EntityInventory inventory;
};

/// Validates a record against the vocab (non-empty, EOS-free sequences,
/// in-vocab phrases). `where` prefixes error messages.
void validate_record(const Vocab& vocab, const EvalRecord& record,
                     const std::string& where);

/// Deterministic corpus generation: references come from a bigram source
/// with entities injected at the configured rate; each observation is the
/// reference with tokens independently substituted (probability p_sub)
/// among the confusable alternatives of the model's emission support.
SyntheticCorpus gen_synthetic_corpus(const CorpusGenConfig& cfg);

/// Line-delimited JSON dataset I/O. Token sequences are stored as arrays
/// of token strings; every record is validated on load, and failures name
/// the line and field. An empty file loads as an empty list with a
/// warning on stderr.
std::vector<EvalRecord> load_dataset(const std::string& path,
                                     const Vocab& vocab);
void save_dataset(const std::vector<EvalRecord>& records, const Vocab& vocab,
                  const std::string& path);

/// Entity inventory JSON I/O ({"common": [[tok,...],...], "rare": ...}).
EntityInventory load_inventory(const std::string& path, const Vocab& vocab);
void save_inventory(const EntityInventory& inventory, const Vocab& vocab,
                    const std::string& path);

}  // namespace jointdec
