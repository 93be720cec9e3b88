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

#include "jointdec/eval.h"

#include <cmath>

#include "jointdec/error.h"

namespace jointdec {

std::string to_string(ContextSetKind kind) {
  switch (kind) {
    case ContextSetKind::kNone: return "none";
    case ContextSetKind::kGt: return "gt";
    case ContextSetKind::kCommon: return "common";
    case ContextSetKind::kRare: return "rare";
  }
  throw ValidationError("unhandled context set kind");
}

ContextSetKind context_set_from_string(const std::string& name) {
  if (name == "none") return ContextSetKind::kNone;
  if (name == "gt") return ContextSetKind::kGt;
  if (name == "common") return ContextSetKind::kCommon;
  if (name == "rare") return ContextSetKind::kRare;
  throw UsageError("unknown context set '" + name +
                   "' (expected none|gt|common|rare)");
}

std::string to_string(DecodeMode mode) {
  return mode == DecodeMode::kGreedy ? "greedy" : "beam";
}

DecodeMode mode_from_string(const std::string& name) {
  if (name == "greedy") return DecodeMode::kGreedy;
  if (name == "beam") return DecodeMode::kBeam;
  throw UsageError("unknown mode '" + name + "' (expected greedy|beam)");
}

namespace {

void validate_sweep(const SweepConfig& sweep) {
  if (sweep.alpha_grid.empty()) {
    throw ValidationError("alpha grid must be non-empty");
  }
  for (double alpha : sweep.alpha_grid) {
    if (!std::isfinite(alpha)) {
      throw ValidationError("alpha grid entries must be finite");
    }
    if (sweep.mode == DecodeMode::kBeam && alpha < 0.0) {
      throw ValidationError("beam mode requires all alphas >= 0");
    }
  }
  if (sweep.context_sets.empty()) {
    throw ValidationError("at least one context set is required");
  }
  if (sweep.beam_width < 1) throw ValidationError("beam_width must be >= 1");
  if (sweep.max_len < 0) throw ValidationError("max_len must be >= 0");
}

const std::vector<Phrase>& context_entities(ContextSetKind kind,
                                            const EvalRecord& record,
                                            const EntityInventory& inventory) {
  static const std::vector<Phrase> kEmpty;
  switch (kind) {
    case ContextSetKind::kNone: return kEmpty;
    case ContextSetKind::kGt: return record.context_entities;
    case ContextSetKind::kCommon: return inventory.common;
    case ContextSetKind::kRare: return inventory.rare;
  }
  throw ValidationError("unhandled context set kind");
}

TokenSeq strip_eos(TokenSeq tokens, int32_t eos) {
  if (!tokens.empty() && tokens.back() == eos) tokens.pop_back();
  return tokens;
}

}  // namespace

MetricsReport run_eval(const std::vector<EvalRecord>& dataset,
                       const ConditionalLM& model,
                       const EntityInventory& inventory,
                       const SweepConfig& sweep) {
  validate_sweep(sweep);
  if (dataset.empty()) {
    throw ValidationError("cannot evaluate an empty dataset");
  }
  const Vocab& vocab = model.vocab();
  for (const EvalRecord& record : dataset) {
    validate_record(vocab, record, "record '" + record.id + "'");
  }

  MetricsReport report;
  report.meta.seed = sweep.seed;
  report.meta.mode = to_string(sweep.mode);
  report.meta.beam_width = sweep.beam_width;

  const int32_t eos = vocab.eos_id();
  for (ContextSetKind kind : sweep.context_sets) {
    for (double alpha : sweep.alpha_grid) {
      std::vector<SequencePair> pairs;
      pairs.reserve(dataset.size());
      for (const EvalRecord& record : dataset) {
        const ContextSpec ctx{context_entities(kind, record, inventory)};
        const Observation obs{record.observation};
        const int max_len =
            sweep.max_len > 0
                ? sweep.max_len
                : static_cast<int>(record.observation.size()) + 1;
        TokenSeq hyp;
        try {
          if (sweep.mode == DecodeMode::kGreedy) {
            hyp = joint_greedy_decode(model, obs, ctx, alpha, max_len).tokens;
          } else {
            auto hyps = joint_beam_decode(model, obs, ctx, alpha,
                                          sweep.beam_width, max_len);
            if (hyps.empty()) {
              throw Error("beam search returned no hypotheses");
            }
            hyp = hyps.front().tokens;
          }
        } catch (const Error& e) {
          throw Error("decode failed on record '" + record.id + "' (alpha " +
                      std::to_string(alpha) + ", context " + to_string(kind) +
                      "): " + e.what());
        }
        pairs.emplace_back(record.reference, strip_eos(std::move(hyp), eos));
      }

      ReportCell cell;
      cell.context_set = kind;
      cell.alpha = alpha;
      cell.cer = cer(pairs);
      cell.common_score = entity_prf(pairs, inventory.common);
      cell.rare_score = entity_prf(pairs, inventory.rare);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace jointdec
