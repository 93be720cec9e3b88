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

#include "jointdec/corpus.h"
#include "jointdec/decoder.h"
#include "jointdec/metrics.h"

namespace jointdec {

enum class DecodeMode { kGreedy, kBeam };

/// Which entity list feeds the context stream for a sweep cell.
enum class ContextSetKind {
  kNone,    // empty context
  kGt,      // each record's own ground-truth entities
  kCommon,  // the full common inventory
  kRare,    // the rare subset (doubles as the sensitive list)
};

std::string to_string(ContextSetKind kind);
ContextSetKind context_set_from_string(const std::string& name);
std::string to_string(DecodeMode mode);
DecodeMode mode_from_string(const std::string& name);

/// One evaluation sweep: every alpha in the grid crossed with every
/// requested context set. Beam mode requires all alphas >= 0.
struct SweepConfig {
  std::vector<double> alpha_grid;
  DecodeMode mode = DecodeMode::kGreedy;
  int beam_width = 4;
  std::vector<ContextSetKind> context_sets = {ContextSetKind::kNone};
  uint64_t seed = 0;  // run metadata; decoding itself is deterministic
  int max_len = 0;    // 0 = per-record |observation| + 1
};

/// Metrics of one (context set, alpha) cell.
struct ReportCell {
  ContextSetKind context_set = ContextSetKind::kNone;
  double alpha = 0.0;
  CerBreakdown cer;
  EntityScore common_score;
  EntityScore rare_score;
};

struct RunMeta {
  uint64_t seed = 0;
  std::string model_file;
  std::string dataset_file;
  std::string mode = "greedy";
  int beam_width = 4;
};

/// Sweep results, one cell per (context set, alpha) pair in config order.
struct MetricsReport {
  RunMeta meta;
  std::vector<ReportCell> cells;
};

/// Decodes every record once per sweep cell and scores the hypotheses
/// against the references: corpus CER plus occurrence precision/recall/F1
/// on the common and rare inventories. EOS terminators are stripped
/// before scoring. Decode failures abort the run with the record id in
/// the error message.
MetricsReport run_eval(const std::vector<EvalRecord>& dataset,
                       const ConditionalLM& model,
                       const EntityInventory& inventory,
                       const SweepConfig& sweep);

}  // namespace jointdec
