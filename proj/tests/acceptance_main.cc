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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line
// (with its wall-clock budget enforced); the process exits non-zero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "jointdec/corpus.h"
#include "jointdec/decoder.h"
#include "jointdec/error.h"
#include "jointdec/eval.h"
#include "jointdec/fusion.h"
#include "jointdec/metrics.h"
#include "jointdec/oracle.h"
#include "jointdec/report.h"
#include "test_util.h"

using namespace jointdec;
using namespace jointdec::testutil;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += message;
    }
  }
  void note(const std::string& message) {
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
};

class Suite {
 public:
  void run(int index, const std::string& name, double budget_seconds,
           const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(outcome);
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= budget_seconds) {
      outcome.require(false, "exceeded runtime budget");
    }
    std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n",
                outcome.ok ? "PASS" : "FAIL", index, name.c_str(), elapsed,
                outcome.detail.empty() ? "" : " — ",
                outcome.detail.c_str());
    std::fflush(stdout);
    ++total_;
    if (outcome.ok) ++passed_;
  }

  int finish() const {
    std::printf("acceptance: %d/%d criteria passed\n", passed_, total_);
    return passed_ == total_ ? 0 : 1;
  }

 private:
  int total_ = 0;
  int passed_ = 0;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// Weak monotonicity with an allowance of `max_inversions` steps against
// the direction, each no larger than `slack`.
bool monotone_with_slack(const std::vector<double>& values, bool nondecreasing,
                         int max_inversions, double slack) {
  int inversions = 0;
  for (size_t i = 1; i < values.size(); ++i) {
    const double step = values[i] - values[i - 1];
    const double against = nondecreasing ? -step : step;
    if (against > 0.0) {
      if (against > slack) return false;
      ++inversions;
    }
  }
  return inversions <= max_inversions;
}

const ReportCell& cell_at(const MetricsReport& report, double alpha) {
  for (const ReportCell& cell : report.cells) {
    if (cell.alpha == alpha) return cell;
  }
  throw Error("missing report cell for alpha " + std::to_string(alpha));
}

// ---------------------------------------------------------------------
// Criterion bodies
// ---------------------------------------------------------------------

void fusion_algebra(Outcome& out) {
  Rng rng(101);
  const std::vector<double> alphas{-0.9, -0.5, 0.0, 0.3, 0.7, 1.0, 5.0};
  int argmax_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform_int(2, 8);
    const ProbDist p_ctx = random_dist(rng, n);
    const ProbDist p_noctx = random_dist(rng, n);
    for (double alpha : alphas) {
      const ScoreVector normalized = fuse_normalized(p_ctx, p_noctx, alpha);
      const double sum = std::accumulate(normalized.scores.begin(),
                                         normalized.scores.end(), 0.0);
      if (std::abs(sum - 1.0) > 1e-9) {
        out.require(false, "normalized sum off by " + fmt(sum - 1.0));
        return;
      }
      const ScoreVector score = fuse_score(p_ctx, p_noctx, alpha);
      if (score.margin() > 1e-9) {
        ++argmax_checked;
        if (normalized.argmax() != score.argmax()) {
          out.require(false, "argmax mismatch at alpha " + fmt(alpha));
          return;
        }
      }
    }
  }
  out.note("1000 pairs x 7 alphas, " + std::to_string(argmax_checked) +
           " argmax checks");
}

void alpha_zero_reduction(Outcome& out) {
  const SyntheticCorpus corpus = gen_synthetic_corpus(CorpusGenConfig{});
  const NoisyChannelLM model(corpus.model);
  const ContextSpec ctx{corpus.inventory.rare};
  int matched = 0;
  for (const EvalRecord& record : corpus.records) {
    const Observation obs{record.observation};
    const int max_len = static_cast<int>(record.observation.size()) + 1;
    const DecodeResult joint =
        joint_greedy_decode(model, obs, ctx, 0.0, max_len);
    const StreamResult baseline =
        greedy_stream_decode(model, obs, nullptr, max_len);
    if (joint.tokens == baseline.tokens) ++matched;
  }
  out.require(matched == static_cast<int>(corpus.records.size()),
              std::to_string(matched) + "/" +
                  std::to_string(corpus.records.size()) + " utterances match");
  out.note(std::to_string(matched) + "/" +
           std::to_string(corpus.records.size()) + " utterances identical");
}

void dominant_alpha_limit(Outcome& out) {
  const SyntheticCorpus corpus = gen_synthetic_corpus(CorpusGenConfig{});
  const NoisyChannelLM model(corpus.model);
  const ContextSpec ctx{corpus.inventory.rare};
  int qualifying = 0;
  int matched = 0;
  for (const EvalRecord& record : corpus.records) {
    const Observation obs{record.observation};
    const int max_len = static_cast<int>(record.observation.size()) + 1;
    const StreamResult ctx_stream =
        greedy_stream_decode(model, obs, &ctx, max_len);
    double min_margin = 1.0;
    for (const ProbDist& dist : ctx_stream.dists) {
      min_margin = std::min(min_margin, top2_margin(dist.span()));
    }
    if (min_margin <= 1e-5) continue;
    ++qualifying;
    const DecodeResult joint =
        joint_greedy_decode(model, obs, ctx, 1e6, max_len);
    if (joint.tokens == ctx_stream.tokens) ++matched;
  }
  out.require(qualifying > 0, "no utterance qualified");
  out.require(matched == qualifying,
              std::to_string(matched) + "/" + std::to_string(qualifying) +
                  " qualifying utterances match");
  out.note(std::to_string(matched) + "/" + std::to_string(qualifying) +
           " qualifying utterances (of " +
           std::to_string(corpus.records.size()) + ") identical");
}

void oracle_equivalence(Outcome& out) {
  Rng rng(104);
  const OracleBudget budget{4, 4};
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const TableInstance inst = make_random_table_instance(rng);
    for (double alpha : {0.0, 0.5, 1.0}) {
      const OracleResult oracle = exhaustive_joint_decode(
          *inst.lm, inst.obs, inst.ctx, alpha, 4, budget);
      const auto hyps =
          joint_beam_decode(*inst.lm, inst.obs, inst.ctx, alpha, 256, 4);
      ++checked;
      if (hyps.empty() || hyps.front().tokens != oracle.tokens) {
        out.require(false, "disagreement on instance " +
                               std::to_string(trial) + " at alpha " +
                               fmt(alpha));
        return;
      }
    }
  }
  out.note(std::to_string(checked) + " instance/alpha combinations agree");
}

void metric_correctness(Outcome& out) {
  // Alignment against the brute-force oracle on every short binary pair.
  const auto sequences = binary_sequences_up_to(4);
  int pairs = 0;
  for (const TokenSeq& ref : sequences) {
    for (const TokenSeq& hyp : sequences) {
      ++pairs;
      if (edit_alignment(ref, hyp) != brute_force_alignment(ref, hyp)) {
        out.require(false, "alignment mismatch");
        return;
      }
    }
  }

  // Entity scoring against an independent positional-scan computation.
  Rng rng(105);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<SequencePair> corpus;
    std::vector<Phrase> entities;
    for (int e = rng.uniform_int(1, 3); e > 0; --e) {
      Phrase phrase;
      for (int i = rng.uniform_int(1, 3); i > 0; --i) {
        phrase.push_back(rng.uniform_int(0, 2));
      }
      entities.push_back(std::move(phrase));
    }
    for (int u = rng.uniform_int(1, 3); u > 0; --u) {
      TokenSeq ref, hyp;
      for (int i = rng.uniform_int(3, 10); i > 0; --i) {
        ref.push_back(rng.uniform_int(0, 2));
      }
      for (int i = rng.uniform_int(3, 10); i > 0; --i) {
        hyp.push_back(rng.uniform_int(0, 2));
      }
      corpus.emplace_back(std::move(ref), std::move(hyp));
    }
    // Guarantee at least one reference occurrence.
    std::copy(entities[0].begin(), entities[0].end(),
              corpus[0].first.begin());

    int64_t tp = 0, hyp_n = 0, ref_n = 0;
    for (const auto& [ref, hyp] : corpus) {
      for (const Phrase& phrase : entities) {
        const int64_t r = scan_entity_occurrences(ref, phrase);
        const int64_t h = scan_entity_occurrences(hyp, phrase);
        tp += std::min(r, h);
        ref_n += r;
        hyp_n += h;
      }
    }
    const double precision =
        hyp_n == 0 ? 1.0 : static_cast<double>(tp) / hyp_n;
    const double recall = static_cast<double>(tp) / ref_n;
    const double f1 = precision + recall > 0.0
                          ? 2.0 * precision * recall / (precision + recall)
                          : 0.0;
    const EntityScore score = entity_prf(corpus, entities);
    if (score.precision != precision || score.recall != recall ||
        score.f1 != f1) {
      out.require(false, "entity score mismatch on trial " +
                             std::to_string(trial));
      return;
    }
  }
  out.note(std::to_string(pairs) +
           " alignment pairs + 1000 entity cases exact");
}

void table2_trend(Outcome& out) {
  const SyntheticCorpus corpus = gen_synthetic_corpus(CorpusGenConfig{});
  const NoisyChannelLM model(corpus.model);
  SweepConfig sweep;
  sweep.alpha_grid = {0.0, 0.3, 0.7, 1.0};
  sweep.context_sets = {ContextSetKind::kRare};
  const MetricsReport report =
      run_eval(corpus.records, model, corpus.inventory, sweep);

  std::vector<double> recall, precision, f1, cer_values;
  for (double alpha : sweep.alpha_grid) {
    const ReportCell& cell = cell_at(report, alpha);
    recall.push_back(cell.rare_score.recall);
    precision.push_back(cell.rare_score.precision);
    f1.push_back(cell.rare_score.f1);
    cer_values.push_back(cell.cer.cer);
  }

  out.require(monotone_with_slack(recall, true, 1, 0.01),
              "recall not non-decreasing: " + fmt(recall[0]) + " " +
                  fmt(recall[1]) + " " + fmt(recall[2]) + " " +
                  fmt(recall[3]));
  out.require(monotone_with_slack(precision, false, 1, 0.01),
              "precision not non-increasing: " + fmt(precision[0]) + " " +
                  fmt(precision[1]) + " " + fmt(precision[2]) + " " +
                  fmt(precision[3]));
  const size_t best_f1 =
      std::max_element(f1.begin(), f1.end()) - f1.begin();
  const size_t best_cer =
      std::min_element(cer_values.begin(), cer_values.end()) -
      cer_values.begin();
  out.require(best_f1 == 1 || best_f1 == 2,
              "max F1 at alpha " + fmt(sweep.alpha_grid[best_f1]));
  out.require(best_cer == 1 || best_cer == 2,
              "min CER at alpha " + fmt(sweep.alpha_grid[best_cer]));
  out.note("recall " + fmt(recall[0]) + "->" + fmt(recall[3]) +
           ", precision " + fmt(precision[0]) + "->" + fmt(precision[3]) +
           ", best F1 @ " + fmt(sweep.alpha_grid[best_f1]) +
           ", best CER @ " + fmt(sweep.alpha_grid[best_cer]));
}

void table3_trend(Outcome& out) {
  const SyntheticCorpus corpus = gen_synthetic_corpus(CorpusGenConfig{});
  const NoisyChannelLM model(corpus.model);
  SweepConfig sweep;
  sweep.alpha_grid = {0.0, -0.1, -0.2, -0.5, -1.0};
  sweep.context_sets = {ContextSetKind::kRare};
  const MetricsReport report =
      run_eval(corpus.records, model, corpus.inventory, sweep);

  std::vector<double> recall, precision, cer_values;
  for (double alpha : sweep.alpha_grid) {
    const ReportCell& cell = cell_at(report, alpha);
    recall.push_back(cell.rare_score.recall);
    precision.push_back(cell.rare_score.precision);
    cer_values.push_back(cell.cer.cer);
  }

  // Monotone over the negative grid (recall[1..4]); no slack.
  const std::vector<double> negative_recall(recall.begin() + 1, recall.end());
  out.require(monotone_with_slack(negative_recall, false, 0, 0.0),
              "sensitive recall not monotone: " + fmt(recall[1]) + " " +
                  fmt(recall[2]) + " " + fmt(recall[3]) + " " +
                  fmt(recall[4]));
  out.require(recall[4] <= 0.1 * recall[0],
              "recall at alpha=-1 is " + fmt(recall[4]) + " vs baseline " +
                  fmt(recall[0]));
  for (size_t i = 1; i < precision.size(); ++i) {
    out.require(precision[i] >= 0.95,
                "surviving precision " + fmt(precision[i]) + " at alpha " +
                    fmt(sweep.alpha_grid[i]));
  }
  out.require(monotone_with_slack(cer_values, true, 0, 0.0),
              "CER not non-decreasing: " + fmt(cer_values[0]) + " " +
                  fmt(cer_values[1]) + " " + fmt(cer_values[2]) + " " +
                  fmt(cer_values[3]) + " " + fmt(cer_values[4]));
  out.note("recall " + fmt(recall[0]) + "->" + fmt(recall[4]) + ", CER " +
           fmt(cer_values[0]) + "->" + fmt(cer_values[4]));
}

void determinism(Outcome& out) {
  SweepConfig sweep;
  sweep.alpha_grid = {0.0, 0.3, 0.7, 1.0};
  sweep.context_sets = {ContextSetKind::kNone, ContextSetKind::kRare};
  sweep.seed = 1;

  const auto render_once = [&]() {
    const SyntheticCorpus corpus = gen_synthetic_corpus(CorpusGenConfig{});
    const NoisyChannelLM model(corpus.model);
    MetricsReport report =
        run_eval(corpus.records, model, corpus.inventory, sweep);
    report.meta.model_file = "model.json";
    report.meta.dataset_file = "corpus.jsonl";
    return render_report(report, ReportFormat::kCsv);
  };
  const std::string first = render_once();
  const std::string second = render_once();
  out.require(first == second, "CSV reports differ between runs");
  out.note(std::to_string(first.size()) + " bytes, byte-identical");
}

}  // namespace

int main() {
  Suite suite;
  suite.run(1, "fusion algebra", 1.0, fusion_algebra);
  suite.run(2, "alpha = 0 reduction", 5.0, alpha_zero_reduction);
  suite.run(3, "dominant-alpha limit", 30.0, dominant_alpha_limit);
  suite.run(4, "beam/oracle equivalence", 10.0, oracle_equivalence);
  suite.run(5, "metric correctness", 30.0, metric_correctness);
  suite.run(6, "alpha-sweep trend (boosting)", 30.0, table2_trend);
  suite.run(7, "suppression trend (negative alpha)", 30.0, table3_trend);
  suite.run(8, "report determinism", 60.0, determinism);
  return suite.finish();
}
