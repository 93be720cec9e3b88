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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jointdec/corpus.h"
#include "jointdec/decoder.h"
#include "jointdec/error.h"
#include "jointdec/eval.h"
#include "jointdec/model_io.h"
#include "jointdec/prompt.h"
#include "jointdec/report.h"

namespace {

using namespace jointdec;

TokenSeq parse_token_text(const Vocab& vocab, const std::string& text) {
  TokenSeq seq;
  std::istringstream in(text);
  std::string token;
  while (in >> token) seq.push_back(vocab.id_of(token));
  return seq;
}

std::vector<double> parse_alpha_grid(const std::string& text) {
  std::vector<double> grid;
  std::istringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      grid.push_back(std::stod(field));
    } catch (const std::exception&) {
      throw UsageError("bad alpha grid entry '" + field + "'");
    }
  }
  if (grid.empty()) throw UsageError("alpha grid is empty");
  return grid;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(text, out_path);
  }
}

int run_gen(const CorpusGenConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const SyntheticCorpus corpus = gen_synthetic_corpus(cfg);
  const Vocab& vocab = corpus.model.vocab;
  const std::string model_path = out_dir + "/model.json";
  const std::string corpus_path = out_dir + "/corpus.jsonl";
  const std::string entities_path = out_dir + "/entities.json";
  save_noisy_channel(corpus.model, model_path);
  save_dataset(corpus.records, vocab, corpus_path);
  save_inventory(corpus.inventory, vocab, entities_path);
  std::printf("wrote %s (vocab %d, beta %.2f)\n", model_path.c_str(),
              vocab.size(), corpus.model.ctx_boost);
  std::printf("wrote %s (%zu utterances of length %d)\n", corpus_path.c_str(),
              corpus.records.size(), cfg.utterance_len);
  std::printf("wrote %s (%zu common / %zu rare entities)\n",
              entities_path.c_str(), corpus.inventory.common.size(),
              corpus.inventory.rare.size());
  return 0;
}

int run_decode(const std::string& model_path, const std::string& obs_text,
               const std::vector<std::string>& entity_texts, double alpha,
               int max_len) {
  const NoisyChannelParams params = load_noisy_channel(model_path);
  const NoisyChannelLM model(params);
  const Vocab& vocab = model.vocab();

  Observation obs{parse_token_text(vocab, obs_text)};
  ContextSpec ctx;
  for (const std::string& text : entity_texts) {
    ctx.entities.push_back(parse_token_text(vocab, text));
  }
  if (max_len <= 0) max_len = static_cast<int>(obs.tokens.size()) + 1;

  std::printf("prompt: %s\n", render_prompt(vocab, ctx).c_str());
  const DecodeResult result =
      joint_greedy_decode(model, obs, ctx, alpha, max_len);

  std::printf("%-5s %-8s %10s %10s %10s  top-3 fused\n", "step", "token",
              "p_ctx", "p_noctx", "fused");
  for (size_t t = 0; t < result.steps.size(); ++t) {
    const DecodeStep& step = result.steps[t];
    const int32_t chosen = step.chosen;
    std::vector<int32_t> order(vocab.size());
    for (int32_t v = 0; v < vocab.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
      return step.fused[a] > step.fused[b];
    });
    std::string top;
    for (int k = 0; k < std::min<int32_t>(3, vocab.size()); ++k) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%s%s:%.4f", k > 0 ? " " : "",
                    vocab.token(order[k]).c_str(), step.fused[order[k]]);
      top += buf;
    }
    std::printf("%-5zu %-8s %10.6f %10.6f %10.6f  %s\n", t,
                vocab.token(chosen).c_str(), step.p_ctx[chosen],
                step.p_noctx[chosen], step.fused[chosen], top.c_str());
  }
  std::printf("tokens: %s%s\n", vocab.to_text(result.tokens).c_str(),
              result.truncated ? " (length-truncated)" : "");
  std::printf("logprob_ctx: %.6f  logprob_noctx: %.6f\n", result.logprob_ctx,
              result.logprob_noctx);
  return 0;
}

int run_eval_cmd(const std::string& model_path, const std::string& dataset_path,
                 const std::string& entities_path, const std::string& grid_text,
                 const std::vector<std::string>& context_set_names,
                 const std::string& mode_name, int beam_width, uint64_t seed,
                 int max_len, const std::string& format_name,
                 const std::string& out_path) {
  const NoisyChannelParams params = load_noisy_channel(model_path);
  const NoisyChannelLM model(params);
  const Vocab& vocab = model.vocab();

  const std::vector<EvalRecord> dataset = load_dataset(dataset_path, vocab);
  const EntityInventory inventory = load_inventory(entities_path, vocab);

  SweepConfig sweep;
  sweep.alpha_grid = parse_alpha_grid(grid_text);
  sweep.mode = mode_from_string(mode_name);
  sweep.beam_width = beam_width;
  sweep.seed = seed;
  sweep.max_len = max_len;
  sweep.context_sets.clear();
  for (const std::string& name : context_set_names) {
    sweep.context_sets.push_back(context_set_from_string(name));
  }
  if (sweep.context_sets.empty()) {
    sweep.context_sets.push_back(ContextSetKind::kNone);
  }

  MetricsReport report = run_eval(dataset, model, inventory, sweep);
  report.meta.model_file = model_path;
  report.meta.dataset_file = dataset_path;

  emit(render_report(report, report_format_from_string(format_name)),
       out_path);
  return 0;
}

int run_report(const std::string& in_path, const std::string& format_name,
               const std::string& out_path) {
  const MetricsReport report = load_report(in_path);
  emit(render_report(report, report_format_from_string(format_name)),
       out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jointdec - controllable contextual biasing via joint two-stream "
      "decoding"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic model + corpus");
  CorpusGenConfig cfg;
  std::string out_dir;
  gen->add_option("--out-dir", out_dir, "output directory")->required();
  gen->add_option("--vocab-size", cfg.vocab_size, "vocab size incl. EOS");
  gen->add_option("--utterances", cfg.n_utterances, "number of utterances");
  gen->add_option("--utt-len", cfg.utterance_len, "tokens per utterance");
  gen->add_option("--common", cfg.n_common, "common entity inventory size");
  gen->add_option("--rare", cfg.n_rare, "rare entity subset size");
  gen->add_option("--inject-rate", cfg.inject_rate,
                  "expected entity injections per utterance");
  gen->add_option("--p-sub", cfg.p_sub, "observation substitution rate");
  gen->add_option("--beta", cfg.beta, "context boost of the model");
  gen->add_option("--seed", cfg.seed, "generation seed");

  // decode
  auto* decode =
      app.add_subcommand("decode", "decode one utterance with diagnostics");
  std::string model_path, obs_text;
  std::vector<std::string> entity_texts;
  double alpha = 0.0;
  int max_len = 0;
  decode->add_option("--model", model_path, "model file")->required();
  decode->add_option("--obs", obs_text, "observation (space-separated tokens)")
      ->required();
  decode->add_option("--entity", entity_texts,
                     "context entity phrase (repeatable)");
  decode->add_option("--alpha", alpha, "fusion coefficient");
  decode->add_option("--max-len", max_len, "length limit (0 = |obs|+1)");

  // eval
  auto* eval = app.add_subcommand("eval", "run an alpha sweep evaluation");
  std::string dataset_path, entities_path, out_path;
  std::string grid_text = "0,0.3,0.7,1.0";
  std::string mode_name = "greedy";
  std::string format_name = "csv";
  std::vector<std::string> context_set_names;
  int beam_width = 4;
  uint64_t seed = 0;
  int eval_max_len = 0;
  eval->add_option("--model", model_path, "model file")->required();
  eval->add_option("--dataset", dataset_path, "dataset file")->required();
  eval->add_option("--entities", entities_path, "entity inventory file")
      ->required();
  eval->add_option("--alpha-grid", grid_text, "comma-separated alphas");
  eval->add_option("--context-set", context_set_names,
                   "none|gt|common|rare (repeatable)");
  eval->add_option("--mode", mode_name, "greedy|beam");
  eval->add_option("--beam-width", beam_width, "beam width (beam mode)");
  eval->add_option("--seed", seed, "run seed recorded in the report");
  eval->add_option("--max-len", eval_max_len, "length limit (0 = |obs|+1)");
  eval->add_option("--format", format_name, "csv|json|markdown");
  eval->add_option("--out", out_path, "output file (default stdout)");

  // report
  auto* report = app.add_subcommand("report", "re-render a saved JSON report");
  std::string in_path;
  report->add_option("--in", in_path, "JSON report file")->required();
  report->add_option("--format", format_name, "csv|json|markdown");
  report->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(cfg, out_dir);
    if (decode->parsed()) {
      return run_decode(model_path, obs_text, entity_texts, alpha, max_len);
    }
    if (eval->parsed()) {
      return run_eval_cmd(model_path, dataset_path, entities_path, grid_text,
                          context_set_names, mode_name, beam_width, seed,
                          eval_max_len, format_name, out_path);
    }
    if (report->parsed()) return run_report(in_path, format_name, out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const jointdec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
