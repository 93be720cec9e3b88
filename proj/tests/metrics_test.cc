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

#include <doctest.h>

#include "jointdec/error.h"
#include "jointdec/metrics.h"
#include "jointdec/oracle.h"
#include "test_util.h"

using namespace jointdec;
using namespace jointdec::testutil;

namespace {

TokenSeq seq(std::initializer_list<int32_t> ids) { return TokenSeq(ids); }

}  // namespace

TEST_CASE("alignment hand-checked examples") {
  CHECK(edit_alignment(seq({0, 1, 2}), seq({0, 1, 2})) ==
        EditCounts{3, 0, 0, 0});
  CHECK(edit_alignment(seq({0, 1, 2}), seq({0, 9, 2})) ==
        EditCounts{2, 1, 0, 0});
  CHECK(edit_alignment(seq({0, 1, 2}), seq({0, 2})) == EditCounts{2, 0, 0, 1});
  CHECK(edit_alignment(seq({0, 2}), seq({0, 1, 2})) == EditCounts{2, 0, 1, 0});
  CHECK(edit_alignment(seq({}), seq({})) == EditCounts{0, 0, 0, 0});
  CHECK(edit_alignment(seq({0, 1}), seq({})) == EditCounts{0, 0, 0, 2});
  // Tie-break: two substitutions, not delete+insert.
  CHECK(edit_alignment(seq({0, 1}), seq({1, 0})) == EditCounts{0, 2, 0, 0});
}

TEST_CASE("alignment matches the brute-force oracle on all short pairs") {
  const auto sequences = binary_sequences_up_to(4);
  for (const TokenSeq& ref : sequences) {
    for (const TokenSeq& hyp : sequences) {
      const EditCounts dp = edit_alignment(ref, hyp);
      const EditCounts brute = brute_force_alignment(ref, hyp);
      REQUIRE(dp == brute);
      // Marginal identities.
      CHECK(dp.matches + dp.substitutions + dp.deletions ==
            static_cast<int64_t>(ref.size()));
      CHECK(dp.matches + dp.substitutions + dp.insertions ==
            static_cast<int64_t>(hyp.size()));
    }
  }
}

namespace {

// Number of distinct minimum-cost alignments (to detect ties).
int64_t count_min_cost_alignments(std::span<const int32_t> ref,
                                  std::span<const int32_t> hyp) {
  const size_t n = ref.size(), m = hyp.size();
  std::vector<std::vector<int64_t>> dist(n + 1, std::vector<int64_t>(m + 1));
  std::vector<std::vector<int64_t>> ways(n + 1,
                                         std::vector<int64_t>(m + 1, 0));
  ways[0][0] = 1;
  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      int64_t best = INT64_MAX;
      if (i > 0 && j > 0) {
        best = std::min(best, dist[i - 1][j - 1] +
                                  (ref[i - 1] == hyp[j - 1] ? 0 : 1));
      }
      if (i > 0) best = std::min(best, dist[i - 1][j] + 1);
      if (j > 0) best = std::min(best, dist[i][j - 1] + 1);
      dist[i][j] = best;
      int64_t w = 0;
      if (i > 0 && j > 0 &&
          dist[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1) == best) {
        w += ways[i - 1][j - 1];
      }
      if (i > 0 && dist[i - 1][j] + 1 == best) w += ways[i - 1][j];
      if (j > 0 && dist[i][j - 1] + 1 == best) w += ways[i][j - 1];
      ways[i][j] = w;
    }
  }
  return ways[n][m];
}

}  // namespace

TEST_CASE("alignment symmetry under swapping the pair") {
  // Total distance is always symmetric. The per-op breakdown swaps
  // (sub<->sub, ins<->del) whenever the optimal alignment is unique; with
  // ties the fixed backtrace preference may pick non-mirrored alignments.
  Rng rng(31);
  int unique_pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    TokenSeq ref, hyp;
    for (int i = rng.uniform_int(0, 6); i > 0; --i) {
      ref.push_back(rng.uniform_int(0, 2));
    }
    for (int i = rng.uniform_int(0, 6); i > 0; --i) {
      hyp.push_back(rng.uniform_int(0, 2));
    }
    const EditCounts fwd = edit_alignment(ref, hyp);
    const EditCounts rev = edit_alignment(hyp, ref);
    CHECK(fwd.errors() == rev.errors());
    if (count_min_cost_alignments(ref, hyp) == 1) {
      ++unique_pairs;
      CHECK(fwd.substitutions == rev.substitutions);
      CHECK(fwd.insertions == rev.deletions);
      CHECK(fwd.deletions == rev.insertions);
    }
  }
  CHECK(unique_pairs > 0);
}

TEST_CASE("cer hand-checked examples") {
  SUBCASE("perfect corpus") {
    const CerBreakdown out = cer({{seq({0, 1, 2}), seq({0, 1, 2})}});
    CHECK(out.cer == 0.0);
    CHECK(out.counts == EditCounts{3, 0, 0, 0});
  }
  SUBCASE("single substitution in three tokens") {
    const CerBreakdown out = cer({{seq({0, 1, 2}), seq({0, 9, 2})}});
    CHECK(out.cer == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(out.sub_rate == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(out.ins_rate == 0.0);
    CHECK(out.del_rate == 0.0);
  }
  SUBCASE("mixed corpus sums counts over utterances") {
    // One substitution, one deletion, one insertion over 9 ref tokens.
    const CerBreakdown out = cer({{seq({0, 1, 2}), seq({0, 9, 2})},
                                  {seq({0, 1, 2}), seq({0, 2})},
                                  {seq({0, 1, 2}), seq({0, 1, 9, 2})}});
    CHECK(out.ref_len == 9);
    CHECK(out.cer == doctest::Approx(3.0 / 9).epsilon(1e-12));
    CHECK(out.sub_rate == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(out.ins_rate == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(out.del_rate == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(out.cer ==
          doctest::Approx(out.sub_rate + out.ins_rate + out.del_rate)
              .epsilon(1e-12));
  }
  SUBCASE("empty corpus is an input error") {
    CHECK_THROWS_AS(cer({}), ValidationError);
    CHECK_THROWS_AS(cer({{seq({}), seq({})}}), ValidationError);
  }
}

TEST_CASE("entity counting is greedy-left and non-overlapping") {
  CHECK(count_occurrences(seq({0, 0, 0}), Phrase{0, 0}) == 1);
  CHECK(count_occurrences(seq({0, 1, 0, 1, 0}), Phrase{0, 1}) == 2);
  CHECK(count_occurrences(seq({1, 1}), Phrase{0}) == 0);
  CHECK_THROWS_AS(count_occurrences(seq({1}), Phrase{}), ValidationError);
}

TEST_CASE("entity precision/recall hand-checked examples") {
  SUBCASE("perfect hypotheses give all ones") {
    const std::vector<SequencePair> corpus{
        {seq({0, 1, 2}), seq({0, 1, 2})},
        {seq({2, 0, 1}), seq({2, 0, 1})},
    };
    const EntityScore score = entity_prf(corpus, {{0, 1}});
    CHECK(score.precision == 1.0);
    CHECK(score.recall == 1.0);
    CHECK(score.f1 == 1.0);
  }
  SUBCASE("twice in reference, once in hypothesis") {
    const std::vector<SequencePair> corpus{
        {seq({5, 9, 5}), seq({5, 9, 9})},
    };
    const EntityScore score = entity_prf(corpus, {{5}});
    CHECK(score.true_positives == 1);
    CHECK(score.ref_occurrences == 2);
    CHECK(score.precision == 1.0);
    CHECK(score.recall == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(score.f1 == doctest::Approx(2.0 / 3).epsilon(1e-12));
  }
  SUBCASE("no reference occurrences is a setup error") {
    const std::vector<SequencePair> corpus{{seq({1, 1}), seq({0, 0})}};
    CHECK_THROWS_AS(entity_prf(corpus, {{9}}), ValidationError);
  }
  SUBCASE("hypothesis-only occurrences cost precision") {
    const std::vector<SequencePair> corpus{
        {seq({7, 1, 1}), seq({7, 7, 7})},
    };
    const EntityScore score = entity_prf(corpus, {{7}});
    CHECK(score.ref_occurrences == 1);
    CHECK(score.hyp_occurrences == 3);
    CHECK(score.true_positives == 1);
    CHECK(score.precision == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(score.recall == 1.0);
  }
}

TEST_CASE("entity counting agrees with the positional-scan oracle") {
  Rng rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    TokenSeq text;
    for (int i = rng.uniform_int(1, 12); i > 0; --i) {
      text.push_back(rng.uniform_int(0, 2));
    }
    Phrase phrase;
    for (int i = rng.uniform_int(1, 3); i > 0; --i) {
      phrase.push_back(rng.uniform_int(0, 2));
    }
    CHECK(count_occurrences(text, phrase) ==
          scan_entity_occurrences(text, phrase));
  }
}
