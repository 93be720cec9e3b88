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

#include <cstdint>
#include <span>
#include <vector>

namespace jointdec {

/// Absolute tolerance on the total mass of a probability vector.
inline constexpr double kProbSumTolerance = 1e-9;

/// Normalized next-token distribution over a fixed vocabulary.
///
/// Every entry is >= 0 and the entries sum to 1 within kProbSumTolerance;
/// the constructor rejects anything else.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> probs);

  /// Uniform distribution over `size` tokens.
  static ProbDist uniform(int32_t size);
  /// All mass on token `id`.
  static ProbDist one_hot(int32_t size, int32_t id);
  /// Scales non-negative weights to unit mass. Throws if the total is
  /// zero or any weight is negative.
  static ProbDist normalized(std::vector<double> weights);

  int32_t size() const { return static_cast<int32_t>(probs_.size()); }
  double operator[](int32_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  std::span<const double> span() const { return probs_; }

  bool operator==(const ProbDist& other) const = default;

 private:
  std::vector<double> probs_;
};

/// Signed per-token scores, e.g. a fused ranking vector. Unlike ProbDist,
/// entries may be negative and need not sum to anything in particular.
struct ScoreVector {
  std::vector<double> scores;

  int32_t size() const { return static_cast<int32_t>(scores.size()); }
  double operator[](int32_t i) const { return scores[i]; }

  /// Index of the largest entry; ties go to the lowest token id.
  int32_t argmax() const;
  /// Gap between the largest and second-largest entry.
  double margin() const;
};

/// Argmax with lowest-index tie-breaking.
int32_t argmax_lowest(std::span<const double> values);
/// Top-1 minus top-2 value (0 for a single-entry vector is undefined;
/// requires at least 2 entries).
double top2_margin(std::span<const double> values);

}  // namespace jointdec
