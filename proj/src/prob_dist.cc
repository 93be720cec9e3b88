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

#include "jointdec/prob_dist.h"

#include <cmath>
#include <string>

#include "jointdec/error.h"

namespace jointdec {

ProbDist::ProbDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw ValidationError("probability vector is empty");
  }
  double sum = 0.0;
  for (size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!(p >= 0.0)) {  // also rejects NaN
      throw ValidationError("probability entry " + std::to_string(i) +
                            " is negative or NaN: " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTolerance) {
    throw ValidationError("probabilities sum to " + std::to_string(sum) +
                          ", expected 1 within 1e-9");
  }
}

ProbDist ProbDist::uniform(int32_t size) {
  if (size < 1) throw ValidationError("uniform distribution needs size >= 1");
  return ProbDist(std::vector<double>(size, 1.0 / size));
}

ProbDist ProbDist::one_hot(int32_t size, int32_t id) {
  if (id < 0 || id >= size) {
    throw ValidationError("one_hot index out of range");
  }
  std::vector<double> p(size, 0.0);
  p[id] = 1.0;
  return ProbDist(std::move(p));
}

ProbDist ProbDist::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw ValidationError("cannot normalize negative weight " +
                            std::to_string(w));
    }
    sum += w;
  }
  if (sum <= 0.0) {
    throw ValidationError("cannot normalize zero total weight");
  }
  for (double& w : weights) w /= sum;
  return ProbDist(std::move(weights));
}

int32_t ScoreVector::argmax() const { return argmax_lowest(scores); }

double ScoreVector::margin() const { return top2_margin(scores); }

int32_t argmax_lowest(std::span<const double> values) {
  if (values.empty()) throw ValidationError("argmax of empty vector");
  int32_t best = 0;
  for (int32_t i = 1; i < static_cast<int32_t>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

double top2_margin(std::span<const double> values) {
  if (values.size() < 2) {
    throw ValidationError("margin needs at least two entries");
  }
  double top1 = values[0], top2 = values[1];
  if (top2 > top1) std::swap(top1, top2);
  for (size_t i = 2; i < values.size(); ++i) {
    if (values[i] > top1) {
      top2 = top1;
      top1 = values[i];
    } else if (values[i] > top2) {
      top2 = values[i];
    }
  }
  return top1 - top2;
}

}  // namespace jointdec
