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

#include "jointdec/fusion.h"

#include <cmath>
#include <string>

#include "jointdec/error.h"

namespace jointdec {

namespace {

void check_inputs(const ProbDist& p_ctx, const ProbDist& p_noctx,
                  double alpha) {
  if (!std::isfinite(alpha)) {
    throw ValidationError("fusion coefficient must be finite");
  }
  if (p_ctx.size() != p_noctx.size()) {
    throw ValidationError("fusion inputs cover different vocabularies (" +
                          std::to_string(p_ctx.size()) + " vs " +
                          std::to_string(p_noctx.size()) + ")");
  }
}

}  // namespace

FusionCoefficient FusionCoefficient::normalized(double alpha) {
  if (!std::isfinite(alpha)) {
    throw ValidationError("fusion coefficient must be finite");
  }
  if (alpha == -1.0) {
    throw ValidationError(
        "normalized fusion weights are undefined at alpha = -1; "
        "use the unnormalized form (fuse_score)");
  }
  return {alpha, FusionForm::kNormalized};
}

FusionCoefficient FusionCoefficient::unnormalized(double alpha) {
  if (!std::isfinite(alpha)) {
    throw ValidationError("fusion coefficient must be finite");
  }
  return {alpha, FusionForm::kUnnormalized};
}

ScoreVector fuse_score(const ProbDist& p_ctx, const ProbDist& p_noctx,
                       double alpha) {
  check_inputs(p_ctx, p_noctx, alpha);
  ScoreVector out;
  out.scores.resize(p_ctx.size());
  for (int32_t v = 0; v < p_ctx.size(); ++v) {
    out.scores[v] = p_noctx[v] + alpha * p_ctx[v];
  }
  return out;
}

ScoreVector fuse_normalized(const ProbDist& p_ctx, const ProbDist& p_noctx,
                            double alpha) {
  check_inputs(p_ctx, p_noctx, alpha);
  if (alpha == -1.0) {
    throw ValidationError(
        "normalized fusion weights are undefined at alpha = -1; "
        "use the unnormalized form (fuse_score)");
  }
  const double w_ctx = alpha / (1.0 + alpha);
  const double w_noctx = 1.0 / (1.0 + alpha);
  ScoreVector out;
  out.scores.resize(p_ctx.size());
  for (int32_t v = 0; v < p_ctx.size(); ++v) {
    out.scores[v] = w_ctx * p_ctx[v] + w_noctx * p_noctx[v];
  }
  return out;
}

ScoreVector fuse(const ProbDist& p_ctx, const ProbDist& p_noctx,
                 FusionCoefficient coeff) {
  return coeff.form == FusionForm::kNormalized
             ? fuse_normalized(p_ctx, p_noctx, coeff.alpha)
             : fuse_score(p_ctx, p_noctx, coeff.alpha);
}

}  // namespace jointdec
