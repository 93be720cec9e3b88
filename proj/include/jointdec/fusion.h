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

#include "jointdec/prob_dist.h"

namespace jointdec {

/// Which algebraic form of the per-step fusion is in effect.
enum class FusionForm {
  kNormalized,    // alpha/(1+alpha) * p_ctx + 1/(1+alpha) * p_noctx
  kUnnormalized,  // p_noctx + alpha * p_ctx
};

/// The signed balance coefficient together with the form it is used in.
/// The normalized form is undefined at alpha == -1.
struct FusionCoefficient {
  double alpha = 0.0;
  FusionForm form = FusionForm::kUnnormalized;

  static FusionCoefficient normalized(double alpha);
  static FusionCoefficient unnormalized(double alpha);
};

/// Unnormalized fusion: out[v] = p_noctx[v] + alpha * p_ctx[v]. Defined
/// for every finite alpha; for alpha > -1 it ranks tokens identically to
/// fuse_normalized (they differ by the positive factor 1/(1+alpha)), and
/// it is the only defined form at alpha == -1.
ScoreVector fuse_score(const ProbDist& p_ctx, const ProbDist& p_noctx,
                       double alpha);

/// Normalized fusion: out[v] = alpha/(1+alpha)*p_ctx[v]
/// + 1/(1+alpha)*p_noctx[v]. The weights sum to 1, so the output always
/// sums to 1; for alpha >= 0 it is a valid probability vector. Throws
/// ValidationError at alpha == -1 (use fuse_score there).
ScoreVector fuse_normalized(const ProbDist& p_ctx, const ProbDist& p_noctx,
                            double alpha);

/// Dispatches on the coefficient's form.
ScoreVector fuse(const ProbDist& p_ctx, const ProbDist& p_noctx,
                 FusionCoefficient coeff);

}  // namespace jointdec
