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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace jointdec {

/// Seeded random source with hand-rolled variate mappings.
///
/// std::mt19937_64 output is pinned by the standard, but the std
/// distribution adaptors are not; mapping the raw bits ourselves keeps
/// generated corpora and reports byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  /// Uniform double in the open interval (0, 1).
  double u01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    // Multiply-shift range reduction; bias is < 2^-64 per draw.
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(next_u64()) * span;
    return lo + static_cast<int>(prod >> 64);
  }

  bool bernoulli(double p) { return u01() < p; }

  /// Standard exponential variate.
  double exponential() { return -std::log(u01()); }

  /// Gamma(shape=k, scale=1) for integer k, as a sum of exponentials.
  double gamma_int(int k) {
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += exponential();
    return sum;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(uniform_int(0, static_cast<int>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace jointdec
