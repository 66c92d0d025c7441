// Copyright 2026 The swipt_sinr Authors.
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

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace swipt {

// xoshiro256** with state derived by SplitMix64 from (seed, stream). Every
// Monte-Carlo realisation owns the stream equal to its index, so results do
// not depend on how realisations are spread over workers. Gaussian variates
// come from Box-Muller on 53-bit uniforms; no std:: distribution is used, so
// sample values are identical across standard libraries.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm =
      "xoshiro256**/splitmix64-substreams/box-muller";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1).
  double uniform();
  // Standard normal N(0, 1).
  double normal();
  // Circularly-symmetric CN(0, 1): E|z|^2 = 1.
  std::complex<double> complex_normal();
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> s_{};
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace swipt
