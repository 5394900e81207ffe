// Copyright 2026 The Synthbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNTHBENCH_RANDOM_H_
#define SYNTHBENCH_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace synthbench {

// Seeded random source with platform-independent draws. The standard
// distributions are implementation-defined, so every derived draw here is
// computed directly from the 64-bit engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform();

  // Standard normal via Box-Muller.
  double Normal();

  // Uniform integer in [0, n). n must be positive.
  std::size_t Index(std::size_t n);

  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = Index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // Random permutation of 0..n-1.
  std::vector<std::size_t> Permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Per-stage seed: SplitMix64 of the global seed mixed with an FNV-1a hash of
// the stage name. Stages are reproducible independently of one another.
std::uint64_t DeriveSeed(std::uint64_t global_seed, std::string_view stage);

}  // namespace synthbench

#endif  // SYNTHBENCH_RANDOM_H_
