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

#include "synthbench/random.h"

#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include "synthbench/error.h"

namespace synthbench {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kRaggedRow: return "RaggedRow";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kAllMissingColumn: return "AllMissingColumn";
    case ErrorCode::kTooFewRows: return "TooFewRows";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kEmptyColumn: return "EmptyColumn";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kSingleClass: return "SingleClass";
    case ErrorCode::kEmptyTrainingSet: return "EmptyTrainingSet";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kFeatureMismatch: return "FeatureMismatch";
    case ErrorCode::kTooFewReferences: return "TooFewReferences";
    case ErrorCode::kEmptyHoldout: return "EmptyHoldout";
    case ErrorCode::kEmptySynthetic: return "EmptySynthetic";
    case ErrorCode::kNoReports: return "NoReports";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::Normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  // 1 - Uniform() lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  has_spare_normal_ = true;
  return radius * std::cos(angle);
}

std::size_t Rng::Index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "Rng::Index with n = 0");
  const std::uint64_t bound = n;
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

std::vector<std::size_t> Rng::Permutation(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Shuffle(std::span<std::size_t>(order));
  return order;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t global_seed, std::string_view stage) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : stage) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return SplitMix64(global_seed ^ hash);
}

}  // namespace synthbench
