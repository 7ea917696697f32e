// Copyright 2026 The hybridqt Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace hqt {

// Deterministic seeded generator used everywhere randomness appears.
// mt19937_64 plus explicit bit-to-double conversion and a hand-rolled
// Box-Muller so that a given seed yields the same stream on every
// platform (std::*_distribution output is implementation-defined).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  double uniform01();  // [0, 1), 53-bit resolution
  double gaussian();   // standard normal

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// splitmix64-style mix for deriving independent sub-seeds from one base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace hqt
