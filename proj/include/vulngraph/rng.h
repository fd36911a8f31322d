// Copyright 2026 The VulnGraph Authors. All Rights Reserved.
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
//
// Portable pseudo-random numbers. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; all range reduction and real-valued
// draws are implemented here rather than through <random> distributions, whose
// algorithms are implementation-defined. Same seed, same stream, any platform.

#ifndef VULNGRAPH_RNG_H_
#define VULNGRAPH_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace vulngraph {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, n). Rejection sampling removes modulo bias. n must be > 0.
  std::uint64_t UniformIndex(std::uint64_t n);

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

  // Fisher-Yates, walking from the back.
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(UniformIndex(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a over the bytes of text.
std::uint64_t StableHash(std::string_view text);

// splitmix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Derives a per-stage seed from the global seed and a stage label.
std::uint64_t DeriveSeed(std::uint64_t global_seed, std::string_view label);

}  // namespace vulngraph

#endif  // VULNGRAPH_RNG_H_
