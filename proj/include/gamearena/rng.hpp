// Copyright 2026 The gamearena Authors
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

#ifndef GAMEARENA_RNG_HPP_
#define GAMEARENA_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace gamearena {

// SplitMix64 finalizer. Used to derive independent seeds from
// (seed, tag, index) triples so every chance site reads its own substream.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over the bytes of a tag.
constexpr std::uint64_t HashTag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t HashCombine(std::uint64_t seed, std::uint64_t value) {
  return Mix64(seed ^ Mix64(value + 0x632be59bd9b4e019ULL));
}

// Pure chance draw: the index-th 64-bit word of the substream `tag` of `seed`.
constexpr std::uint64_t ChanceWord(std::uint64_t seed, std::string_view tag,
                                   std::uint64_t index) {
  return HashCombine(HashCombine(seed, HashTag(tag)), index);
}

// Uniform integer in [lo, hi] from the substream, rejection-sampled so the
// result is unbiased and identical on every platform.
constexpr int ChanceUniform(std::uint64_t seed, std::string_view tag,
                            std::uint64_t index, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::uint64_t w =
        HashCombine(ChanceWord(seed, tag, index), attempt);
    if (w < limit) return lo + static_cast<int>(w % span);
  }
}

// Sequential generator for agents and search. std::mt19937_64 is specified
// bit-exactly by the standard; only the range reduction is done here because
// the standard distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::size_t Below(std::size_t n) {
    const std::uint64_t span = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t w;
    do {
      w = engine_();
    } while (w >= limit);
    return static_cast<std::size_t>(w % span);
  }

  int Uniform(int lo, int hi) {
    return lo + static_cast<int>(Below(static_cast<std::size_t>(hi - lo) + 1));
  }

  // Uniform in [0, 1) with 53 random bits.
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool Bernoulli(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gamearena

#endif  // GAMEARENA_RNG_HPP_
