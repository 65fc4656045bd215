// Copyright 2026 The glad Authors
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

#ifndef GLAD_RNG_HPP
#define GLAD_RNG_HPP

#include <cstdint>
#include <string_view>

namespace glad {

/// Seeded pseudo-random stream (xoshiro256++), hand-rolled so that trials
/// reproduce bit-for-bit across platforms. std::uniform_real_distribution is
/// implementation-defined and cannot be used for golden results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the full state.
    std::uint64_t x = seed;
    for (auto& word : state_) {
      word = splitmix64(x);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t state_[4];
};

/// Order-independent key hashing for derived substreams. Sampling keyed
/// quantities (e.g. hazard ground truth per pose) from hash-derived seeds
/// keeps them identical across runs that query the keys in different orders.
inline std::uint64_t hash_u64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  std::uint64_t x = h;
  return Rng::splitmix64(x);
}

inline std::uint64_t hash_str(std::uint64_t h, std::string_view s) {
  // FNV-1a over the bytes, folded into the running hash.
  std::uint64_t f = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    f = (f ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  }
  return hash_u64(h, f);
}

}  // namespace glad

#endif  // GLAD_RNG_HPP
