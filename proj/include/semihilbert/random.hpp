// Copyright the semihilbert authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMIHILBERT_RANDOM_HPP
#define SEMIHILBERT_RANDOM_HPP

#include <cstdint>
#include <limits>

namespace semihilbert
{

/// SplitMix64 finalizer applied to x + golden gamma.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Per-trial seed: splitmix64(master ^ splitmix64(index)).
constexpr std::uint64_t mix(std::uint64_t master, std::uint64_t index) noexcept
{
  return splitmix64(master ^ splitmix64(index));
}

/// Counter-based SplitMix64 engine. Output k is splitmix64(seed + k * gamma),
/// so any stream position is reachable without replaying the prefix.
class SplitMix64
{
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept
  {
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
  }

  /// Independent child stream, keyed by `tag`.
  SplitMix64 split(std::uint64_t tag) const noexcept { return SplitMix64(mix(state_, tag)); }

private:
  std::uint64_t state_;
};

}  // namespace semihilbert

#endif  // SEMIHILBERT_RANDOM_HPP
