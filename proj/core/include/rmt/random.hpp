#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>

namespace rmt {

using Seed = std::uint64_t;

/// Philox4x32-10 block function. Pure: the output depends only on
/// (key, counter), which is what makes sampling order independent.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// SplitMix64 finaliser, used to hash seeds into stream keys.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives a child seed from a parent seed and a path of integers, e.g.
/// derive_seed(seed, {N, replicate}).
Seed derive_seed(Seed parent, std::initializer_list<std::uint64_t> path);

/// A keyed counter-based stream. Every draw is addressed by a pair of
/// 64-bit indices; there is no hidden state.
class CounterStream {
 public:
  explicit CounterStream(Seed key) : key_(key) {}

  std::array<std::uint32_t, 4> block(std::uint64_t index, std::uint64_t lane) const;

  /// Two uniforms in the open interval (0, 1).
  std::pair<double, double> uniforms(std::uint64_t index, std::uint64_t lane) const;

  /// Two independent standard normals (Box-Muller on one block).
  std::pair<double, double> normals(std::uint64_t index, std::uint64_t lane) const;

  Seed key() const { return key_; }

 private:
  Seed key_;
};

}  // namespace rmt
