#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rmt {

namespace detail {

/// Calls visit(blocks) for every set partition of {0..n-1}; each block is a
/// bit mask. Restricted growth strings, so n up to ~10 is cheap.
template <class Visit>
void for_each_set_partition(int n, Visit&& visit) {
  std::vector<int> label(n, 0);
  std::vector<std::uint32_t> blocks;
  for (;;) {
    int count = 0;
    for (int v : label) count = std::max(count, v + 1);
    blocks.assign(count, 0u);
    for (int i = 0; i < n; ++i) blocks[label[i]] |= (1u << i);
    visit(blocks);
    // Next restricted growth string.
    int i = n - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, label[j]);
      if (label[i] <= max_prefix) {
        ++label[i];
        for (int j = i + 1; j < n; ++j) label[j] = 0;
        break;
      }
    }
    if (i <= 0) return;
  }
}

}  // namespace detail

template <class Scalar, class MomentFn>
Scalar joint_cumulant(int n, MomentFn&& moment) {
  static const double factorial[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800};
  Scalar total{};
  detail::for_each_set_partition(n, [&](const std::vector<std::uint32_t>& blocks) {
    const int b = static_cast<int>(blocks.size());
    Scalar term = ((b - 1) % 2 == 0 ? 1.0 : -1.0) * factorial[b - 1];
    for (std::uint32_t mask : blocks) term *= moment(mask);
    total += term;
  });
  return total;
}

}  // namespace rmt
