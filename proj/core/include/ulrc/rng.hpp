#pragma once

#include <cstdint>
#include <vector>

#include "ulrc/errors.hpp"

namespace ulrc {

/// SplitMix64 generator (Steele, Lea, Flood 2014). 64-bit state, one
/// multiply-xor-shift chain per output. Chosen over std::mt19937_64 +
/// std::uniform_int_distribution because the standard distributions are
/// implementation-defined; this stream is identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) without modulo bias (rejection sampling).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("SplitMix64::below: bound must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t v = next();
    while (v > limit) v = next();
    return v % bound;
  }

  /// `count` distinct values from [0, n), by partial Fisher-Yates shuffle.
  /// Returned in shuffle order.
  std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t count) {
    if (count > n) throw PreconditionError("sample_distinct: count exceeds population");
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ulrc
