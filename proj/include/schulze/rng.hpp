#pragma once

#include <cstdint>
#include <vector>

namespace schulze {

/// splitmix64: the 64-bit mixer stream of Steele, Lea and Flood.
/// Fixed constants, no platform-dependent behavior: a given seed produces
/// the same stream everywhere, which is what makes elections, generators
/// and benchmarks reproducible down to the iteration count.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n). Rejection sampling: draws whose remainder
  /// band would bias the result are discarded, so every residue is equally
  /// likely. n must be positive.
  constexpr std::uint64_t below(std::uint64_t n) {
    const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r = next();
    while (rem != 0 && r >= 0 - rem) r = next();
    return r % n;
  }

  /// Uniform integer in the closed interval [lo, hi].
  constexpr std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Independent substream seed for subtask k of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  SplitMix64 s(seed ^ (k + 1) * 0x9e3779b97f4a7c15ull);
  return s.next();
}

/// In-place Fisher-Yates shuffle driven by the given stream.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    T tmp = items[i - 1];
    items[i - 1] = items[j];
    items[j] = tmp;
  }
}

/// Uniform random permutation of 0..n-1.
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  shuffle(p, rng);
  return p;
}

}  // namespace schulze
