#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace drlfd {

/// Deterministic xoshiro256** generator seeded through splitmix64.
/// All outputs are reproducible bit-for-bit across platforms, which the
/// <random> distributions do not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal deviate (Box-Muller).
  double normal();
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates shuffle with this generator.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Derives an independent stream seed from (seed, stream index).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

/// One splitmix64 step; also usable as a cheap integer hash.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace drlfd
