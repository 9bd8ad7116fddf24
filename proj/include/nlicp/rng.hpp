#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace nlicp {

/// Mixes a value into a 64-bit hash state (splitmix64 finalizer).
/// Used everywhere a named sub-stream seed is derived from a master seed,
/// so that results stay identical no matter how work is scheduled.
std::uint64_t hash_combine(std::uint64_t state, std::uint64_t value) noexcept;

/// seed = hash(master, s0, s1, ...); order of the labels matters.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> labels) noexcept;

/// Self-contained xoshiro256++ generator with explicit samplers.
/// Standard-library distributions are implementation-defined; every draw
/// here is spelled out so identical seeds give identical streams on any
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;

  /// Unbiased integer in [0, n); n >= 1.
  std::uint64_t uniform_int(std::uint64_t n) noexcept;

  /// Standard normal via Box-Muller (two uniforms per call, no caching).
  double normal() noexcept;

  /// Gamma(shape, 1), shape > 0 (Marsaglia-Tsang).
  double gamma(double shape) noexcept;

  double chi_squared(double df) noexcept;

  /// Student t with df > 0 degrees of freedom.
  double student_t(double df) noexcept;

  /// k distinct indices from [0, n), in draw order.
  std::vector<int> sample_without_replacement(int n, int k);

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<int> permutation(int n);

 private:
  std::uint64_t s_[4];
};

}  // namespace nlicp
