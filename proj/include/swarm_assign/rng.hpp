#pragma once

#include <cstdint>
#include <string_view>

namespace swarm_assign {

// Deterministic, platform-independent PRNG (splitmix64 stepping). All
// randomness in the library flows from one explicit 64-bit seed through
// named sub-streams so that, e.g., target motion cannot be perturbed by
// the choice of assignment algorithm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  /// Uniform integer in [lo, hi], inclusive. Rejection sampling, no modulo bias.
  int uniform_int(int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~0ULL - ~0ULL % range;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + static_cast<int>(v % range);
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Key for a named sub-stream of `seed`; extra indices select per-entity or
/// per-step streams. Same inputs give the same key on every platform.
inline std::uint64_t stream_key(std::uint64_t seed, std::string_view name,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  h = detail::mix64(h ^ seed);
  h = detail::mix64(h + 0x9e3779b97f4a7c15ULL * (a + 1));
  h = detail::mix64(h + 0x9e3779b97f4a7c15ULL * (b + 2));
  return h;
}

inline Rng derive_stream(std::uint64_t seed, std::string_view name,
                         std::uint64_t a = 0, std::uint64_t b = 0) {
  return Rng(stream_key(seed, name, a, b));
}

}  // namespace swarm_assign
