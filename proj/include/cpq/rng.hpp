#ifndef CPQ_RNG_HPP
#define CPQ_RNG_HPP

#include <cstdint>

namespace cpq {

/// SplitMix64: tiny, fully deterministic across platforms, good enough for
/// seeding property tests.  std::mt19937 with the standard distributions is
/// not byte-stable across library implementations, which would break the
/// reproducibility contract of the verification CLI.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [0, n); modulo bias is irrelevant at our sample sizes.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace cpq

#endif
