#ifndef HSTRATA_RNG_HPP
#define HSTRATA_RNG_HPP

#include <cstdint>

namespace hstrata {

// splitmix64. Used instead of <random> engines/distributions so that seeded
// runs are bit-identical across platforms and standard libraries.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0. Modulo bias is irrelevant at test scale.
  uint64_t below(uint64_t n) { return next() % n; }

  // uniform integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

private:
  uint64_t state_;
};

// Derives a per-case stream from a suite seed; keeps failure reports
// reproducible from the single embedded seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return g.next();
}

}  // namespace hstrata

#endif
