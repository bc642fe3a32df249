#pragma once

#include <cstdint>

#include "excalg/rational.hpp"

namespace excalg {

// SplitMix64. Streams are identical on every platform; the standard
// library's distributions are implementation-defined and are not used
// anywhere output bytes are compared.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  long pick(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Independent stream for item `index`, so per-item work can be scheduled in
  // any order (or on any thread) without changing results.
  static Rng partition(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632be59bd9b4e019ull * (index + 0x9e3779b97f4a7c15ull)));
    r.next();
    return r;
  }

  // Named substream (construction vs. verification samples stay disjoint).
  static Rng stream(std::uint64_t seed, std::uint64_t tag) {
    Rng r(seed + 0x100000001b3ull * tag);
    r.next();
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

// Fixed finite pool of small scalars used for sampling; singular draws are
// rerolled by the callers.
inline Int random_small_int(Rng& rng, bool nonzero) {
  static const long pool[] = {-3, -2, -1, 0, 1, 2, 3};
  for (;;) {
    long v = pool[rng.below(7)];
    if (!nonzero || v != 0) return Int(v);
  }
}

inline Rat random_small_rat(Rng& rng, bool nonzero) {
  static const long nums[] = {-3, -2, -1, 0, 1, 2, 3};
  static const long dens[] = {1, 1, 2, 3};
  for (;;) {
    long n = nums[rng.below(7)];
    if (nonzero && n == 0) continue;
    Rat q(n, dens[rng.below(4)]);
    q.canonicalize();
    return q;
  }
}

}  // namespace excalg
