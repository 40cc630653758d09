#pragma once

#include <cstdint>

namespace parity {

// Counter-based generator (splitmix64 over seed-offset counter).  The same
// (seed, counter) pair yields the same stream on every platform, which is
// what makes generated instances byte-identical across runs.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.  Modulo bias is irrelevant at the
  // range sizes used here.
  long long range(long long lo, long long hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  bool coin() { return (next() & 1) != 0; }

  // Child stream for an independent component (trial, round, ...).
  SeededRng fork(std::uint64_t salt) {
    std::uint64_t z = seed_ ^ (0xd1342543de82ef95ULL * (salt + 1));
    z = (z ^ (z >> 29)) * 0xff51afd7ed558ccdULL;
    return SeededRng(z ^ (z >> 32));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace parity
