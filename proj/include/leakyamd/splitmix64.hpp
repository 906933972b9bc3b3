#pragma once

#include <cstdint>

namespace lamd {

// splitmix64: the standard 64-bit mixing generator. Used wherever the tools
// need reproducible sampled randomness; the name is echoed in reports so a
// run can be replayed elsewhere.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Residue in [0, m); m is tiny next to 2^64 so the bias is negligible.
    uint64_t next_mod(uint64_t m) { return next() % m; }

  private:
    uint64_t state_;
};

}  // namespace lamd
