#pragma once

#include <cstdint>

namespace ppc {

/// SplitMix64, used for all experiment randomness. Counter-based: output k of
/// seed s is mix(s + (k+1)*0x9E3779B97F4A7C15), so streams are reproducible
/// across implementations and per-trial substreams are cheap to derive.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, n) by rejection, n >= 1.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lo = (0 - n) % n;  // 2^64 mod n
        std::uint64_t v;
        do {
            v = next();
        } while (v < lo);
        return v % n;
    }

    /// Seed of substream `idx` of `seed`: the (idx+1)-th raw output.
    static std::uint64_t substream(std::uint64_t seed, std::uint64_t idx) {
        return SplitMix64(seed + idx * 0x9E3779B97F4A7C15ull).next();
    }

  private:
    std::uint64_t state_;
};

}  // namespace ppc
