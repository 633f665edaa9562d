#pragma once

#include <cstdint>
#include <stdexcept>

namespace osculant {

// splitmix64: tiny, deterministic across platforms, good dispersion.
// Used everywhere randomness is needed so runs replay bit-for-bit.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty range");
        const std::uint64_t limit = ~0ull - (~0ull % bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("empty range");
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<long long>(below(span));
    }

  private:
    std::uint64_t state_;
};

// Distinct, well-separated stream seed for (base, index) pairs.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 s(base);
    std::uint64_t a = s.next();
    SplitMix64 t(a ^ (index * 0xD6E8FEB86659FD93ull + 0x2545F4914F6CDD1Dull));
    return t.next();
}

}  // namespace osculant
