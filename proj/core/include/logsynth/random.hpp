#pragma once

#include <cstdint>
#include <span>

namespace logsynth {

/// Deterministic pseudo-random stream (splitmix64). Every randomized
/// operation in the library takes one of these instead of touching global
/// state, so identical seeds reproduce identical outputs on any platform.
///
/// Streams are cheap to derive: derive(tag, index) is a pure function of the
/// seed this stream was created with, independent of how many values were
/// drawn from it. Record generation keys one child stream per record index,
/// which keeps output identical regardless of evaluation order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t uniform64(std::uint64_t bound) {
        // Lemire multiply-shift with rejection.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::uint32_t uniform(std::uint32_t bound) {
        return static_cast<std::uint32_t>(uniform64(bound));
    }

    /// [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Child stream keyed by (creation seed, tag, index).
    RandomStream derive(std::uint64_t tag, std::uint64_t index = 0) const {
        std::uint64_t x = mix(seed_ ^ (tag * 0x9e3779b97f4a7c15ULL));
        x = mix(x ^ (index + 0x632be59bd9b4e019ULL));
        return RandomStream(x);
    }

    std::uint64_t seed() const noexcept { return seed_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by a RandomStream.
template <typename T>
void shuffle(std::span<T> items, RandomStream& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = rng.uniform64(i);
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

}  // namespace logsynth
