#ifndef SHIFTDISC_RNG_HPP
#define SHIFTDISC_RNG_HPP

#include <cstdint>

namespace shiftdisc {

// splitmix64 (Steele/Lea/Flood). Fixed here as the project-wide seeded
// generator so every sampled result is reproducible across platforms.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One-shot mix of a 64-bit value, used for keyed hashing.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64_next(s);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return splitmix64_next(state_); }

    // Uniform value in [0, n) by rejection from the top of the range,
    // so the distribution is exact for every n.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t state_;
};

} // namespace shiftdisc

#endif
