#ifndef IDG_RNG_HPP
#define IDG_RNG_HPP

#include <cstdint>

namespace idg {

// xorshift64*: deterministic across platforms; seeds are part of scenario
// files so every randomized search is reproducible
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}   // namespace idg

#endif
