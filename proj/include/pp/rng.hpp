#pragma once

#include <cstdint>

namespace pp {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic seed derivation: (experiment seed, component, step, agent).
// Every consumer of randomness draws its seed through this so that paired
// runs across strategies share random numbers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t component,
                                 std::uint64_t step = 0, std::uint64_t agent = 0) {
    std::uint64_t s = splitmix64(seed ^ 0x6a09e667f3bcc909ull);
    s = splitmix64(s ^ component);
    s = splitmix64(s ^ step);
    s = splitmix64(s ^ agent);
    return s;
}

// Small deterministic generator; used instead of std::uniform_int_distribution
// so draws are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t r = splitmix64(state_);
        state_ += 0x9e3779b97f4a7c15ull;
        return r;
    }

    // Uniform draw in [0, bound).
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace pp
