#ifndef STRATA_RNG_HPP
#define STRATA_RNG_HPP

#include <cstdint>

namespace strata {

/*
 * SplitMix64. We promise byte-identical output for identical (config, seed),
 * so std::mt19937_64 + uniform_int_distribution is out: the distribution's
 * algorithm is implementation-defined. This generator is tiny and portable.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform on [0, bound), rejection sampled so there is no modulo bias
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t x = next();
        while (x >= limit)
            x = next();
        return x % bound;
    }

    // uniform on [lo, hi], both ends included
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Independent stream per (seed, trial) so a failing trial can be replayed
// without regenerating its predecessors.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
    Rng r(seed ^ (0xbf58476d1ce4e5b9ull * (trial + 1)));
    r.next();
    return r;
}

} // namespace strata

#endif
