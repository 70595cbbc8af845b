#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace cags {

// Deterministic RNG: mt19937_64 stream with hand-rolled variate transforms so
// draws are identical across standard library implementations.
class Rng {
public:
    Rng() : engine_(0) {}
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Independent substream, e.g. per-frame: child(seed-mix of stream id).
    Rng child(uint64_t stream) const {
        uint64_t s = mix(seed_base_ + 0x9e3779b97f4a7c15ull * (stream + 1));
        Rng r(s);
        r.seed_base_ = s;
        return r;
    }

    static Rng seeded(uint64_t seed) {
        Rng r(mix(seed));
        r.seed_base_ = seed;
        return r;
    }

    uint64_t next_u64() { return engine_(); }

    // uniform in [0,1) with 53-bit resolution
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // index in [0, n)
    uint64_t index(uint64_t n) { return next_u64() % n; }

    // Box-Muller, always consumes exactly two draws
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    std::string serialize() const {
        std::ostringstream os;
        os << engine_;
        return os.str();
    }

    void deserialize(const std::string& s) {
        std::istringstream is(s);
        is >> engine_;
    }

private:
    static uint64_t mix(uint64_t z) {
        // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    uint64_t seed_base_ = 0;
};

}  // namespace cags
