#pragma once

#include <cstdint>

namespace mipslsh {

// Deterministic counter-keyed random stream.
//
// Algorithm: SplitMix64 (Steele/Lea/Flood finalizer). A substream for draw
// index i under master seed s starts from mix64(mix64(s) + i), so every
// (seed, index) pair names the same stream on every platform and thread.
// Gaussians use the Marsaglia polar method; both choices are part of the
// reproducibility contract and must not be swapped for std::normal_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

    // Stream for the i-th independent draw under `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng r(0);
        r.state_ = mix64(mix64(seed) + index);
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // Uniform on [0,1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Standard normal via the polar method. Second deviate is cached.
    double next_gaussian();

private:
    static std::uint64_t mix64(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace mipslsh
