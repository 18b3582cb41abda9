#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace posmap {

// splitmix64 finalizer (Vigna). One multiply-xor-shift chain per output word;
// the whole generator state is a single 64-bit counter, so independent streams
// are just independently derived counters.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // standard complex Gaussian (independent N(0,1/2) real and imaginary
    // parts would also do; any rotation-invariant law gives Haar directions)
    std::complex<double> gaussian_pair() {
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1 + 1e-300));
        double th = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(th), r * std::sin(th)};
    }

private:
    std::uint64_t state_;
};

// Per-trial stream derivation: reproducible under any execution order.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ull)));
}

// Haar-uniform unit vector in C^n: normalized vector of iid complex Gaussians.
inline std::vector<std::complex<double>> haar_unit_vector(int n, SplitMix64& rng) {
    std::vector<std::complex<double>> v(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (auto& z : v) {
        z = rng.gaussian_pair();
        norm2 += std::norm(z);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : v) z *= inv;
    return v;
}

}  // namespace posmap
