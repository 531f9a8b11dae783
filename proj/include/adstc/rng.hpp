#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "adstc/types.hpp"

namespace adstc {

/// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the stream identified by (master, k1, k2, k3). Worker scheduling
/// never enters the derivation, so results are independent of thread count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k1,
                                 std::uint64_t k2 = 0, std::uint64_t k3 = 0) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ k1);
    h = mix64(h ^ k2);
    h = mix64(h ^ k3);
    return h;
}

/// Content key for a double (bit pattern), for content-addressed streams.
inline std::uint64_t double_key(double v) {
    std::uint64_t u;
    static_assert(sizeof(u) == sizeof(v));
    std::memcpy(&u, &v, sizeof(u));
    return u;
}

/// Deterministic random stream. Uniforms are taken from the top 53 bits of
/// mt19937_64 output so draws do not depend on library distribution details.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// One fair bit.
    std::uint8_t bit() { return static_cast<std::uint8_t>(next_u64() >> 63); }

    /// Standard normal via Box-Muller; pairs are cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * kPi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    /// Circularly symmetric complex Gaussian CN(0, variance).
    cd cgauss(double variance) {
        const double s = std::sqrt(variance * 0.5);
        const double re = gaussian();
        const double im = gaussian();
        return {s * re, s * im};
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace adstc
