#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace trv {

/// Seeded RNG wrapper producing the same stream on every platform.
/// std::mt19937_64 output is pinned by the standard; the distributions here
/// are hand-rolled because std::uniform_int_distribution and friends are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling to kill modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (two uniforms per draw, no cached state).
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        // 1 - u1 keeps the log argument in (0, 1]
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace trv
