#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wildfire {

/// Seeded random stream. Gaussian draws use a stateless Box-Muller so the
/// number of engine draws per call is fixed (two), keeping replay exact.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        // 53-bit mantissa uniform in (0, 1]; never returns 0 so log() is safe.
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gaussian(double mean, double stddev) {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * mag * std::cos(2.0 * M_PI * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace wildfire
