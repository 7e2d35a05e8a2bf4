#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "majolab/matrix.hpp"

namespace majolab {

/// Seeded random stream. The uniform and Gaussian transforms are spelled out
/// here instead of using <random> distributions so that a seed produces the
/// same draws on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform in {lo, ..., hi} inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller; consumes two words per call.
    double gaussian() {
        double u1 = uniform01();
        const double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    cplx cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace majolab
