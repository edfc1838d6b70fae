#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "hyper/algebra.hpp"
#include "hyper/hnumber.hpp"

namespace hyper {

/// Seedable portable generator.  mt19937_64 has a fully specified output
/// sequence; doubles are derived by explicit bit manipulation rather than
/// std::uniform_real_distribution, so streams are identical across
/// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    HNumber hnumber(double scale = 2.0) {
        return HNumber(uniform(-scale, scale), uniform(-scale, scale),
                       uniform(-scale, scale), uniform(-scale, scale));
    }

    AlgebraElement algebra_element(double scale = 2.0) {
        return {hnumber(scale), hnumber(scale), hnumber(scale), hnumber(scale)};
    }

    Paravector paravector(double scale = 2.0) {
        return Paravector(uniform(-scale, scale), uniform(-scale, scale),
                          uniform(-scale, scale), uniform(-scale, scale));
    }

    /// Uniform direction on the unit sphere via rejection from the cube.
    std::array<double, 3> unit3() {
        for (;;) {
            const double a = uniform(-1.0, 1.0);
            const double b = uniform(-1.0, 1.0);
            const double c = uniform(-1.0, 1.0);
            const double n2 = a * a + b * b + c * c;
            if (n2 > 0.01 && n2 <= 1.0) {
                const double inv = 1.0 / std::sqrt(n2);
                return {a * inv, b * inv, c * inv};
            }
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hyper
