#pragma once

#include <complex>
#include <cstdint>
#include <random>

// Seedable draws that do not depend on std distribution internals, so test
// data is identical across standard libraries.
namespace testrng {

inline double uniform01(std::mt19937& gen) {
    const std::uint64_t hi = gen() >> 5;   // 27 bits
    const std::uint64_t lo = gen() >> 6;   // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) / 9007199254740992.0;
}

inline double uniform(std::mt19937& gen, double a, double b) {
    return a + (b - a) * uniform01(gen);
}

inline std::complex<double> complex_box(std::mt19937& gen, double scale = 1.0) {
    return {scale * (2.0 * uniform01(gen) - 1.0), scale * (2.0 * uniform01(gen) - 1.0)};
}

inline std::complex<double> disk_point(std::mt19937& gen, double rmax = 1.0) {
    const double r = rmax * std::sqrt(uniform01(gen));
    const double th = 2.0 * 3.14159265358979323846 * uniform01(gen);
    return std::polar(r, th);
}

inline int uniform_int(std::mt19937& gen, int lo, int hi) {
    return lo + static_cast<int>(uniform01(gen) * (hi - lo + 1)) % (hi - lo + 1);
}

}  // namespace testrng
