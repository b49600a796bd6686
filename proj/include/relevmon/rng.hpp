#pragma once

#include <cstdint>
#include <random>

#include "relevmon/normal.hpp"

namespace relevmon {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Hash-chains a base seed with up to three stream coordinates (replication
// index, scenario id, ...) so parallel work items get independent streams
// that do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base ^ 0x2545f4914f6cdd1dULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return splitmix64(s ^ c);
}

inline std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
    return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

// Standard normal draw by inverse transform on a 53-bit uniform. Portable
// across standard libraries, unlike std::normal_distribution.
inline double std_normal(std::mt19937_64& gen) {
    const double u = (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
    return detail::normal_quantile_acklam(u);
}

inline double uniform01(std::mt19937_64& gen) {
    return (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
}

}  // namespace relevmon
