// Counter-based random streams: every value is a pure function of
// (key, index), so draws can be consumed in any order or from any
// thread without changing results.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace trendfilter {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z)
{
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Combine identifiers (seed, experiment id, n, rep, ...) into one key.
inline std::uint64_t rng_key(std::uint64_t a) { return detail::mix64(a); }
template <typename... Rest>
inline std::uint64_t rng_key(std::uint64_t a, Rest... rest)
{
    return detail::mix64(a ^ (rng_key(static_cast<std::uint64_t>(rest)...) + 0x9e3779b97f4a7c15ULL));
}

inline std::uint64_t hash_string(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct CounterRng {
    std::uint64_t key = 0;

    std::uint64_t bits(std::uint64_t index) const { return detail::mix64(key ^ detail::mix64(index)); }

    // uniform in (0, 1); never returns 0 so log() below is safe
    double uniform(std::uint64_t index) const
    {
        return (static_cast<double>(bits(index) >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; gaussian i consumes counters 2i, 2i+1
    double gaussian(std::uint64_t index) const
    {
        double u1 = uniform(2 * index);
        double u2 = uniform(2 * index + 1);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    std::vector<double> gaussian_vector(std::size_t count, std::uint64_t offset = 0) const
    {
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i) out[i] = gaussian(offset + i);
        return out;
    }
};

}  // namespace trendfilter
