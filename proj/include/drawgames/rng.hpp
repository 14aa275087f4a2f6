#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <string_view>

namespace drawgames {

// All randomness in the engine flows through explicit seeded streams derived
// from one master seed. Streams are SplitMix64 counters: cheap, stateless to
// fork, and identical on every platform with 64-bit integers.

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64_bytes(const void* data, size_t n) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

class RngStream {
public:
    RngStream() : state_(0) {}
    explicit RngStream(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [0, n). n == 0 returns 0.
    uint64_t below(uint64_t n) {
        if (n == 0) return 0;
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t range_int(int64_t lo, int64_t hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Standard normal via Box-Muller. Consumes exactly two raw draws per call.
    double gaussian() {
        double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double gaussian(double mu, double sigma) { return mu + sigma * gaussian(); }

    bool coin(double p_true) { return next_double() < p_true; }

private:
    uint64_t state_;
};

/// Named substream of a master seed. Adding a new stream (e.g. for logging)
/// never perturbs draws taken from any other stream.
inline RngStream substream(uint64_t master, std::string_view name) {
    uint64_t s = master ^ fnv1a64(name);
    return RngStream(splitmix64(s));
}

inline RngStream substream(uint64_t master, std::string_view name, uint64_t index) {
    uint64_t s = master ^ fnv1a64(name);
    s = splitmix64(s) + 0x9e3779b97f4a7c15ull * (index + 1);
    return RngStream(splitmix64(s));
}

}  // namespace drawgames
