#pragma once

#include <cstdint>

namespace taskdiff {

// Deterministic seeded randomness. All streams are derived by pure hashing,
// so every run of the artifact is reproducible from its root seeds and no
// stream ever aliases another (task randomness vs agent randomness stay on
// disjoint derived keys). We avoid std distributions on purpose: their output
// is not pinned across standard libraries, and frozen test values need to be.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ull + (b << 6) + (b >> 2)));
}

// Stream tags keep derived key spaces apart.
enum class StreamTag : uint64_t {
    task = 0x7461736bull,
    agent = 0x6167656eull,
    mixture = 0x6d697875ull,
    eval = 0x6576616cull,
    verify = 0x76657269ull,
};

inline uint64_t fnv1a64(const char* data, size_t n) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t derive(uint64_t seed, uint64_t a) { return hash_combine(seed, a); }
inline uint64_t derive(uint64_t seed, uint64_t a, uint64_t b) {
    return hash_combine(hash_combine(seed, a), b);
}
inline uint64_t derive(uint64_t seed, StreamTag tag, uint64_t a) {
    return derive(seed, static_cast<uint64_t>(tag), a);
}

class RngStream {
public:
    explicit RngStream(uint64_t seed = 0) : state_(splitmix64(seed)) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    uint32_t next_bit() { return static_cast<uint32_t>(next_u64() >> 63); }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n). Multiply-shift; the bias at 64 bits is
    // far below anything observable here.
    uint64_t next_below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    int64_t next_range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    uint64_t state_;
};

} // namespace taskdiff
