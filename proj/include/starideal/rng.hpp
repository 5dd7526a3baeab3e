#pragma once

#include <cstdint>
#include <string_view>

namespace starideal {

/// splitmix64 stream. Self-contained so that suite runs are byte-identical
/// across platforms and standard libraries (std distributions are not
/// specified bit-exactly).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) for n > 0, by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    /// Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic per-(suite, check, stream, trial) seed split.
inline std::uint64_t split_seed(std::uint64_t seed, std::string_view check_id,
                                std::uint64_t stream, std::uint64_t trial) {
    Rng mix(seed ^ fnv1a(check_id));
    std::uint64_t a = mix.next();
    Rng mix2(a ^ (0x9e3779b97f4a7c15ULL * (stream + 1)) ^ (trial * 0xda942042e4dd58b5ULL));
    return mix2.next();
}

}  // namespace starideal
