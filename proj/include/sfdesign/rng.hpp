#pragma once

#include <cstdint>
#include <vector>

namespace sfdesign {

/// Seedable, splittable generator (xoshiro256** seeded through splitmix64).
/// Hand-rolled so that permutations and jitter draws are bit-reproducible
/// across standard libraries and platforms, which std::shuffle and
/// std::uniform_*_distribution do not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound), bound >= 1. Unbiased (rejection).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Derive an independent stream; stream index keeps replications and
    /// restarts decoupled from each other and from draw order.
    Rng split(std::uint64_t stream) const {
        std::uint64_t x = s_[0] ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        Rng r(0);
        for (auto& w : r.s_) w = splitmix64(x);
        return r;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace sfdesign
