#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace qcldpc {

/// Counter-based pseudo-random generator (splitmix64 core). Substreams are
/// derived from a master seed plus a path of integers, so trials indexed by
/// (sweep point, frame) draw identical values no matter how work is scheduled
/// across threads.
class Prng {
public:
    explicit Prng(uint64_t key) : key_(key) {}

    /// Derive a substream key: chain-mixes each path element into the master.
    static Prng derive(uint64_t master, std::initializer_list<uint64_t> path) {
        uint64_t k = finalize(master ^ 0x6a09e667f3bcc909ull);
        for (uint64_t id : path) k = finalize(k + 0x9e3779b97f4a7c15ull * (id + 1));
        return Prng(k);
    }

    uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return finalize(key_ ^ counter_);
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Rejection keeps the draw unbiased.
    uint32_t next_below(uint32_t bound) {
        if (bound <= 1) return 0;
        uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= lim);
        return uint32_t(x % bound);
    }

    bool next_bit() { return next_u64() >> 63; }

    /// Standard normal via Marsaglia polar method (pairs cached).
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double mul = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * mul;
        has_spare_ = true;
        return u * mul;
    }

private:
    static uint64_t finalize(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    uint64_t key_;
    uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qcldpc
