#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcldpc {

/// Packed bit vector. Words hold codewords (length n), syndromes (length m).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    bool any() const {
        for (uint64_t x : words_)
            if (x) return true;
        return false;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.size_ != size_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVector&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qcldpc
