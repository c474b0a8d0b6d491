#pragma once

#include <cstdint>
#include <vector>

#if defined(_MSC_VER)
#include <intrin.h>
#endif

namespace curvesys {

// Fixed-capacity dynamic bitset backed by 64-bit words. Sized once at
// construction; used as vertex sets in the branch-and-bound searches.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(popcount64(w));
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) {
        a &= b;
        return a;
    }

    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend Bitset operator^(Bitset a, const Bitset& b) {
        a ^= b;
        return a;
    }

    // Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                std::uint64_t b = w & (~w + 1);
                f(wi * 64 + static_cast<std::size_t>(ctz64(w)));
                w ^= b;
            }
        }
    }

    static int popcount64(std::uint64_t w) {
#if defined(_MSC_VER)
        return static_cast<int>(__popcnt64(w));
#else
        return __builtin_popcountll(w);
#endif
    }

    static int ctz64(std::uint64_t w) {
#if defined(_MSC_VER)
        unsigned long idx;
        _BitScanForward64(&idx, w);
        return static_cast<int>(idx);
#else
        return __builtin_ctzll(w);
#endif
    }

private:
    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace curvesys
