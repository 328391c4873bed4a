#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>

namespace rainbow {

// Fixed-capacity bit set with a runtime width. Widths up to kMaxBits are
// supported; operations touch only the words a given width occupies, so
// small sets stay cheap inside search loops.
class Bitset {
public:
    static constexpr int kMaxBits = 1024;
    static constexpr int kWords = kMaxBits / 64;

    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits) {
        assert(nbits >= 0 && nbits <= kMaxBits);
    }

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void clear() {
        for (int k = 0; k < words(); ++k) w_[k] = 0;
    }

    int count() const {
        int c = 0;
        for (int k = 0; k < words(); ++k) c += std::popcount(w_[k]);
        return c;
    }
    bool any() const {
        for (int k = 0; k < words(); ++k)
            if (w_[k]) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (int k = 0; k < words(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        for (int k = 0; k < words(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o) {
        for (int k = 0; k < words(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (int k = 0; k < words(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (int k = 0; k < words(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    bool operator==(const Bitset& o) const {
        if (nbits_ != o.nbits_) return false;
        for (int k = 0; k < words(); ++k)
            if (w_[k] != o.w_[k]) return false;
        return true;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    uint64_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (int k = 0; k < words(); ++k) {
            h ^= w_[k];
            h *= 0x100000001b3ull;
        }
        return h ^ static_cast<uint64_t>(nbits_);
    }

private:
    int nbits_ = 0;
    std::array<uint64_t, kWords> w_{};

    int words() const { return (nbits_ + 63) >> 6; }
};

}  // namespace rainbow
