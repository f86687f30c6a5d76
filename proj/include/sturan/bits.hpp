#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sturan {

// Fixed-width bit row. Used for adjacency rows and vertex subsets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(w_.begin(), w_.end(), std::uint64_t{0}); }

    int count() const {
        int c = 0;
        for (std::uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (std::uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, -1 when empty.
    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // and-not: clears every bit that is set in o.
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Calls f(i) for every set bit in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(static_cast<int>(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace sturan
