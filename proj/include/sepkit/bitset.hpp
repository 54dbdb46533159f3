#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace sepkit {

// Dynamic fixed-width bitset sized at construction. The search code keeps
// candidate sets and adjacency rows in these; all operands of a binary op
// must have the same width.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int width() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // this := this \ o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // First set bit at position >= from, or -1.
    int find_next(int from) const {
        if (from >= nbits_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return int(wi * 64 + std::countr_zero(cur));
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }

    int find_first() const { return find_next(0); }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t cur = w_[wi];
            while (cur) {
                f(int(wi * 64 + std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::uint64_t word(std::size_t i) const { return w_[i]; }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace sepkit
