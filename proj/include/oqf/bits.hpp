#ifndef OQF_BITS_HPP
#define OQF_BITS_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace oqf {

// Fixed-universe dynamic bitset. All structures in this library index their
// elements densely, so subsets are plain bit vectors.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool get(int i) const { return (w_[size_t(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[size_t(i) >> 6] |= (uint64_t(1) << (i & 63)); }
    void reset(int i) { w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& x : w_) x = 0; }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }

    bool any() const {
        for (auto x : w_) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Lowest set bit at index >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        size_t wi = size_t(from) >> 6;
        uint64_t cur = w_[wi] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (cur) return int(wi * 64 + __builtin_ctzll(cur));
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int i = next(0); i >= 0; i = next(i + 1)) f(i);
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (auto x : w_) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace oqf

#endif
