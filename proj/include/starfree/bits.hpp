#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace starfree {

inline constexpr int kMaxVertices = 512;

/// Fixed-width 512-bit row. All vertex-set arithmetic in the library runs on
/// this type; it carries no notion of the graph order.
class Bits {
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr Bits() = default;

    static Bits prefix(int count) {
        Bits b;
        for (int w = 0; w < kWords && count > 0; ++w, count -= 64)
            b.w_[w] = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
        return b;
    }

    static Bits single(int v) {
        Bits b;
        b.set(v);
        return b;
    }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    /// Lowest set bit, or -1.
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w]) return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }

    /// Lowest set bit strictly greater than v, or -1.
    int next(int v) const {
        ++v;
        if (v >= kMaxVertices) return -1;
        int w = v >> 6;
        std::uint64_t cur = w_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w == kWords) return -1;
            cur = w_[w];
        }
    }

    /// Highest set bit, or -1.
    int last() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (w_[w]) return w * 64 + 63 - std::countl_zero(w_[w]);
        return -1;
    }

    /// Bits strictly above v.
    Bits above(int v) const {
        Bits r = *this;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (v >= lo + 63) r.w_[w] = 0;
            else if (v >= lo) r.w_[w] &= ~std::uint64_t{0} << (v - lo + 1);
        }
        return r;
    }

    bool intersects(const Bits& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & o.w_[w]) return true;
        return false;
    }

    bool subset_of(const Bits& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & ~o.w_[w]) return false;
        return true;
    }

    int count_and(const Bits& o) const {
        int c = 0;
        for (int w = 0; w < kWords; ++w) c += std::popcount(w_[w] & o.w_[w]);
        return c;
    }

    Bits& operator&=(const Bits& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= o.w_[w];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (int w = 0; w < kWords; ++w) w_[w] |= o.w_[w];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (int w = 0; w < kWords; ++w) w_[w] ^= o.w_[w];
        return *this;
    }
    /// Set difference.
    Bits& operator-=(const Bits& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= ~o.w_[w];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    friend bool operator==(const Bits&, const Bits&) = default;

    /// Ascending order of the set bits; lexicographic comparison of these
    /// vectors is the witness tie-break order used by every solver.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t x = w_[w];
            while (x) {
                f(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::uint64_t word(int w) const { return w_[w]; }

private:
    std::array<std::uint64_t, kWords> w_{};
};

/// A subset of the vertices of a graph of order n.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n) {}
    VertexSet(int n, const Bits& bits) : n_(n), bits_(bits & Bits::prefix(n)) {}
    VertexSet(int n, const std::vector<int>& members) : n_(n) {
        for (int v : members) bits_.set(v);
    }

    static VertexSet all(int n) { return VertexSet(n, Bits::prefix(n)); }

    int universe() const { return n_; }
    int size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(int v) const { return v >= 0 && v < n_ && bits_.test(v); }
    void insert(int v) { bits_.set(v); }
    void erase(int v) { bits_.reset(v); }

    const Bits& bits() const { return bits_; }
    std::vector<int> to_vector() const { return bits_.to_vector(); }

    VertexSet complement() const { return VertexSet(n_, Bits::prefix(n_) - bits_); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int n_ = 0;
    Bits bits_;
};

}  // namespace starfree
