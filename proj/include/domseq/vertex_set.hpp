#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace domseq {

// Fixed-capacity set of vertex ids. Two 64-bit words cover every graph this
// library targets; constructors of larger graphs must fail before one of
// these is ever indexed out of range.
class VertexSet {
public:
    static constexpr int capacity = 128;

    constexpr VertexSet() = default;

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet range(int n) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            int lo = w * 64;
            if (n <= lo) break;
            int in_word = n - lo;
            s.words_[w] = in_word >= 64 ? ~0ULL : ((1ULL << in_word) - 1);
        }
        return s;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1ULL; }
    void set(int v) { words_[v >> 6] |= 1ULL << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(1ULL << (v & 63)); }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    // Smallest element, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }

    bool subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Visits elements in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::uint64_t word(int i) const { return words_[static_cast<std::size_t>(i)]; }
    static constexpr int word_count() { return kWords; }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }

private:
    static constexpr int kWords = capacity / 64;
    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace domseq

template <>
struct std::hash<domseq::VertexSet> {
    std::size_t operator()(const domseq::VertexSet& s) const { return s.hash(); }
};
