#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bicolor {

// Square symmetric bit matrix stored as 64-bit words per row. Rows are the unit
// the search kernels work with: neighborhood intersection is a word-wise AND.
class BitMatrix {
public:
    BitMatrix() : n_(0), w_(0) {}
    explicit BitMatrix(int n) : n_(n), w_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * w_, 0) {}

    int size() const { return n_; }
    int words() const { return w_; }

    bool get(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
    }
    void set(int u, int v) {
        mrow(u)[v >> 6] |= 1ULL << (v & 63);
        mrow(v)[u >> 6] |= 1ULL << (u & 63);
    }
    void clear(int u, int v) {
        mrow(u)[v >> 6] &= ~(1ULL << (v & 63));
        mrow(v)[u >> 6] &= ~(1ULL << (u & 63));
    }
    void clear_row(int u) {
        for (int v = 0; v < n_; ++v) {
            if (get(u, v)) clear(u, v);
        }
    }

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * w_; }
    std::uint64_t* mrow(int u) { return bits_.data() + static_cast<std::size_t>(u) * w_; }

    int row_popcount(int u) const {
        int c = 0;
        const std::uint64_t* r = row(u);
        for (int i = 0; i < w_; ++i) c += std::popcount(r[i]);
        return c;
    }

    bool operator==(const BitMatrix& o) const = default;

private:
    int n_;
    int w_;
    std::vector<std::uint64_t> bits_;
};

inline int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int w) {
    int c = 0;
    for (int i = 0; i < w; ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

inline int popcount_and3(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* m, int w) {
    int c = 0;
    for (int i = 0; i < w; ++i) c += std::popcount(a[i] & b[i] & m[i]);
    return c;
}

// Word mask for { v : v > cut } on a universe of n vertices.
inline std::vector<std::uint64_t> above_mask(int n, int cut) {
    int w = (n + 63) / 64;
    std::vector<std::uint64_t> m(w, 0);
    for (int v = cut + 1; v < n; ++v) m[v >> 6] |= 1ULL << (v & 63);
    return m;
}

} // namespace bicolor
