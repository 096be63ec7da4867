#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace fncalc {

/// Packed vector over the field of two elements.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& o) {
        const std::size_t m = std::min(w_.size(), o.w_.size());
        for (std::size_t k = 0; k < m; ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    bool is_zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    /// Index of the lowest set bit, or size() if zero.
    std::size_t lowest() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
        return n_;
    }
    /// Index of the first set bit at or after `from`, or size().
    std::size_t next_set(std::size_t from) const {
        if (from >= n_) return n_;
        std::size_t k = from >> 6;
        std::uint64_t x = w_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (x) return k * 64 + static_cast<std::size_t>(std::countr_zero(x));
            if (++k == w_.size()) return n_;
            x = w_[k];
        }
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < w_.size(); ++k)
            for (std::uint64_t x = w_[k]; x; x &= x - 1) out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        return out;
    }
    bool operator==(const BitVector&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Incremental row echelon form over F2. Each stored row has its pivot at its
/// lowest set bit and carries a tag vector recording how it was formed.
class F2Echelon {
public:
    F2Echelon(std::size_t dim, std::size_t tag_dim) : dim_(dim), tag_dim_(tag_dim), pivot_row_(dim, -1) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduce v (and its tag) by every stored row whose pivot is set in v.
    void reduce(BitVector& v, BitVector& tag) const {
        for (std::size_t p = v.lowest(); p < dim_; p = v.next_set(p + 1)) {
            int r = pivot_row_[p];
            if (r < 0) continue;
            v ^= rows_[static_cast<std::size_t>(r)].first;
            tag ^= rows_[static_cast<std::size_t>(r)].second;
        }
    }

    /// Insert; returns false (and leaves the reduced tag in `tag`) when v
    /// reduces to zero.
    bool insert(BitVector v, BitVector& tag) {
        reduce(v, tag);
        if (v.is_zero()) return false;
        pivot_row_[v.lowest()] = static_cast<int>(rows_.size());
        rows_.emplace_back(std::move(v), tag);
        return true;
    }
    bool insert(BitVector v) {
        BitVector t(tag_dim_);
        return insert(std::move(v), t);
    }

    BitVector empty_tag() const { return BitVector(tag_dim_); }

private:
    std::size_t dim_, tag_dim_;
    std::vector<int> pivot_row_;
    std::vector<std::pair<BitVector, BitVector>> rows_;
};

}  // namespace fncalc
