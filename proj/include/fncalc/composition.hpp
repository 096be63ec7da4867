#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fncalc {

/// Ambient dimension of the configuration space, either a positive integer or
/// the symbolic value infinity. Cells with some entry >= m are empty.
class AmbientDim {
public:
    constexpr AmbientDim() = default;
    constexpr explicit AmbientDim(int m) : m_(m) {
        if (m <= 0) throw std::invalid_argument("ambient dimension must be positive");
    }
    static constexpr AmbientDim infinity() { return AmbientDim(); }

    constexpr bool is_infinite() const { return !m_.has_value(); }
    constexpr int value() const { return *m_; }

    /// True when an entry of size `a` survives in this dimension.
    constexpr bool admits(int a) const { return is_infinite() || a < *m_; }

    constexpr bool operator==(const AmbientDim&) const = default;

private:
    std::optional<int> m_;
};

inline constexpr AmbientDim kInfinity{};

/// An unlabeled Fox-Neuwirth cell [a_1, ..., a_{n-1}] of the component with
/// n points. The component n = 0 (the empty configuration) has no entries and
/// acts as the unit for the transfer product.
class Composition {
public:
    Composition() = default;

    /// Cell of component entries.size() + 1.
    explicit Composition(std::vector<int> entries) : n_(static_cast<int>(entries.size()) + 1), a_(std::move(entries)) {
        validate();
    }
    Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}

    /// The unique cell of the empty configuration.
    static Composition empty_configuration() {
        Composition c;
        c.n_ = 0;
        return c;
    }
    /// The zero cell [0,...,0] of component n, representing the unit class 1_n.
    static Composition unit(int n) {
        if (n == 0) return empty_configuration();
        return Composition(std::vector<int>(static_cast<std::size_t>(n - 1), 0));
    }

    int n() const { return n_; }
    const std::vector<int>& entries() const { return a_; }
    std::size_t size() const { return a_.size(); }
    int operator[](std::size_t i) const { return a_[i]; }

    int degree() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    int max_entry() const { return a_.empty() ? -1 : *std::max_element(a_.begin(), a_.end()); }
    bool fits(AmbientDim m) const { return a_.empty() || m.admits(max_entry()); }

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    void validate() const {
        for (int a : a_)
            if (a < 0) throw std::invalid_argument("composition entries must be non-negative");
    }

    int n_ = 1;
    std::vector<int> a_;
};

/// All compositions of `degree` into n-1 non-negative parts, each part < m
/// when m is finite, in lexicographic order. For n = 0 the empty configuration
/// is returned in degree 0.
inline std::vector<Composition> enumerate_cells(int n, int degree, AmbientDim m = kInfinity) {
    std::vector<Composition> out;
    if (n < 0 || degree < 0) return out;
    if (n == 0) {
        if (degree == 0) out.push_back(Composition::empty_configuration());
        return out;
    }
    const int parts = n - 1;
    if (parts == 0) {
        if (degree == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    const int cap = m.is_infinite() ? degree : std::min(degree, m.value() - 1);
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    // depth-first fill in lexicographic order
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            if (remaining <= cap) {
                cur[static_cast<std::size_t>(pos)] = remaining;
                out.emplace_back(cur);
            }
            return;
        }
        const int slots_after = parts - pos - 1;
        for (int v = 0; v <= std::min(cap, remaining); ++v) {
            if (remaining - v > cap * slots_after) continue;
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, degree);
    return out;
}

/// A contiguous run of entries of a composition, recorded by position so that
/// empty runs keep their place.
struct Block {
    std::size_t begin = 0;  ///< index of the first entry
    std::size_t end = 0;    ///< one past the last entry
    std::size_t length() const { return end - begin; }
    bool empty() const { return begin == end; }
    bool operator==(const Block&) const = default;
};

/// The ordered maximal runs of entries > level, including the empty runs
/// delimited by entries <= level. A sequence of length L with z delimiters has
/// exactly z + 1 blocks.
inline std::vector<Block> block_positions(std::span<const int> a, int level) {
    std::vector<Block> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= level) {
            out.push_back({start, i});
            start = i + 1;
        }
    }
    out.push_back({start, a.size()});
    return out;
}

/// B_level(a) as value sequences.
inline std::vector<std::vector<int>> blocks(const Composition& a, int level) {
    std::vector<std::vector<int>> out;
    const auto& e = a.entries();
    for (const Block& b : block_positions(e, level))
        out.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(b.begin), e.begin() + static_cast<std::ptrdiff_t>(b.end));
    return out;
}

/// Concatenate blocks with a single separator entry between consecutive blocks.
inline std::vector<int> join_blocks(const std::vector<std::vector<int>>& parts, int separator) {
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(separator);
        out.insert(out.end(), parts[i].begin(), parts[i].end());
    }
    return out;
}

/// Depth-ordering i_1 <_{a_1} i_2 <_{a_2} ... <_{a_{n-1}} i_n: a labeled cell.
class DepthOrdering {
public:
    DepthOrdering() = default;
    DepthOrdering(std::vector<int> labels, std::vector<int> entries) : labels_(std::move(labels)), shape_(std::move(entries)) {
        if (labels_.size() != shape_.size() + 1) throw std::invalid_argument("depth-ordering needs n labels and n-1 entries");
        std::vector<int> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("depth-ordering labels must be a permutation of 1..n");
    }
    /// The identity labeling of an unlabeled cell.
    static DepthOrdering identity(const Composition& a) {
        std::vector<int> labels(static_cast<std::size_t>(a.n()));
        std::iota(labels.begin(), labels.end(), 1);
        return DepthOrdering(std::move(labels), a.entries());
    }

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    const Composition& shape() const { return shape_; }
    int degree() const { return shape_.degree(); }

    auto operator<=>(const DepthOrdering& o) const {
        if (auto c = shape_ <=> o.shape_; c != 0) return c;
        return labels_ <=> o.labels_;
    }
    bool operator==(const DepthOrdering&) const = default;

private:
    std::vector<int> labels_{1};
    Composition shape_;
};

}  // namespace fncalc
