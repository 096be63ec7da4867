#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "chain.hpp"
#include "composition.hpp"

namespace fncalc {

using Cochain = Chain<Composition>;
using LabeledCochain = Chain<DepthOrdering>;

/// Edge quotient at position i of a cell: the merged vertex sits at height
/// a_i + 1 and the subtrees hanging above it (entry ranges, split at entries
/// < a_i + 2) come in a left group of k and a right group of N - k.
struct QuotientVertex {
    std::size_t position = 0;  // 0-based entry index
    int height = 0;            // a_i + 1
    std::size_t lo = 0;        // first entry index of the merged region
    std::size_t hi = 0;        // one past the last entry index of the region
    std::vector<Block> subtrees;
    std::size_t k = 0;
    std::size_t N() const { return subtrees.size(); }
};

inline QuotientVertex quotient_vertex(const std::vector<int>& a, std::size_t i) {
    QuotientVertex q;
    q.position = i;
    const int h = a[i];
    q.height = h + 1;
    std::size_t l1 = i;
    while (l1 > 0 && a[l1 - 1] >= h + 1) --l1;
    std::size_t r2 = i + 1;
    while (r2 < a.size() && a[r2] >= h + 1) ++r2;
    q.lo = l1;
    q.hi = r2;
    auto split = [&](std::size_t lo, std::size_t hi) {
        std::size_t s = lo;
        for (std::size_t p = lo; p < hi; ++p)
            if (a[p] < h + 2) {
                q.subtrees.push_back({s, p});
                s = p + 1;
            }
        q.subtrees.push_back({s, hi});
    };
    split(l1, i);
    q.k = q.subtrees.size();
    split(i + 1, r2);
    return q;
}

/// All (k, N-k) shuffles as arrangements: entry t is the index of the subtree
/// placed t-th. Left subtrees are 0..k-1, right ones k..N-1. The identity comes
/// first; order is lexicographic in the left positions.
inline std::vector<std::vector<int>> shuffles(std::size_t k, std::size_t N) {
    std::vector<std::vector<int>> out;
    std::vector<bool> pick(N, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<int> seq(N);
        int li = 0, ri = static_cast<int>(k);
        for (std::size_t t = 0; t < N; ++t) seq[t] = pick[t] ? li++ : ri++;
        out.push_back(std::move(seq));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// Sh(a, i), i 1-based.
struct ShuffleSet {
    QuotientVertex vertex;
    std::vector<std::vector<int>> arrangements;
};

inline ShuffleSet shuffle_set(const Composition& a, std::size_t i) {
    if (i < 1 || i > a.size()) throw std::out_of_range("shuffle_set: index out of range");
    ShuffleSet s;
    s.vertex = quotient_vertex(a.entries(), i - 1);
    s.arrangements = shuffles(s.vertex.k, s.vertex.N());
    return s;
}

namespace detail {

// Parity contributed by swapping adjacent subtrees A|B above a vertex at
// height `base`: vertex counts multiplied level by level, continued to an even
// ambient height (the tail collapses to top*L_A*L_B).
inline int swap_parity(const std::vector<int>& a, const Block& A, const Block& B, int base) {
    int top = base;
    for (std::size_t p = A.begin; p < A.end; ++p) top = std::max(top, a[p]);
    for (std::size_t p = B.begin; p < B.end; ++p) top = std::max(top, a[p]);
    auto vcount = [&](const Block& T, int h) {
        int c = 1;
        for (std::size_t p = T.begin; p < T.end; ++p)
            if (a[p] < h) ++c;
        return c;
    };
    int par = 0;
    for (int h = base + 1; h <= top; ++h) par ^= (vcount(A, h) * vcount(B, h)) & 1;
    const int la = static_cast<int>(A.length()) + 1, lb = static_cast<int>(B.length()) + 1;
    par ^= (top * la * lb) & 1;
    return par;
}

/// κ of an arrangement, accumulated over the adjacent swaps of a bubble sort
/// from the identity arrangement.
inline int kappa(const std::vector<int>& a, const QuotientVertex& q, const std::vector<int>& seq) {
    const std::size_t N = seq.size();
    std::vector<int> where(N);
    for (std::size_t t = 0; t < N; ++t) where[static_cast<std::size_t>(seq[t])] = static_cast<int>(t);
    std::vector<int> arr(N);
    std::iota(arr.begin(), arr.end(), 0);
    int par = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t j = 0; j + 1 < N; ++j) {
            if (where[static_cast<std::size_t>(arr[j])] > where[static_cast<std::size_t>(arr[j + 1])]) {
                par ^= swap_parity(a, q.subtrees[static_cast<std::size_t>(arr[j])], q.subtrees[static_cast<std::size_t>(arr[j + 1])], q.height);
                std::swap(arr[j], arr[j + 1]);
                changed = true;
            }
        }
    }
    return par;
}

inline int alpha(const std::vector<int>& a, std::size_t i) {
    int s = a[i] + 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (j < i) s += std::min(a[j], a[i] + 1);
        if (j > i) s += std::min(a[j], a[i]);
    }
    return s;
}

// Walks every face: emit(vertex, new entries, leaf order in the region, sign).
template <class Emit>
void for_each_face(const std::vector<int>& a, Emit emit) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const QuotientVertex q = quotient_vertex(a, i);
        const int face = static_cast<int>(i) + alpha(a, i);
        for (const auto& seq : shuffles(q.k, q.N())) {
            const int par = (face + kappa(a, q, seq)) & 1;
            std::vector<int> e(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(q.lo));
            std::vector<int> leaves;  // leaf positions in new order, inside the region
            for (std::size_t t = 0; t < seq.size(); ++t) {
                const Block& b = q.subtrees[static_cast<std::size_t>(seq[t])];
                if (t) e.push_back(q.height);
                e.insert(e.end(), a.begin() + static_cast<std::ptrdiff_t>(b.begin), a.begin() + static_cast<std::ptrdiff_t>(b.end));
                for (std::size_t p = b.begin; p <= b.end; ++p) leaves.push_back(static_cast<int>(p));
            }
            e.insert(e.end(), a.begin() + static_cast<std::ptrdiff_t>(q.hi), a.end());
            emit(q, e, leaves, par ? -1 : 1);
        }
    }
}

}  // namespace detail

/// Coboundary of an unlabeled cell. Terms with an entry >= m are dropped.
inline Cochain delta_unlabeled(const Composition& a, Ring ring = Ring::Z, AmbientDim m = kInfinity) {
    Cochain out(ring);
    detail::for_each_face(a.entries(), [&](const QuotientVertex&, const std::vector<int>& e, const std::vector<int>&, int sign) {
        Composition c(e);
        if (c.fits(m)) out.add(c, sign);
    });
    return out;
}

/// Coboundary of a labeled cell: the same faces with the leaf labels carried
/// along by each subtree.
inline LabeledCochain delta_labeled(const DepthOrdering& g, Ring ring = Ring::Z, AmbientDim m = kInfinity) {
    LabeledCochain out(ring);
    const auto& lab = g.labels();
    detail::for_each_face(g.shape().entries(), [&](const QuotientVertex& q, const std::vector<int>& e, const std::vector<int>& leaves, int sign) {
        if (!Composition(e).fits(m)) return;
        std::vector<int> nl(lab.begin(), lab.begin() + static_cast<std::ptrdiff_t>(q.lo));
        for (int p : leaves) nl.push_back(lab[static_cast<std::size_t>(p)]);
        nl.insert(nl.end(), lab.begin() + static_cast<std::ptrdiff_t>(q.hi) + 1, lab.end());
        out.add(DepthOrdering(std::move(nl), e), sign);
    });
    return out;
}

inline Cochain delta(const Cochain& c, AmbientDim m = kInfinity) {
    return c.apply([&](const Composition& a) { return delta_unlabeled(a, c.ring(), m); });
}

inline LabeledCochain delta(const LabeledCochain& c, AmbientDim m = kInfinity) {
    return c.apply([&](const DepthOrdering& g) { return delta_labeled(g, c.ring(), m); });
}

/// Forget labels.
inline Cochain unlabel(const LabeledCochain& c) {
    Cochain out(c.ring());
    for (const auto& [g, v] : c) out.add(g.shape(), v);
    return out;
}

}  // namespace fncalc
