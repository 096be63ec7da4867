#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>
#include <vector>

#include "differential.hpp"
#include "f2.hpp"
#include "smith.hpp"
#include "sparse_matrix.hpp"

namespace fncalc {

/// Worker count from FNCALC_THREADS (default 1).
inline unsigned thread_count() {
    if (const char* s = std::getenv("FNCALC_THREADS")) {
        int v = std::atoi(s);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

/// Cells of one degree with their positions.
class CellIndex {
public:
    CellIndex() = default;
    CellIndex(int n, int degree, AmbientDim m) : n_(n), degree_(degree), cells_(enumerate_cells(n, degree, m)) {
        for (std::size_t i = 0; i < cells_.size(); ++i) pos_.emplace(cells_[i], i);
    }
    int n() const { return n_; }
    int degree() const { return degree_; }
    std::size_t size() const { return cells_.size(); }
    const Composition& operator[](std::size_t i) const { return cells_[i]; }
    const std::vector<Composition>& cells() const { return cells_; }
    std::size_t index(const Composition& c) const {
        auto it = pos_.find(c);
        if (it == pos_.end()) throw std::invalid_argument("cell not in this degree");
        return it->second;
    }
    bool contains(const Composition& c) const { return pos_.count(c) != 0; }

private:
    int n_ = 1, degree_ = 0;
    std::vector<Composition> cells_;
    std::map<Composition, std::size_t> pos_;
};

/// Matrix of delta: degree -> degree + 1, columns indexed by source cells.
inline SparseMatrix coboundary_matrix(int n, int degree, Ring ring, AmbientDim m = kInfinity) {
    CellIndex src(n, degree, m), dst(n, degree + 1, m);
    SparseMatrix M(dst.size(), src.size(), ring);
    if (src.size() == 0 || dst.size() == 0) return M;
    const unsigned T = std::min<unsigned>(thread_count(), static_cast<unsigned>(src.size()));
    std::vector<Cochain> images(src.size());
    auto work = [&](unsigned t) {
        for (std::size_t j = t; j < src.size(); j += T) images[j] = delta_unlabeled(src[j], ring, m);
    };
    if (T <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (std::size_t j = 0; j < src.size(); ++j)
        for (const auto& [c, v] : images[j]) M.set(dst.index(c), j, v);
    return M;
}

/// H^degree of FN_n (mod 2 or integral) with representatives and a reduction
/// context for expressing cocycles in the chosen basis.
class CohomologyGroup {
public:
    CohomologyGroup(int n, int degree, Ring ring, AmbientDim m = kInfinity)
        : n_(n), degree_(degree), ring_(ring), m_(m), cells_(n, degree, m) {
        if (ring == Ring::F2)
            build_f2();
        else
            build_z();
    }

    int n() const { return n_; }
    int degree() const { return degree_; }
    Ring ring() const { return ring_; }
    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    std::size_t dimension() const { return ring_ == Ring::F2 ? reps_.size() : free_rank_ + torsion_.size(); }
    /// Torsion representatives first (integral case), then free ones.
    const std::vector<Cochain>& representatives() const { return reps_; }
    const CellIndex& cells() const { return cells_; }

    /// Coordinates of a cocycle in the representative basis. Torsion
    /// coordinates are reduced modulo their order.
    std::vector<Integer> reduce_cocycle(const Cochain& c) const {
        for (const auto& [k, v] : c)
            if (k.n() != n_ || k.degree() != degree_ || !k.fits(m_)) throw std::invalid_argument("reduce_cocycle: component or degree mismatch");
        if (!delta(c.in_ring(ring_), m_).is_zero()) throw std::invalid_argument("reduce_cocycle: not a cocycle");
        return ring_ == Ring::F2 ? reduce_f2(c) : reduce_z(c);
    }

    /// True when c is a coboundary.
    bool is_coboundary(const Cochain& c) const {
        auto v = reduce_cocycle(c);
        return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    }

private:
    BitVector to_bits(const Cochain& c) const {
        BitVector v(cells_.size());
        for (const auto& [k, x] : c)
            if (x % 2 != 0) v.set(cells_.index(k));
        return v;
    }
    Cochain from_bits(const BitVector& v) const {
        Cochain out(Ring::F2);
        for (auto i : v.ones()) out.add(cells_[i], 1);
        return out;
    }

    void build_f2() {
        const std::size_t N = cells_.size();
        echelon_ = std::make_unique<F2Echelon>(N, N);
        if (degree_ > 0) {
            SparseMatrix prev = coboundary_matrix(n_, degree_ - 1, Ring::F2, m_);
            for (std::size_t j = 0; j < prev.cols(); ++j) {
                BitVector v(N);
                for (const auto& [i, x] : prev.column(j)) v.set(static_cast<std::size_t>(i));
                echelon_->insert(std::move(v));
            }
        }
        image_rank_ = echelon_->rank();
        // kernel of delta_degree by column elimination with tags
        SparseMatrix next = coboundary_matrix(n_, degree_, Ring::F2, m_);
        F2Echelon cols(next.rows(), N);
        SparseMatrix nt = next.transpose();
        std::vector<BitVector> kernel;
        for (std::size_t j = 0; j < N; ++j) {
            BitVector v(next.rows());
            for (const auto& [i, x] : nt.row(j)) v.set(static_cast<std::size_t>(i));
            BitVector tag(N);
            tag.set(j);
            if (!cols.insert(std::move(v), tag)) kernel.push_back(tag);
        }
        for (auto& z : kernel) {
            BitVector tag(N);
            echelon_->reduce(z, tag);
            if (z.is_zero()) continue;
            BitVector rtag(N);
            rtag.set(reps_.size());
            reps_.push_back(from_bits(z));
            echelon_->insert(z, rtag);
        }
        free_rank_ = reps_.size();
    }

    std::vector<Integer> reduce_f2(const Cochain& c) const {
        BitVector v = to_bits(c), tag(cells_.size());
        echelon_->reduce(v, tag);
        if (!v.is_zero()) throw std::logic_error("reduce_cocycle: residual after reduction");
        std::vector<Integer> out(reps_.size(), 0);
        for (std::size_t r = 0; r < reps_.size(); ++r) out[r] = tag.get(r) ? 1 : 0;
        return out;
    }

    static Cochain column_cochain(const SparseMatrix& m, std::size_t j, const CellIndex& idx) {
        Cochain out(Ring::Z);
        for (const auto& [i, x] : m.column(j)) out.add(idx[static_cast<std::size_t>(i)], x);
        return out;
    }

    void build_z() {
        const std::size_t N = cells_.size();
        SparseMatrix prev = degree_ > 0 ? coboundary_matrix(n_, degree_ - 1, Ring::Z, m_) : SparseMatrix(N, 0);
        snf_prev_ = smith_normal_form(prev);
        const std::size_t r = snf_prev_.rank();
        // basis u_i = columns of Uinv; image = span(d_i u_i)
        SparseMatrix next = coboundary_matrix(n_, degree_, Ring::Z, m_);
        SparseMatrix tail(N, N - r);
        for (std::size_t i = 0; i < N; ++i)
            for (const auto& [j, x] : snf_prev_.Uinv.row(i))
                if (static_cast<std::size_t>(j) >= r) tail.set(i, static_cast<std::size_t>(j) - r, x);
        SparseMatrix w = next * tail;
        snf_tail_ = smith_normal_form(w);
        const std::size_t s = snf_tail_.rank();
        for (std::size_t t = 0; t < r; ++t)
            if (snf_prev_.diag[t] > 1) {
                torsion_.push_back(snf_prev_.diag[t]);
                torsion_slot_.push_back(t);
                reps_.push_back(column_cochain(snf_prev_.Uinv, t, cells_));
            }
        free_basis_ = tail * snf_tail_.V;
        for (std::size_t j = s; j < N - r; ++j) reps_.push_back(column_cochain(free_basis_, j, cells_));
        free_rank_ = N - r - s;
        tail_rank_ = s;
        image_rank_ = r;
    }

    std::vector<Integer> reduce_z(const Cochain& c) const {
        SparseMatrix::Row x;
        for (const auto& [k, v] : c) x.emplace(static_cast<int>(cells_.index(k)), v);
        SparseMatrix::Row y = snf_prev_.U.apply(x);
        std::vector<Integer> out;
        for (std::size_t q = 0; q < torsion_slot_.size(); ++q) {
            Integer v = 0;
            auto it = y.find(static_cast<int>(torsion_slot_[q]));
            if (it != y.end()) v = it->second;
            Integer d = torsion_[q];
            v = v % d;
            if (v < 0) v += d;
            out.push_back(v);
        }
        SparseMatrix::Row yt;
        for (const auto& [i, v] : y)
            if (static_cast<std::size_t>(i) >= image_rank_) yt.emplace(i - static_cast<int>(image_rank_), v);
        SparseMatrix::Row z = snf_tail_.Vinv.apply(yt);
        for (std::size_t j = tail_rank_; j < cells_.size() - image_rank_; ++j) {
            auto it = z.find(static_cast<int>(j));
            out.push_back(it == z.end() ? Integer(0) : it->second);
        }
        return out;
    }

    int n_, degree_;
    Ring ring_;
    AmbientDim m_;
    CellIndex cells_;
    std::size_t free_rank_ = 0, image_rank_ = 0, tail_rank_ = 0;
    std::vector<Integer> torsion_;
    std::vector<std::size_t> torsion_slot_;
    std::vector<Cochain> reps_;
    std::shared_ptr<F2Echelon> echelon_;
    SmithForm snf_prev_, snf_tail_;
    SparseMatrix free_basis_;
};

/// Span of the mod-2 coboundaries in one degree, for membership tests.
class CoboundarySpace {
public:
    CoboundarySpace(int n, int degree, AmbientDim m = kInfinity) : cells_(n, degree, m), echelon_(cells_.size(), 0) {
        if (degree == 0) return;
        SparseMatrix prev = coboundary_matrix(n, degree - 1, Ring::F2, m);
        SparseMatrix pt = prev.transpose();
        for (std::size_t j = 0; j < pt.rows(); ++j) {
            BitVector v(cells_.size());
            for (const auto& [i, x] : pt.row(j)) v.set(static_cast<std::size_t>(i));
            echelon_.insert(std::move(v));
        }
    }
    std::size_t rank() const { return echelon_.rank(); }
    bool contains(const Cochain& c) const {
        BitVector v(cells_.size()), tag(0);
        for (const auto& [k, x] : c)
            if (x % 2 != 0) {
                if (!cells_.contains(k)) return false;
                v.set(cells_.index(k));
            }
        echelon_.reduce(v, tag);
        return v.is_zero();
    }

private:
    CellIndex cells_;
    F2Echelon echelon_;
};

inline CohomologyGroup cohomology(int n, int degree, Ring ring, AmbientDim m = kInfinity) { return CohomologyGroup(n, degree, ring, m); }

}  // namespace fncalc
