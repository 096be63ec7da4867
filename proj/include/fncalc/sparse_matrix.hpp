#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "chain.hpp"
#include "f2.hpp"

namespace fncalc {

/// Row-major sparse matrix over Z or F2. No stored zeros.
class SparseMatrix {
public:
    using Row = std::map<int, Integer>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, Ring r = Ring::Z) : ring_(r), cols_(cols), rows_(rows) {}

    static SparseMatrix identity(std::size_t n, Ring r = Ring::Z) {
        SparseMatrix m(n, n, r);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i][static_cast<int>(i)] = 1;
        return m;
    }

    Ring ring() const { return ring_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Row& row(std::size_t i) const { return rows_[i]; }
    Row& row_mut(std::size_t i) { return rows_[i]; }

    Integer at(std::size_t i, std::size_t j) const {
        auto it = rows_[i].find(static_cast<int>(j));
        return it == rows_[i].end() ? Integer(0) : it->second;
    }
    void set(std::size_t i, std::size_t j, Integer v) {
        if (i >= rows() || j >= cols_) throw std::out_of_range("SparseMatrix::set");
        v = reduce(ring_, std::move(v));
        if (v == 0)
            rows_[i].erase(static_cast<int>(j));
        else
            rows_[i][static_cast<int>(j)] = std::move(v);
    }
    void add(std::size_t i, std::size_t j, const Integer& v) { set(i, j, at(i, j) + v); }

    std::size_t nnz() const {
        std::size_t c = 0;
        for (const auto& r : rows_) c += r.size();
        return c;
    }
    bool is_zero() const { return nnz() == 0; }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows(), ring_);
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [j, v] : rows_[i]) t.rows_[static_cast<std::size_t>(j)][static_cast<int>(i)] = v;
        return t;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows()) throw std::invalid_argument("SparseMatrix: dimension mismatch");
        SparseMatrix c(a.rows(), b.cols_, a.ring_);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Row acc;
            for (const auto& [k, v] : a.rows_[i])
                for (const auto& [j, w] : b.rows_[static_cast<std::size_t>(k)]) acc[j] += v * w;
            for (auto& [j, v] : acc) {
                v = reduce(a.ring_, v);
                if (v != 0) c.rows_[i].emplace(j, v);
            }
        }
        return c;
    }

    /// Matrix times column vector (given sparse).
    Row apply(const Row& x) const {
        Row out;
        for (std::size_t i = 0; i < rows(); ++i) {
            Integer s = 0;
            for (const auto& [j, v] : rows_[i]) {
                auto it = x.find(j);
                if (it != x.end()) s += v * it->second;
            }
            s = reduce(ring_, s);
            if (s != 0) out.emplace(static_cast<int>(i), s);
        }
        return out;
    }

    /// Column j as a sparse vector.
    Row column(std::size_t j) const {
        Row out;
        for (std::size_t i = 0; i < rows(); ++i) {
            auto it = rows_[i].find(static_cast<int>(j));
            if (it != rows_[i].end()) out.emplace(static_cast<int>(i), it->second);
        }
        return out;
    }

    bool operator==(const SparseMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

    /// Rank over F2 (entries reduced mod 2).
    std::size_t rank_f2() const {
        F2Echelon e(cols_, 0);
        for (const auto& r : rows_) {
            BitVector v(cols_);
            for (const auto& [j, x] : r)
                if (x % 2 != 0) v.set(static_cast<std::size_t>(j));
            e.insert(std::move(v));
        }
        return e.rank();
    }

private:
    Ring ring_ = Ring::Z;
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

}  // namespace fncalc
