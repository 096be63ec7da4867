#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "sparse_matrix.hpp"

namespace fncalc {

/// U * M * V = D with D[t][t] = diag[t] for t < diag.size() and zero elsewhere.
/// Uinv and Vinv are the exact integral inverses.
struct SmithForm {
    std::vector<Integer> diag;
    SparseMatrix U, V, Uinv, Vinv;

    std::vector<Integer> invariants() const { return diag; }
    std::size_t rank() const { return diag.size(); }
};

namespace detail {

class SmithWorker {
public:
    explicit SmithWorker(const SparseMatrix& m)
        : R_(m.rows()), C_(m.cols()), M_(m.rows()), colrows_(m.cols()),
          U_(SparseMatrix::identity(m.rows())), UinvT_(SparseMatrix::identity(m.rows())),
          VT_(SparseMatrix::identity(m.cols())), Vinv_(SparseMatrix::identity(m.cols())),
          row_active_(m.rows(), true), col_active_(m.cols(), true) {
        for (std::size_t i = 0; i < R_; ++i)
            for (const auto& [j, v] : m.row(i)) {
                M_[i][j] = v;
                colrows_[static_cast<std::size_t>(j)].insert(static_cast<int>(i));
            }
    }

    SmithForm run() {
        std::size_t r, c;
        while (choose_pivot(r, c)) eliminate(r, c);
        fix_divisibility();
        return assemble();
    }

private:
    // rows i,j <- (a*row_i + b*row_j, c*row_i + d*row_j), ad - bc = +-1
    void row_combine(std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
        combine_maps(M_[i], M_[j], a, b, c, d, static_cast<int>(i), static_cast<int>(j), true);
        combine_maps(U_.row_mut(i), U_.row_mut(j), a, b, c, d, 0, 0, false);
        const Integer det = a * d - b * c;
        // Uinv <- Uinv * T^{-1}; on the transpose rows: (d, -c ; -b, a)/det
        combine_maps(UinvT_.row_mut(i), UinvT_.row_mut(j), d * det, -c * det, -b * det, a * det, 0, 0, false);
    }

    // cols i,j <- (a*col_i + b*col_j, c*col_i + d*col_j)
    void col_combine(std::size_t i, std::size_t j, const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
        std::set<int> touched = colrows_[i];
        touched.insert(colrows_[j].begin(), colrows_[j].end());
        for (int r : touched) {
            auto& row = M_[static_cast<std::size_t>(r)];
            Integer x = get(row, static_cast<int>(i)), y = get(row, static_cast<int>(j));
            put(row, colrows_[i], r, static_cast<int>(i), a * x + b * y);
            put(row, colrows_[j], r, static_cast<int>(j), c * x + d * y);
        }
        combine_maps(VT_.row_mut(i), VT_.row_mut(j), a, b, c, d, 0, 0, false);
        const Integer det = a * d - b * c;
        combine_maps(Vinv_.row_mut(i), Vinv_.row_mut(j), d * det, -c * det, -b * det, a * det, 0, 0, false);
    }

    static Integer get(const SparseMatrix::Row& row, int j) {
        auto it = row.find(j);
        return it == row.end() ? Integer(0) : it->second;
    }
    static void put(SparseMatrix::Row& row, std::set<int>& colset, int r, int j, Integer v) {
        if (v == 0) {
            row.erase(j);
            colset.erase(r);
        } else {
            row[j] = std::move(v);
            colset.insert(r);
        }
    }

    void combine_maps(SparseMatrix::Row& x, SparseMatrix::Row& y, const Integer& a, const Integer& b, const Integer& c, const Integer& d, int ix,
                      int iy, bool track) {
        std::set<int> keys;
        for (const auto& kv : x) keys.insert(kv.first);
        for (const auto& kv : y) keys.insert(kv.first);
        SparseMatrix::Row nx, ny;
        for (int k : keys) {
            Integer p = get(x, k), q = get(y, k);
            Integer u = a * p + b * q, w = c * p + d * q;
            if (track) {
                auto& cs = colrows_[static_cast<std::size_t>(k)];
                if (u != 0) cs.insert(ix); else cs.erase(ix);
                if (w != 0) cs.insert(iy); else cs.erase(iy);
            }
            if (u != 0) nx.emplace(k, std::move(u));
            if (w != 0) ny.emplace(k, std::move(w));
        }
        x.swap(nx);
        y.swap(ny);
    }

    // smallest magnitude, then Markowitz cost, then position
    bool choose_pivot(std::size_t& pr, std::size_t& pc) {
        bool found = false;
        std::tuple<Integer, std::size_t, std::size_t, std::size_t> best;
        for (std::size_t i = 0; i < R_; ++i) {
            if (!row_active_[i]) continue;
            for (const auto& [j, v] : M_[i]) {
                if (!col_active_[static_cast<std::size_t>(j)]) continue;
                Integer mag = abs(v);
                std::size_t cost = (M_[i].size() - 1) * (colrows_[static_cast<std::size_t>(j)].size() - 1);
                auto key = std::make_tuple(mag, cost, i, static_cast<std::size_t>(j));
                if (!found || key < best) {
                    best = key;
                    found = true;
                }
            }
        }
        if (found) {
            pr = std::get<2>(best);
            pc = std::get<3>(best);
        }
        return found;
    }

    void eliminate(std::size_t r, std::size_t c) {
        while (true) {
            bool dirty = false;
            const Integer p = M_[r][static_cast<int>(c)];
            // clear column c below/above
            std::vector<int> others(colrows_[c].begin(), colrows_[c].end());
            for (int i : others) {
                if (static_cast<std::size_t>(i) == r) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), M_[static_cast<std::size_t>(i)][static_cast<int>(c)].get_mpz_t(), p.get_mpz_t());
                if (q != 0) row_combine(static_cast<std::size_t>(i), r, 1, -q, 0, 1);
                if (get(M_[static_cast<std::size_t>(i)], static_cast<int>(c)) != 0) dirty = true;
            }
            std::vector<int> rowcols;
            for (const auto& kv : M_[r]) rowcols.push_back(kv.first);
            for (int j : rowcols) {
                if (static_cast<std::size_t>(j) == c) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), get(M_[r], j).get_mpz_t(), p.get_mpz_t());
                if (q != 0) col_combine(static_cast<std::size_t>(j), c, 1, -q, 0, 1);
                if (get(M_[r], j) != 0) dirty = true;
            }
            if (!dirty) break;
            // a remainder is smaller than p: move the pivot there
            Integer best = abs(p);
            std::size_t nr = r, nc = c;
            for (int i : colrows_[c])
                if (abs(M_[static_cast<std::size_t>(i)][static_cast<int>(c)]) < best) {
                    best = abs(M_[static_cast<std::size_t>(i)][static_cast<int>(c)]);
                    nr = static_cast<std::size_t>(i);
                    nc = c;
                }
            for (const auto& [j, v] : M_[r])
                if (abs(v) < best) {
                    best = abs(v);
                    nr = r;
                    nc = static_cast<std::size_t>(j);
                }
            r = nr;
            c = nc;
        }
        row_active_[r] = false;
        col_active_[c] = false;
        pivots_.emplace_back(r, c);
    }

    Integer& diag_at(std::size_t t) { return M_[pivots_[t].first][static_cast<int>(pivots_[t].second)]; }

    void fix_divisibility() {
        for (std::size_t t = 0; t < pivots_.size(); ++t)
            if (diag_at(t) < 0) negate_row(pivots_[t].first);
        for (std::size_t s = 0; s < pivots_.size(); ++s)
            for (std::size_t t = s + 1; t < pivots_.size(); ++t) {
                const Integer a = diag_at(s), b = diag_at(t);
                if (b % a == 0) continue;
                auto [ri, ci] = pivots_[s];
                auto [rj, cj] = pivots_[t];
                row_combine(ri, rj, 1, 1, 0, 1);
                Integer g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                col_combine(ci, cj, x, y, -b / g, a / g);
                const Integer bt = get(M_[rj], static_cast<int>(ci));
                if (bt != 0) row_combine(rj, ri, 1, -(bt / g), 0, 1);
                if (diag_at(t) < 0) negate_row(rj);
            }
    }

    void negate_row(std::size_t i) {
        for (auto& kv : M_[i]) kv.second = -kv.second;
        for (auto& kv : U_.row_mut(i)) kv.second = -kv.second;
        for (auto& kv : UinvT_.row_mut(i)) kv.second = -kv.second;
    }

    SmithForm assemble() {
        std::vector<std::size_t> rperm, cperm;
        std::vector<bool> rseen(R_, false), cseen(C_, false);
        for (auto [r, c] : pivots_) {
            rperm.push_back(r);
            cperm.push_back(c);
            rseen[r] = true;
            cseen[c] = true;
        }
        for (std::size_t i = 0; i < R_; ++i)
            if (!rseen[i]) rperm.push_back(i);
        for (std::size_t j = 0; j < C_; ++j)
            if (!cseen[j]) cperm.push_back(j);

        SmithForm f;
        for (std::size_t t = 0; t < pivots_.size(); ++t) f.diag.push_back(diag_at(t));
        auto permute_rows = [](const SparseMatrix& m, const std::vector<std::size_t>& perm) {
            SparseMatrix out(m.rows(), m.cols());
            for (std::size_t i = 0; i < perm.size(); ++i) out.row_mut(i) = m.row(perm[i]);
            return out;
        };
        f.U = permute_rows(U_, rperm);
        f.Uinv = permute_rows(UinvT_, rperm).transpose();
        f.V = permute_rows(VT_, cperm).transpose();
        f.Vinv = permute_rows(Vinv_, cperm);
        return f;
    }

    std::size_t R_, C_;
    std::vector<SparseMatrix::Row> M_;
    std::vector<std::set<int>> colrows_;
    SparseMatrix U_, UinvT_, VT_, Vinv_;
    std::vector<bool> row_active_, col_active_;
    std::vector<std::pair<std::size_t, std::size_t>> pivots_;
};

}  // namespace detail

/// Smith normal form over Z with unimodular certificates.
inline SmithForm smith_normal_form(const SparseMatrix& m) { return detail::SmithWorker(m).run(); }

/// Re-multiply and compare: U M V = D, U Uinv = I, V Vinv = I.
inline bool certify(const SparseMatrix& m, const SmithForm& f) {
    SparseMatrix d(m.rows(), m.cols());
    for (std::size_t t = 0; t < f.diag.size(); ++t) d.set(t, t, f.diag[t]);
    if (!(f.U * m * f.V == d)) return false;
    if (!(f.U * f.Uinv == SparseMatrix::identity(m.rows()))) return false;
    if (!(f.V * f.Vinv == SparseMatrix::identity(m.cols()))) return false;
    for (std::size_t t = 0; t + 1 < f.diag.size(); ++t)
        if (f.diag[t] <= 0 || f.diag[t + 1] % f.diag[t] != 0) return false;
    return f.diag.empty() || f.diag.back() > 0;
}

}  // namespace fncalc
