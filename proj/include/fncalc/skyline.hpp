#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "hopf.hpp"
#include "symm.hpp"

namespace fncalc {

/// Multiplicities d of the factors gamma_{l, .} stacked in one column, keyed by l.
using Profile = std::map<int, int>;

/// A column: the cup monomial prod gamma_{l, points/2^l}^{d_l}.
struct GatheredBlock {
    int points = 0;
    Profile profile;

    GatheredBlock() = default;
    GatheredBlock(int m, Profile p) : points(m), profile(std::move(p)) { validate(); }

    void validate() const {
        if (points <= 0) throw std::invalid_argument("gathered block needs positive points");
        if (profile.empty()) throw std::invalid_argument("gathered block needs a non-empty profile");
        for (const auto& [l, d] : profile) {
            if (l < 1 || d < 1) throw std::invalid_argument("gathered block: profile entries must be positive");
            if (l > 30 || points % (1 << l) != 0) throw std::invalid_argument("gathered block: 2^l must divide the number of points");
        }
    }
    int lmax() const { return profile.rbegin()->first; }
    /// Total multiplicity; also the largest entry of the cochain representative.
    int height() const {
        int h = 0;
        for (const auto& kv : profile) h += kv.second;
        return h;
    }
    int degree() const {
        int s = 0;
        for (const auto& [l, d] : profile) s += d * (points - points / (1 << l));
        return s;
    }
    /// Fox-Neuwirth entries a_1..a_{m-1} of the representative.
    std::vector<int> entries() const {
        std::vector<int> e(static_cast<std::size_t>(points - 1), 0);
        for (int j = 1; j < points; ++j)
            for (const auto& [l, d] : profile)
                if (j % (1 << l) != 0) e[static_cast<std::size_t>(j - 1)] += d;
        return e;
    }

    auto operator<=>(const GatheredBlock& o) const {
        if (auto c = points <=> o.points; c != 0) return c;
        return profile <=> o.profile;
    }
    bool operator==(const GatheredBlock&) const = default;
};

inline constexpr int kStableUnit = -1;

/// Transfer product of columns with pairwise distinct profiles and a unit
/// column 1_unit. Columns are kept in descending canonical order. A unit of
/// kStableUnit marks a stable class (unit column of unbounded width).
class SkylineMonomial {
public:
    SkylineMonomial() = default;

    /// Assumes normalized input (distinct profiles); use normalize() otherwise.
    SkylineMonomial(std::vector<GatheredBlock> blocks, int unit) : blocks_(std::move(blocks)), unit_(unit) {
        std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            for (std::size_t j = i + 1; j < blocks_.size(); ++j)
                if (blocks_[i].profile == blocks_[j].profile) throw std::invalid_argument("skyline monomial: repeated profile");
        if (unit_ < 0 && unit_ != kStableUnit) throw std::invalid_argument("skyline monomial: negative unit width");
    }

    static SkylineMonomial unit(int n) { return SkylineMonomial({}, n); }
    static SkylineMonomial column(GatheredBlock b) { return SkylineMonomial({std::move(b)}, 0); }

    const std::vector<GatheredBlock>& blocks() const { return blocks_; }
    int unit_width() const { return unit_; }
    bool stable() const { return unit_ == kStableUnit; }
    /// Total points in columns.
    int width() const {
        int w = 0;
        for (const auto& b : blocks_) w += b.points;
        return w;
    }
    int component() const {
        if (stable()) throw std::logic_error("stable monomial has no finite component");
        return width() + unit_;
    }
    int degree() const {
        int s = 0;
        for (const auto& b : blocks_) s += b.degree();
        return s;
    }
    bool is_pure_unit() const { return blocks_.empty(); }
    bool is_single_column() const { return blocks_.size() == 1 && unit_ == 0; }
    std::size_t factor_count() const { return blocks_.size() + (unit_ > 0 ? 1 : 0); }

    SkylineMonomial with_unit(int u) const {
        SkylineMonomial m = *this;
        m.unit_ = u;
        return m;
    }

    auto operator<=>(const SkylineMonomial& o) const {
        if (auto c = blocks_ <=> o.blocks_; c != 0) return c;
        return unit_ <=> o.unit_;
    }
    bool operator==(const SkylineMonomial&) const = default;

private:
    std::vector<GatheredBlock> blocks_;
    int unit_ = 0;
};

using SkylineClass = Chain<SkylineMonomial>;
using SkylinePair = std::pair<SkylineMonomial, SkylineMonomial>;
using SkylineTensor = Chain<SkylinePair>;

inline bool binomial_odd(long long n, long long k) { return k >= 0 && k <= n && (k & (n - k)) == 0; }

/// Merge columns with equal profiles (coefficient C(r1+r2, r1) mod 2, zero
/// exactly when the point counts share a binary digit) and units likewise.
inline SkylineClass normalize(std::vector<GatheredBlock> blocks, int unit) {
    std::map<Profile, int> merged;
    for (auto& b : blocks) {
        b.validate();
        auto [it, fresh] = merged.try_emplace(b.profile, 0);
        if (!fresh && (it->second & b.points) != 0) return SkylineClass(Ring::F2);
        it->second += b.points;
    }
    std::vector<GatheredBlock> out;
    for (auto& [p, m] : merged) out.emplace_back(m, p);
    return SkylineClass(Ring::F2, SkylineMonomial(std::move(out), unit));
}

/// Monomial gamma_{l,n}.
inline SkylineMonomial gamma(int l, int n) {
    if (n == 0) return SkylineMonomial::unit(0);
    return SkylineMonomial::column(GatheredBlock(n << l, Profile{{l, 1}}));
}

inline int class_component(const SkylineClass& x) {
    if (x.is_zero()) return -1;
    return x.begin()->first.component();
}

// --- transfer -------------------------------------------------------------

inline SkylineClass transfer_skyline(const SkylineMonomial& a, const SkylineMonomial& b) {
    if (a.stable() || b.stable()) throw std::invalid_argument("transfer of stable classes is undefined");
    if (!binomial_odd(a.unit_width() + b.unit_width(), a.unit_width())) return SkylineClass(Ring::F2);
    std::vector<GatheredBlock> blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return normalize(std::move(blocks), a.unit_width() + b.unit_width());
}

inline SkylineClass transfer_skyline(const SkylineClass& x, const SkylineClass& y) {
    SkylineClass out(Ring::F2);
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y) out += transfer_skyline(a, b);
    return out;
}

// --- coproduct ------------------------------------------------------------

/// Splits of each column at multiples of 2^lmax, units split freely; both
/// tensor factors renormalized.
inline SkylineTensor coproduct_skyline(const SkylineMonomial& M) {
    if (M.stable()) throw std::invalid_argument("coproduct of a stable class is undefined");
    // per factor, the list of (left piece, right piece); points 0 means absent
    std::vector<std::vector<std::pair<int, int>>> splits;
    for (const auto& b : M.blocks()) {
        std::vector<std::pair<int, int>> s;
        const int step = 1 << b.lmax();
        for (int m1 = 0; m1 <= b.points; m1 += step) s.emplace_back(m1, b.points - m1);
        splits.push_back(std::move(s));
    }
    SkylineTensor out(Ring::F2);
    std::vector<std::size_t> pick(splits.size(), 0);
    while (true) {
        std::vector<GatheredBlock> L, R;
        for (std::size_t f = 0; f < splits.size(); ++f) {
            auto [m1, m2] = splits[f][pick[f]];
            if (m1) L.emplace_back(m1, M.blocks()[f].profile);
            if (m2) R.emplace_back(m2, M.blocks()[f].profile);
        }
        for (int u1 = 0; u1 <= M.unit_width(); ++u1) {
            SkylineClass l = normalize(L, u1), r = normalize(R, M.unit_width() - u1);
            for (const auto& [a, x] : l)
                for (const auto& [b, y] : r) out.add({a, b}, 1);
        }
        std::size_t f = 0;
        for (; f < splits.size(); ++f) {
            if (++pick[f] < splits[f].size()) break;
            pick[f] = 0;
        }
        if (f == splits.size()) break;
    }
    return out;
}

inline SkylineTensor coproduct_skyline(const SkylineClass& x) {
    SkylineTensor out(Ring::F2);
    for (const auto& [m, v] : x) out += coproduct_skyline(m);
    return out;
}

// --- cup product ----------------------------------------------------------

namespace detail {

struct CupCache {
    std::mutex mu;
    std::map<std::pair<SkylineMonomial, SkylineMonomial>, SkylineClass> cup;
    std::map<SkylineMonomial, SkylineTensor> coproduct;
};
inline CupCache& cup_cache() {
    static CupCache c;
    return c;
}

inline SkylineTensor cached_coproduct(const SkylineMonomial& m) {
    auto& c = cup_cache();
    {
        std::lock_guard<std::mutex> g(c.mu);
        auto it = c.coproduct.find(m);
        if (it != c.coproduct.end()) return it->second;
    }
    SkylineTensor t = coproduct_skyline(m);
    std::lock_guard<std::mutex> g(c.mu);
    c.coproduct.emplace(m, t);
    return t;
}

inline SkylineClass stack(const GatheredBlock& a, const GatheredBlock& b) {
    Profile p = a.profile;
    for (const auto& [l, d] : b.profile) p[l] += d;
    return SkylineClass(Ring::F2, SkylineMonomial::column(GatheredBlock(a.points, std::move(p))));
}

}  // namespace detail

inline SkylineClass cup_skyline(const SkylineMonomial& M, const SkylineMonomial& N) {
    if (M.stable() || N.stable()) throw std::invalid_argument("cup_skyline: use stable_product for stable classes");
    if (M.component() != N.component()) return SkylineClass(Ring::F2);
    if (N.is_pure_unit()) return SkylineClass(Ring::F2, M);
    if (M.is_pure_unit()) return SkylineClass(Ring::F2, N);
    if (M.is_single_column() && N.is_single_column()) return detail::stack(M.blocks()[0], N.blocks()[0]);
    if (N.is_single_column()) return cup_skyline(N, M);

    auto& cache = detail::cup_cache();
    const auto key = std::make_pair(M, N);
    {
        std::lock_guard<std::mutex> g(cache.mu);
        auto it = cache.cup.find(key);
        if (it != cache.cup.end()) return it->second;
    }
    // N = c1 o rest
    const GatheredBlock& c1 = N.blocks()[0];
    std::vector<GatheredBlock> rest_blocks(N.blocks().begin() + 1, N.blocks().end());
    const SkylineMonomial first = SkylineMonomial::column(c1);
    const SkylineMonomial rest(std::move(rest_blocks), N.unit_width());
    SkylineClass out(Ring::F2);
    for (const auto& [pair, v] : detail::cached_coproduct(M)) {
        if (pair.first.component() != c1.points) continue;
        SkylineClass l = cup_skyline(pair.first, first);
        if (l.is_zero()) continue;
        SkylineClass r = cup_skyline(pair.second, rest);
        out += transfer_skyline(l, r);
    }
    std::lock_guard<std::mutex> g(cache.mu);
    cache.cup.emplace(key, out);
    return out;
}

inline SkylineClass cup_skyline(const SkylineClass& x, const SkylineClass& y) {
    SkylineClass out(Ring::F2);
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y) out += cup_skyline(a, b);
    return out;
}

/// x^e under cup_skyline (e >= 1).
inline SkylineClass cup_power(const SkylineClass& x, int e) {
    SkylineClass out = x;
    for (int i = 1; i < e; ++i) out = cup_skyline(out, x);
    return out;
}

// --- cochain representatives --------------------------------------------

/// Symm of the concatenated column representatives.
inline Cochain to_cochain(const SkylineMonomial& M) {
    if (M.stable()) throw std::invalid_argument("to_cochain: stable monomial");
    if (M.component() == 0) return Cochain(Ring::F2, Composition::empty_configuration());
    std::vector<std::vector<int>> parts;
    for (const auto& b : M.blocks()) parts.push_back(b.entries());
    if (M.unit_width() > 0) parts.emplace_back(static_cast<std::size_t>(M.unit_width() - 1), 0);
    return symm(Composition(join_blocks(parts, 0)));
}

inline Cochain to_cochain(const SkylineClass& x) {
    Cochain out(Ring::F2);
    for (const auto& [m, v] : x) out += to_cochain(m);
    return out;
}

// --- basis enumeration ------------------------------------------------------

namespace detail {

// all non-empty profiles with column degree <= k at the given points
inline void profiles_for(int points, int k, std::vector<Profile>& out) {
    std::vector<int> ls;
    for (int l = 1; (1 << l) <= points && l <= 30; ++l)
        if (points % (1 << l) == 0) ls.push_back(l);
    Profile cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int budget) {
        if (idx == ls.size()) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        rec(idx + 1, budget);
        const int l = ls[idx];
        const int per = points - points / (1 << l);
        for (int d = 1; d * per <= budget; ++d) {
            cur[l] = d;
            rec(idx + 1, budget - d * per);
            cur.erase(l);
        }
    };
    rec(0, k);
}

}  // namespace detail

/// Every monomial of the given component and degree; a finite height bound d
/// drops monomials with some column of height >= d.
inline std::vector<SkylineMonomial> enumerate_skyline_basis(int n, int k, std::optional<int> height_bound = std::nullopt) {
    std::vector<GatheredBlock> cand;
    for (int m = 2; m <= n; m += 2) {
        std::vector<Profile> ps;
        detail::profiles_for(m, k, ps);
        for (auto& p : ps) {
            GatheredBlock b(m, std::move(p));
            if (height_bound && b.height() >= *height_bound) continue;
            cand.push_back(std::move(b));
        }
    }
    std::sort(cand.begin(), cand.end(), std::greater<>());
    std::vector<SkylineMonomial> out;
    std::vector<GatheredBlock> chosen;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int pts, int deg) {
        if (deg == k) out.emplace_back(chosen, n - pts);
        for (std::size_t i = idx; i < cand.size(); ++i) {
            const auto& b = cand[i];
            if (pts + b.points > n || deg + b.degree() > k) continue;
            bool clash = false;
            for (const auto& c : chosen)
                if (c.profile == b.profile) clash = true;
            if (clash || b.degree() == 0) continue;
            chosen.push_back(b);
            rec(i + 1, pts + b.points, deg + b.degree());
            chosen.pop_back();
        }
    };
    if (n >= 0 && k >= 0) rec(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// --- Nakaoka generators ---------------------------------------------------

inline bool is_odd_column(const GatheredBlock& b) {
    for (const auto& kv : b.profile)
        if (kv.second % 2) return true;
    return false;
}

/// The odd column R and p with R^{2^p} = B.
inline std::pair<GatheredBlock, int> two_root(const GatheredBlock& b) {
    int p = 0;
    GatheredBlock r = b;
    while (!is_odd_column(r)) {
        for (auto& kv : r.profile) kv.second /= 2;
        ++p;
    }
    return {r, p};
}

/// Drop the unit column: the image in the stable range.
inline SkylineMonomial stabilize(const SkylineMonomial& m) { return m.with_unit(kStableUnit); }
inline SkylineClass stabilize(const SkylineClass& x) {
    SkylineClass out(Ring::F2);
    for (const auto& [m, v] : x) out.add(stabilize(m), v);
    return out;
}

/// Product of stable classes, computed on the component of the summed widths.
inline SkylineClass stable_product(const SkylineMonomial& a, const SkylineMonomial& b) {
    const int N = a.width() + b.width();
    return stabilize(cup_skyline(a.with_unit(N - a.width()), b.with_unit(N - b.width())));
}
inline SkylineClass stable_product(const SkylineClass& x, const SkylineClass& y) {
    SkylineClass out(Ring::F2);
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y) out += stable_product(a, b);
    return out;
}

/// A product of generator powers: odd column -> exponent.
using NakaokaTerm = std::map<GatheredBlock, int>;
using NakaokaExpression = std::vector<NakaokaTerm>;

inline SkylineClass stable_column(const GatheredBlock& b) { return SkylineClass(Ring::F2, SkylineMonomial({b}, kStableUnit)); }

inline SkylineClass expand_term(const NakaokaTerm& t) {
    SkylineClass out(Ring::F2, SkylineMonomial({}, kStableUnit));
    for (const auto& [g, e] : t)
        for (int i = 0; i < e; ++i) out = stable_product(out, stable_column(g));
    return out;
}

inline SkylineClass nakaoka_expand(const NakaokaExpression& e) {
    SkylineClass out(Ring::F2);
    for (const auto& t : e) out += expand_term(t);
    return out;
}

/// Peel off the widest monomial D = o C_i as prod R_i^{2^{p_i}} until nothing
/// is left. Throws if a product fails to lead with D (the width filtration
/// would not decrease).
inline NakaokaExpression nakaoka_decompose(SkylineClass x) {
    NakaokaExpression out;
    x = stabilize(x);
    std::size_t guard = 0;
    while (!x.is_zero()) {
        auto top = x.begin();
        for (auto it = x.begin(); it != x.end(); ++it)
            if (it->first.width() > top->first.width() || (it->first.width() == top->first.width() && top->first < it->first)) top = it;
        const SkylineMonomial D = top->first;
        NakaokaTerm term;
        for (const auto& b : D.blocks()) {
            auto [r, p] = two_root(b);
            term[r] += 1 << p;
        }
        SkylineClass prod = expand_term(term);
        if (!prod.contains(D)) throw std::logic_error("nakaoka_decompose: leading monomial missing from its product");
        for (const auto& [m, v] : prod)
            if (!(m == D) && m.width() >= D.width()) throw std::logic_error("nakaoka_decompose: width filtration did not decrease");
        x += prod;
        out.push_back(std::move(term));
        if (++guard > 100000) throw std::logic_error("nakaoka_decompose: iteration guard");
    }
    return out;
}

/// Every stable monomial with width <= w and degree == k.
inline std::vector<SkylineMonomial> enumerate_stable(int w, int k) {
    std::vector<SkylineMonomial> out;
    for (const auto& m : enumerate_skyline_basis(w, k)) {
        SkylineMonomial s = stabilize(m);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fncalc
