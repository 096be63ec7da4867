#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "skyline.hpp"

namespace fncalc {

/// Sq^0..Sq^top of one class, indexed by i.
using TotalSquare = std::vector<SkylineClass>;

namespace detail {

inline TotalSquare cartan(const TotalSquare& a, const TotalSquare& b, SkylineClass (*op)(const SkylineClass&, const SkylineClass&)) {
    if (a.empty() || b.empty()) return {};
    TotalSquare out(a.size() + b.size() - 1, SkylineClass(Ring::F2));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += op(a[i], b[j]);
    }
    return out;
}

inline SkylineClass cup_op(const SkylineClass& x, const SkylineClass& y) { return cup_skyline(x, y); }
inline SkylineClass transfer_op(const SkylineClass& x, const SkylineClass& y) { return transfer_skyline(x, y); }

struct SquareCache {
    std::mutex mu;
    std::map<std::pair<int, int>, TotalSquare> generator;
    std::map<GatheredBlock, TotalSquare> column;
};
inline SquareCache& square_cache() {
    static SquareCache c;
    return c;
}

}  // namespace detail

/// Reading of "at most two boxes stacked" for the enumeration rule.
enum class Stacking {
    Boxes,   // at most two gamma factors per column
    Height,  // also total drawn height at most twice that of the gamma_{l,*} box
};

/// Sq^i gamma_{l,2^k} by the enumeration rule: full-width diagrams whose
/// columns each contain some l' >= l and respect the stacking bound.
inline SkylineClass steenact_enumeration(int i, int l, int k, Stacking rule = Stacking::Height) {
    const int N = 1 << (k + l);
    const int deg = dickson_degree(k, l);
    SkylineClass out(Ring::F2);
    if (i < 0 || i > deg) return out;
    for (const auto& m : enumerate_skyline_basis(N, deg + i)) {
        if (m.unit_width() != 0) continue;
        bool ok = true;
        for (const auto& b : m.blocks()) {
            if (b.height() > 2 || b.lmax() < l) ok = false;
            // heights in units of 2^-L: a gamma_{l'} box is 2^L - 2^{L-l'}
            const int L = b.lmax() > l ? b.lmax() : l;
            long long h = 0;
            for (const auto& [lp, d] : b.profile) h += static_cast<long long>(d) * ((1LL << L) - (1LL << (L - lp)));
            if (rule == Stacking::Height && h > 2 * ((1LL << L) - (1LL << (L - l)))) ok = false;
        }
        if (ok) out.add(m, 1);
    }
    return out;
}

inline TotalSquare column_square(const GatheredBlock& b);
inline TotalSquare total_square(const SkylineMonomial& m);
inline Polynomial restrict_to_V(const SkylineClass& x, int n);

namespace detail {

// the part of the coproduct with both factors of positive component
inline SkylineTensor reduced_coproduct(const SkylineClass& x) {
    SkylineTensor out(Ring::F2);
    for (const auto& [pq, v] : coproduct_skyline(x))
        if (pq.first.component() > 0 && pq.second.component() > 0) out.add(pq, v);
    return out;
}

}  // namespace detail

/// Total square of gamma_{l,2^k} from the enumeration rule.
inline TotalSquare generator_square(int l, int k) {
    auto& c = detail::square_cache();
    {
        std::lock_guard<std::mutex> g(c.mu);
        auto it = c.generator.find({l, k});
        if (it != c.generator.end()) return it->second;
    }
    const int deg = dickson_degree(k, l);
    TotalSquare out;
    for (int i = 0; i <= deg; ++i) out.push_back(steenact_enumeration(i, l, k));
    std::lock_guard<std::mutex> g(c.mu);
    c.generator.emplace(std::make_pair(l, k), out);
    return out;
}

/// Total square of gamma_{l,2^k} solved from the constraints that determine
/// it: restriction to V_{k+l} is Sq of d_{k,l} (multi-column classes restrict
/// to zero) and the reduced coproduct is the Cartan sum of squares on smaller
/// components. Independent of the enumeration rule; slow beyond k + l = 3.
inline TotalSquare solve_generator_square(int l, int k) {
    const int n = k + l, N = 1 << n;
    const int deg = dickson_degree(k, l);
    const SkylineMonomial gam = gamma(l, 1 << k);
    const Polynomial d = dickson_generator(n, k, l);
    // required coproduct, by Sq index
    std::vector<SkylineTensor> want(static_cast<std::size_t>(deg) + 1, SkylineTensor(Ring::F2));
    for (const auto& [pq, v] : coproduct_skyline(gam)) {
        if (pq.first.component() == 0 || pq.second.component() == 0) continue;
        TotalSquare a = total_square(pq.first), b = total_square(pq.second);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(deg); ++j)
                for (const auto& [x, u] : a[i])
                    for (const auto& [y, w] : b[j]) want[i + j].add({x, y}, 1);
    }
    TotalSquare out(static_cast<std::size_t>(deg) + 1, SkylineClass(Ring::F2));
    for (int i = 0; i <= deg; ++i) {
        const auto basis = enumerate_skyline_basis(N, deg + i);
        std::map<SkylinePair, std::size_t> tpos;
        std::map<Exponent, std::size_t> ppos;
        std::vector<SkylineTensor> cops;
        std::vector<Polynomial> ress;
        for (const auto& m : basis) {
            cops.push_back(detail::reduced_coproduct(SkylineClass(Ring::F2, m)));
            ress.push_back(restrict_to_V(SkylineClass(Ring::F2, m), n));
            for (const auto& kv : cops.back()) tpos.try_emplace(kv.first, tpos.size());
        }
        const Polynomial target_res = sq_poly(i, d);
        for (const auto& kv : want[static_cast<std::size_t>(i)]) tpos.try_emplace(kv.first, tpos.size());
        for (const auto& e : monomials(n, deg + i)) ppos.try_emplace(e, ppos.size());
        const std::size_t dim = tpos.size() + ppos.size();
        auto encode = [&](const SkylineTensor& t, const Polynomial& p) {
            BitVector v(dim);
            for (const auto& kv : t) v.set(tpos.at(kv.first));
            for (const auto& kv : p.terms()) v.set(tpos.size() + ppos.at(kv.first));
            return v;
        };
        F2Echelon ech(dim, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            BitVector tag(basis.size());
            tag.set(j);
            if (!ech.insert(encode(cops[j], ress[j]), tag)) throw std::logic_error("generator_square: restriction and coproduct not injective");
        }
        BitVector v = encode(want[static_cast<std::size_t>(i)], target_res), tag(basis.size());
        ech.reduce(v, tag);
        if (!v.is_zero()) throw std::logic_error("generator_square: constraints inconsistent");
        for (auto j : tag.ones()) out[static_cast<std::size_t>(i)].add(basis[j], 1);
    }
    return out;
}

/// Total square of a single column: cup over the profile of gamma_{l, m/2^l},
/// each split by binary digits into transfer products of gamma_{l,2^j}.
inline TotalSquare column_square(const GatheredBlock& b) {
    auto& c = detail::square_cache();
    {
        std::lock_guard<std::mutex> g(c.mu);
        auto it = c.column.find(b);
        if (it != c.column.end()) return it->second;
    }
    TotalSquare out;
    for (const auto& [l, d] : b.profile) {
        const int count = b.points >> l;
        TotalSquare gam;
        for (int j = 0; (count >> j) != 0; ++j) {
            if (!((count >> j) & 1)) continue;
            TotalSquare piece = generator_square(l, j);
            gam = gam.empty() ? piece : detail::cartan(gam, piece, detail::transfer_op);
        }
        for (int e = 0; e < d; ++e) out = out.empty() ? gam : detail::cartan(out, gam, detail::cup_op);
    }
    std::lock_guard<std::mutex> g(c.mu);
    c.column.emplace(b, out);
    return out;
}

inline TotalSquare total_square(const SkylineMonomial& m) {
    if (m.stable()) throw std::invalid_argument("sq_skyline: stable monomial");
    TotalSquare out{SkylineClass(Ring::F2, SkylineMonomial::unit(m.unit_width()))};
    for (const auto& b : m.blocks()) out = detail::cartan(out, column_square(b), detail::transfer_op);
    return out;
}

inline SkylineClass sq_skyline(int i, const SkylineMonomial& m) {
    if (i < 0) return SkylineClass(Ring::F2);
    TotalSquare t = total_square(m);
    return static_cast<std::size_t>(i) < t.size() ? t[static_cast<std::size_t>(i)] : SkylineClass(Ring::F2);
}

inline SkylineClass sq_skyline(int i, const SkylineClass& x) {
    SkylineClass out(Ring::F2);
    for (const auto& [m, v] : x) out += sq_skyline(i, m);
    return out;
}

/// Restriction of a full-width column on 2^n points to V_n.
inline Polynomial restrict_to_V(const GatheredBlock& b) {
    int n = 0;
    while ((1 << n) < b.points) ++n;
    if ((1 << n) != b.points) throw std::invalid_argument("restrict_to_V: column width must be a power of two");
    Polynomial out = Polynomial::one(n);
    for (const auto& [l, d] : b.profile) out = out * dickson_generator(n, n - l, l).pow(d);
    return out;
}

/// Single-column part of a class on 2^n points, restricted to V_n; other
/// terms are dropped.
inline Polynomial restrict_to_V(const SkylineClass& x, int n) {
    Polynomial out(n);
    for (const auto& [m, v] : x)
        if (m.is_single_column() && m.blocks()[0].points == (1 << n)) out += restrict_to_V(m.blocks()[0]);
    return out;
}

/// The Dickson monomial d -> gamma_{l,2^k} read as a single column.
inline SkylineClass dickson_to_skyline(const DicksonExpression& x) {
    SkylineClass out(Ring::F2);
    for (const auto& [m, c] : x.terms) {
        if (m.empty()) {
            out.add(SkylineMonomial::unit(1 << x.n), 1);
            continue;
        }
        Profile p;
        for (const auto& [k, e] : m) p[x.n - k] += e;
        out.add(SkylineMonomial::column(GatheredBlock(1 << x.n, p)), 1);
    }
    return out;
}

}  // namespace fncalc
