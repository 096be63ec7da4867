#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "chain.hpp"
#include "f2.hpp"

namespace fncalc {

using Exponent = std::vector<int>;

/// Element of F2[x_1..x_n].
class Polynomial {
public:
    explicit Polynomial(int n = 0) : n_(n), terms_(Ring::F2) {}
    Polynomial(int n, const Exponent& e) : Polynomial(n) { add(e); }

    static Polynomial one(int n) { return Polynomial(n, Exponent(static_cast<std::size_t>(n), 0)); }
    static Polynomial variable(int n, int j) {
        if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        return Polynomial(n, e);
    }

    int variables() const { return n_; }
    bool is_zero() const { return terms_.is_zero(); }
    const Chain<Exponent>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add(const Exponent& e) {
        if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length mismatch");
        terms_.add(e, 1);
    }

    /// Degree of a homogeneous polynomial; -1 for zero.
    int degree() const {
        if (is_zero()) return -1;
        const auto& e = terms_.begin()->first;
        return std::accumulate(e.begin(), e.end(), 0);
    }
    bool homogeneous() const {
        const int d = degree();
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
        return true;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        terms_ += o.terms_;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial out(a.n_);
        for (const auto& [e, u] : a.terms_)
            for (const auto& [f, v] : b.terms_) {
                Exponent g(e.size());
                for (std::size_t i = 0; i < g.size(); ++i) g[i] = e[i] + f[i];
                out.terms_.add(g, 1);
            }
        return out;
    }
    Polynomial pow(int k) const {
        Polynomial out = one(n_);
        for (int i = 0; i < k; ++i) out = out * *this;
        return out;
    }
    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    /// Substitute x_j -> images[j-1] (all in the same ring).
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != n_) throw std::invalid_argument("substitute: wrong arity");
        Polynomial out(n_);
        for (const auto& [e, c] : terms_) {
            Polynomial t = one(n_);
            for (int j = 0; j < n_; ++j) t = t * images[static_cast<std::size_t>(j)].pow(e[static_cast<std::size_t>(j)]);
            out += t;
        }
        return out;
    }

private:
    void check(const Polynomial& o) const {
        if (n_ != o.n_) throw std::invalid_argument("polynomials in different rings");
    }
    int n_;
    Chain<Exponent> terms_;
};

/// Homogeneous monomials of degree d in n variables, lexicographically descending.
inline std::vector<Exponent> monomials(int n, int d) {
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j == n - 1) {
            e[static_cast<std::size_t>(j)] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[static_cast<std::size_t>(j)] = a;
            self(self, j + 1, left - a);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back(e);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

// --- Steenrod squares on polynomials ---------------------------------------

/// Sq^i f from Sq(x) = x + x^2 and the Cartan formula.
inline Polynomial sq_poly(int i, const Polynomial& f) {
    Polynomial out(f.variables());
    if (i < 0) return out;
    const int n = f.variables();
    for (const auto& [e, c] : f.terms()) {
        // Sq^j x^a = C(a,j) x^{a+j}; distribute i over the variables
        Exponent g = e;
        auto rec = [&](auto&& self, int v, int left) -> void {
            if (v == n) {
                if (left == 0) out.add(g);
                return;
            }
            const int a = e[static_cast<std::size_t>(v)];
            for (int j = 0; j <= std::min(a, left); ++j) {
                if ((j & (a - j)) != 0) continue;
                g[static_cast<std::size_t>(v)] = a + j;
                self(self, v + 1, left - j);
            }
            g[static_cast<std::size_t>(v)] = a;
        };
        rec(rec, 0, i);
    }
    return out;
}

// --- Dickson invariants -----------------------------------------------------

/// Generators of GL_n(F2) as substitutions: transpositions (1 j) and x1 -> x1 + x2.
inline std::vector<std::vector<Polynomial>> gl_generators(int n) {
    std::vector<std::vector<Polynomial>> gens;
    auto identity = [n] {
        std::vector<Polynomial> v;
        for (int j = 1; j <= n; ++j) v.push_back(Polynomial::variable(n, j));
        return v;
    };
    for (int j = 2; j <= n; ++j) {
        auto s = identity();
        std::swap(s[0], s[static_cast<std::size_t>(j - 1)]);
        gens.push_back(std::move(s));
    }
    if (n >= 2) {
        auto t = identity();
        t[0] = Polynomial::variable(n, 1) + Polynomial::variable(n, 2);
        gens.push_back(std::move(t));
    }
    return gens;
}

inline bool is_invariant(const Polynomial& f) {
    for (const auto& g : gl_generators(f.variables()))
        if (!(f.substitute(g) == f)) return false;
    return true;
}

/// Basis of the GL_n(F2)-invariants of one degree by linear algebra on the
/// monomial basis; rows reduced so the result is canonical.
inline std::vector<Polynomial> invariants_basis(int n, int degree) {
    if (n < 1 || n > 3 || degree < 0 || degree > 16) throw std::invalid_argument("invariants_basis: oracle limited to n <= 3, degree <= 16");
    const auto mons = monomials(n, degree);
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < mons.size(); ++i) pos.emplace(mons[i], i);
    const auto gens = gl_generators(n);
    const std::size_t N = mons.size(), D = N * gens.size();
    F2Echelon ech(D, N);
    std::vector<BitVector> kernel;
    for (std::size_t j = 0; j < N; ++j) {
        Polynomial m(n, mons[j]);
        BitVector v(D), tag(N);
        tag.set(j);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Polynomial d = m.substitute(gens[g]) + m;
            for (const auto& [e, c] : d.terms()) v.flip(g * N + pos.at(e));
        }
        if (!ech.insert(std::move(v), tag)) kernel.push_back(tag);
    }
    // reduced echelon form of the kernel
    F2Echelon basis(N, 0);
    std::vector<BitVector> rows;
    for (auto& k : kernel) {
        BitVector t(0);
        basis.reduce(k, t);
        if (!k.is_zero()) {
            basis.insert(k);
            rows.push_back(k);
        }
    }
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows.size(); ++b)
            if (a != b && rows[b].get(rows[a].lowest())) rows[b] ^= rows[a];
    std::vector<Polynomial> out;
    for (const auto& r : rows) {
        Polynomial p(n);
        for (auto i : r.ones()) p.add(mons[i]);
        out.push_back(std::move(p));
    }
    return out;
}

/// d_{k,l} (k + l = n): coefficient of X^{2^k} in prod over v in F2^n of (X + v.x).
inline Polynomial dickson_generator(int n, int k, int l) {
    if (n < 1 || k < 0 || l < 1 || k + l != n || n > 6) throw std::invalid_argument("dickson_generator: need k + l = n, l >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, Polynomial> cache;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find({n, k});
        if (it != cache.end()) return it->second;
    }
    // work in n+1 variables, X last
    const int N = n + 1;
    Polynomial prod = Polynomial::one(N);
    for (int v = 0; v < (1 << n); ++v) {
        Polynomial f = Polynomial::variable(N, N);
        for (int j = 0; j < n; ++j)
            if ((v >> j) & 1) f += Polynomial::variable(N, j + 1);
        prod = prod * f;
    }
    Polynomial out(n);
    for (const auto& [e, c] : prod.terms())
        if (e.back() == (1 << k)) out.add(Exponent(e.begin(), e.end() - 1));
    std::lock_guard<std::mutex> g(mu);
    cache.emplace(std::make_pair(n, k), out);
    return out;
}

inline int dickson_degree(int k, int l) { return (1 << k) * ((1 << l) - 1); }

/// Monomial in the Dickson generators of one n: exponent per k (l = n - k).
using DicksonMonomial = std::map<int, int>;
/// Formal F2 sum of Dickson monomials for a fixed n.
struct DicksonExpression {
    int n = 0;
    Chain<DicksonMonomial> terms{Ring::F2};
    bool operator==(const DicksonExpression& o) const { return n == o.n && terms == o.terms; }
};

inline int dickson_monomial_degree(int n, const DicksonMonomial& m) {
    int d = 0;
    for (const auto& [k, e] : m) d += e * dickson_degree(k, n - k);
    return d;
}

inline Polynomial evaluate(const DicksonExpression& x) {
    Polynomial out(x.n);
    for (const auto& [m, c] : x.terms) {
        Polynomial t = Polynomial::one(x.n);
        for (const auto& [k, e] : m) t = t * dickson_generator(x.n, k, x.n - k).pow(e);
        out += t;
    }
    return out;
}

/// Monomials d_{0,n}^{e_0} ... d_{n-1,1}^{e_{n-1}} of total degree d.
inline std::vector<DicksonMonomial> dickson_monomials(int n, int d) {
    std::vector<DicksonMonomial> out;
    DicksonMonomial cur;
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        const int w = dickson_degree(k, n - k);
        for (int e = 0; e * w <= left; ++e) {
            if (e) cur[k] = e;
            self(self, k + 1, left - e * w);
        }
        cur.erase(k);
    };
    rec(rec, 0, d);
    return out;
}

/// Express a homogeneous invariant in the Dickson generators by solving the
/// linear system on the monomial basis. Throws if f is not in the span.
inline DicksonExpression dickson_reexpress(const Polynomial& f) {
    const int n = f.variables();
    DicksonExpression out;
    out.n = n;
    if (f.is_zero()) return out;
    if (!f.homogeneous()) throw std::invalid_argument("dickson_reexpress: inhomogeneous input");
    const int d = f.degree();
    const auto mons = monomials(n, d);
    std::map<Exponent, std::size_t> pos;
    for (std::size_t i = 0; i < mons.size(); ++i) pos.emplace(mons[i], i);
    const auto dm = dickson_monomials(n, d);
    auto bits = [&](const Polynomial& p) {
        BitVector v(mons.size());
        for (const auto& [e, c] : p.terms()) v.set(pos.at(e));
        return v;
    };
    F2Echelon ech(mons.size(), dm.size());
    for (std::size_t j = 0; j < dm.size(); ++j) {
        BitVector tag(dm.size());
        tag.set(j);
        DicksonExpression single;
        single.n = n;
        single.terms.add(dm[j], 1);
        ech.insert(bits(evaluate(single)), tag);
    }
    BitVector v = bits(f), tag(dm.size());
    ech.reduce(v, tag);
    if (!v.is_zero()) throw std::invalid_argument("dickson_reexpress: not in the Dickson algebra");
    for (auto j : tag.ones()) out.terms.add(dm[j], 1);
    return out;
}

/// Hu'ng's formula for Sq^i d_{k,l}, with d_{n,0} = 1; cases tried in order.
inline DicksonExpression hung_square(int i, int k, int l, int n) {
    if (k < 0 || l < 1 || k + l != n) throw std::invalid_argument("hung_square: need k + l = n, l >= 1");
    DicksonExpression out;
    out.n = n;
    auto put = [&](std::vector<int> ks) {
        DicksonMonomial m;
        for (int kk : ks)
            if (kk < n) ++m[kk];
        out.terms.add(m, 1);
        return out;
    };
    for (int k1 = 0; k1 <= k; ++k1)
        if (i == (1 << k) - (1 << k1)) return put({k1});
    for (int k1 = 0; k1 <= k; ++k1)
        for (int k2 = k + 1; k2 <= n; ++k2)
            if (i == (1 << n) + (1 << k) - (1 << k1) - (1 << k2)) return put({k1, k2});
    if (i == dickson_degree(k, l)) return put({k, k});
    return out;
}

}  // namespace fncalc
