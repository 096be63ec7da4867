#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "symm.hpp"

namespace fncalc {

/// Entrywise sum of two cells of the same component.
inline Composition intersection_product(const Composition& a, const Composition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("intersection_product: component mismatch");
    if (a.n() == 0) return a;
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return Composition(std::move(e));
}

/// Bilinear extension (mod 2); terms on different components multiply to zero.
inline Cochain intersection_product(const Cochain& x, const Cochain& y) {
    Cochain out(Ring::F2);
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y)
            if (a.n() == b.n()) out.add(intersection_product(a, b), u * v);
    return out;
}

/// Same zero positions. The entrywise sum represents the cup product only
/// for such pairs; elsewhere it need not even send cocycles to cocycles.
inline bool transversal(const Composition& a, const Composition& b) {
    if (a.n() != b.n()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] == 0) != (b[i] == 0)) return false;
    return true;
}

inline bool transversal(const Cochain& x, const Cochain& y) {
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y)
            if (a.n() == b.n() && !transversal(a, b)) return false;
    return true;
}

/// Formal sum of tensors of cells (mod 2).
using CellPair = std::pair<Composition, Composition>;
using TensorSum = Chain<CellPair>;

inline Composition cell_from(std::vector<int> e, int n) {
    if (n == 0) return Composition::empty_configuration();
    return Composition(std::move(e));
}

/// One term per zero entry, counting the two boundary conventions a_0 = a_n = 0.
inline TensorSum coproduct(const Composition& a) {
    TensorSum out(Ring::F2);
    const int n = a.n();
    if (n == 0) {
        out.add({a, a}, 1);
        return out;
    }
    const auto& e = a.entries();
    for (int i = 0; i <= n; ++i) {
        const bool zero = i == 0 || i == n || e[static_cast<std::size_t>(i - 1)] == 0;
        if (!zero) continue;
        std::vector<int> left, right;
        if (i >= 1) left.assign(e.begin(), e.begin() + (i - 1));
        if (i < n) right.assign(e.begin() + i, e.end());
        out.add({cell_from(left, i), cell_from(right, n - i)}, 1);
    }
    return out;
}

inline TensorSum coproduct(const Cochain& c) {
    TensorSum out(Ring::F2);
    for (const auto& [a, v] : c)
        if (v % 2 != 0) out += coproduct(a);
    return out;
}

/// Sum over interleavings of the ordered 0-block sequences, joined by single
/// zeros, counted with multiplicity mod 2.
inline Cochain transfer_product(const Composition& a, const Composition& b) {
    Cochain out(Ring::F2);
    if (a.n() == 0) return Cochain(Ring::F2, b);
    if (b.n() == 0) return Cochain(Ring::F2, a);
    const auto A = blocks(a, 0), B = blocks(b, 0);
    const std::size_t N = A.size() + B.size();
    for (const auto& seq : shuffles(A.size(), N)) {
        std::vector<std::vector<int>> parts;
        for (int s : seq) parts.push_back(static_cast<std::size_t>(s) < A.size() ? A[static_cast<std::size_t>(s)] : B[static_cast<std::size_t>(s) - A.size()]);
        out.add(Composition(join_blocks(parts, 0)), 1);
    }
    return out;
}

inline Cochain transfer_product(const Cochain& x, const Cochain& y) {
    Cochain out(Ring::F2);
    for (const auto& [a, u] : x)
        for (const auto& [b, v] : y)
            if ((u * v) % 2 != 0) out += transfer_product(a, b);
    return out;
}

/// g_{l,n}: n runs of 2^l - 1 ones separated by single zeros.
inline Composition gamma_cochain(int l, int n) {
    if (l < 1 || n < 0) throw std::invalid_argument("gamma_cochain: need l >= 1, n >= 0");
    if (n == 0) return Composition::empty_configuration();
    std::vector<std::vector<int>> runs(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>((1 << l) - 1), 1));
    return Composition(join_blocks(runs, 0));
}

/// Direct sum over components of mod-2 cochains.
class GradedCochain {
public:
    GradedCochain() = default;
    explicit GradedCochain(const Cochain& c) { add(c); }

    void add(const Cochain& c) {
        for (const auto& [a, v] : c) {
            auto [it, fresh] = parts_.try_emplace(a.n(), Ring::F2);
            it->second.add(a, v);
            if (it->second.is_zero()) parts_.erase(it);
        }
    }
    const std::map<int, Cochain>& components() const { return parts_; }
    Cochain component(int n) const {
        auto it = parts_.find(n);
        return it == parts_.end() ? Cochain(Ring::F2) : it->second;
    }
    Cochain total() const {
        Cochain out(Ring::F2);
        for (const auto& kv : parts_) out += kv.second;
        return out;
    }
    friend GradedCochain operator*(const GradedCochain& x, const GradedCochain& y) {
        GradedCochain out;
        for (const auto& [n, c] : x.parts_) out.add(intersection_product(c, y.component(n)));
        return out;
    }

private:
    std::map<int, Cochain> parts_;
};

/// Apply a bilinear cochain operation factorwise to two tensor sums.
template <class Op>
TensorSum tensor_product_op(const TensorSum& s, const TensorSum& t, Op op) {
    TensorSum out(Ring::F2);
    for (const auto& [p, u] : s)
        for (const auto& [q, v] : t) {
            Cochain l = op(p.first, q.first), r = op(p.second, q.second);
            for (const auto& [a, x] : l)
                for (const auto& [b, y] : r) out.add({a, b}, x * y * u * v);
        }
    return out;
}

/// Chain-level report for the property suites.
struct ChainCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Is c (mod 2) a cocycle in its components?
inline bool is_cocycle(const Cochain& c, AmbientDim m = kInfinity) { return delta(c.in_ring(Ring::F2), m).is_zero(); }

/// Checks used by the property suites: cocycle status of the inputs, of
/// their product, and the bialgebra identity at chain level.
inline std::vector<ChainCheck> verify_chain_level(const std::string& op, const std::vector<Cochain>& inputs) {
    std::vector<ChainCheck> out;
    for (std::size_t i = 0; i < inputs.size(); ++i) out.push_back({"input " + std::to_string(i) + " cocycle", is_cocycle(inputs[i]), ""});
    if (inputs.size() == 2) {
        Cochain prod(Ring::F2);
        if (op == "product") prod = intersection_product(inputs[0], inputs[1]);
        else if (op == "transfer") prod = transfer_product(inputs[0], inputs[1]);
        else throw std::invalid_argument("verify_chain_level: unknown op " + op);
        out.push_back({op + " cocycle", is_cocycle(prod), ""});
        TensorSum lhs = coproduct(prod);
        TensorSum rhs = op == "product"
                            ? tensor_product_op(coproduct(inputs[0]), coproduct(inputs[1]),
                                                [](const Composition& a, const Composition& b) {
                                                    return a.n() == b.n() ? Cochain(Ring::F2, intersection_product(a, b)) : Cochain(Ring::F2);
                                                })
                            : tensor_product_op(coproduct(inputs[0]), coproduct(inputs[1]), [](const Composition& a, const Composition& b) { return transfer_product(a, b); });
        out.push_back({"coproduct compatibility", lhs == rhs, ""});
    }
    return out;
}

/// Is c a coboundary, component by component and degree by degree?
inline bool is_coboundary(const Cochain& c, AmbientDim m = kInfinity) {
    std::map<std::pair<int, int>, Cochain> parts;
    for (const auto& [a, v] : c) parts.try_emplace({a.n(), a.degree()}, Ring::F2).first->second.add(a, v);
    for (const auto& [key, part] : parts) {
        if (part.is_zero()) continue;
        if (!CoboundarySpace(key.first, key.second, m).contains(part)) return false;
    }
    return true;
}

}  // namespace fncalc
