#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fncalc {

using Integer = mpz_class;

enum class Ring { Z, F2 };

inline const char* ring_name(Ring r) { return r == Ring::Z ? "z" : "f2"; }

inline Ring parse_ring(const std::string& s) {
    if (s == "z" || s == "Z" || s == "int" || s == "integers") return Ring::Z;
    if (s == "f2" || s == "F2" || s == "mod2" || s == "2") return Ring::F2;
    throw std::invalid_argument("unknown ring '" + s + "' (expected z or f2)");
}

/// Reduce an integer into the coefficient ring: identity over Z, parity over F2.
inline Integer reduce(Ring r, Integer c) {
    if (r == Ring::F2) {
        c = c % 2;
        if (c < 0) c += 2;
    }
    return c;
}

/// A finite formal sum of keys with coefficients in Z or F2. Zero coefficients
/// are never stored, and iteration follows the key order.
template <class Key>
class Chain {
public:
    using map_type = std::map<Key, Integer>;
    using const_iterator = typename map_type::const_iterator;

    explicit Chain(Ring r = Ring::Z) : ring_(r) {}
    Chain(Ring r, const Key& k, Integer c = 1) : ring_(r) { add(k, std::move(c)); }

    Ring ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    Integer coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Integer(0) : it->second;
    }
    bool contains(const Key& k) const { return terms_.count(k) != 0; }

    void add(const Key& k, const Integer& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, 0);
        it->second += c;
        it->second = reduce(ring_, it->second);
        if (it->second == 0) terms_.erase(it);
    }

    Chain& operator+=(const Chain& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Chain& operator*=(const Integer& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        map_type next;
        for (auto& [k, c] : terms_) {
            Integer v = reduce(ring_, c * s);
            if (v != 0) next.emplace(k, v);
        }
        terms_.swap(next);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(Integer s, Chain a) { return a *= s; }

    /// Same terms reduced into another ring.
    Chain in_ring(Ring r) const {
        Chain out(r);
        for (const auto& [k, c] : terms_) out.add(k, c);
        return out;
    }

    /// Keep only the keys accepted by `keep`.
    template <class Pred>
    Chain filter(Pred keep) const {
        Chain out(ring_);
        for (const auto& [k, c] : terms_)
            if (keep(k)) out.terms_.emplace(k, c);
        return out;
    }

    /// Apply a linear map given on basis keys.
    template <class F>
    auto apply(F f) const -> decltype(f(std::declval<const Key&>())) {
        using Out = decltype(f(std::declval<const Key&>()));
        Out out(ring_);
        for (const auto& [k, c] : terms_) {
            Out img = f(k);
            img *= c;
            out += img;
        }
        return out;
    }

    std::vector<Key> support() const {
        std::vector<Key> out;
        out.reserve(terms_.size());
        for (const auto& kv : terms_) out.push_back(kv.first);
        return out;
    }

    bool operator==(const Chain& o) const { return terms_ == o.terms_; }

private:
    Ring ring_;
    map_type terms_;
};

}  // namespace fncalc
