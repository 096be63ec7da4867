#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "differential.hpp"
#include "hopf.hpp"
#include "polynomial.hpp"
#include "skyline.hpp"

namespace fncalc {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos) : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool peek_word(const std::string& w) {
        skip();
        return s_.compare(i_, w.size(), w) == 0;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    bool accept_word(const std::string& w) {
        if (!peek_word(w)) return false;
        i_ += w.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void expect_word(const std::string& w) {
        if (!accept_word(w)) fail("expected '" + w + "'");
    }
    long long integer() {
        skip();
        std::size_t j = i_;
        if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        if (k == j) fail("expected an integer");
        if (k - j > 17) fail("integer too large");
        long long v = std::stoll(s_.substr(i_, k - i_));
        i_ = k;
        return v;
    }
    Integer big_integer() {
        skip();
        std::size_t j = i_;
        if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
        std::size_t k = j;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        if (k == j) fail("expected an integer");
        std::string t = s_.substr(i_, k - i_);
        if (t[0] == '+') t.erase(0, 1);
        i_ = k;
        return Integer(t);
    }
    bool at_digit() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
    }
    std::size_t pos() const { return i_; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }
    void finish() {
        if (!done()) fail("unexpected trailing input");
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? sep : "") << v[i];
    return o.str();
}

}  // namespace detail

// --- cells and cochains -----------------------------------------------------

inline std::string format(const Composition& a) {
    if (a.n() == 0) return "1_0";
    return "[" + detail::join(a.entries(), ",") + "]";
}

inline Composition parse_cell(detail::Cursor& c) {
    if (c.accept_word("1_0")) return Composition::empty_configuration();
    c.expect('[');
    std::vector<int> e;
    if (!c.accept(']')) {
        do {
            long long v = c.integer();
            if (v < 0) c.fail("cell entries must be non-negative");
            e.push_back(static_cast<int>(v));
        } while (c.accept(','));
        c.expect(']');
    }
    return Composition(std::move(e));
}

inline Composition parse_cell(const std::string& s) {
    detail::Cursor c(s);
    Composition a = parse_cell(c);
    c.finish();
    return a;
}

inline std::string format(const DepthOrdering& g) {
    std::ostringstream o;
    o << g.labels()[0];
    for (std::size_t i = 0; i < g.shape().size(); ++i) o << "<" << g.shape()[i] << " " << g.labels()[i + 1];
    return o.str();
}

inline DepthOrdering parse_labeled(detail::Cursor& c) {
    std::vector<int> labels, entries;
    labels.push_back(static_cast<int>(c.integer()));
    while (c.accept('<')) {
        entries.push_back(static_cast<int>(c.integer()));
        labels.push_back(static_cast<int>(c.integer()));
    }
    try {
        return DepthOrdering(std::move(labels), std::move(entries));
    } catch (const std::invalid_argument& e) {
        c.fail(e.what());
    }
}

inline DepthOrdering parse_labeled(const std::string& s) {
    detail::Cursor c(s);
    DepthOrdering g = parse_labeled(c);
    c.finish();
    return g;
}

namespace detail {

template <class Key, class KeyFormat>
std::string format_chain(const Chain<Key>& x, KeyFormat fk) {
    if (x.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [k, v] : x) parts.push_back(x.ring() == Ring::F2 ? fk(k) : v.get_str() + "*" + fk(k));
    return join(parts, " + ");
}

template <class Key, class KeyParse>
Chain<Key> parse_chain(Cursor& c, Ring ring, KeyParse pk) {
    Chain<Key> out(ring);
    if (c.peek() == '0') {
        c.expect('0');
        return out;
    }
    do {
        Integer coef = 1;
        if (c.at_digit() && !c.peek_word("1_0")) {
            coef = c.big_integer();
            c.expect('*');
        }
        out.add(pk(c), coef);
    } while (c.accept('+'));
    return out;
}

}  // namespace detail

inline std::string format(const Cochain& x) {
    return detail::format_chain(x, [](const Composition& a) { return format(a); });
}

inline std::string format(const LabeledCochain& x) {
    return detail::format_chain(x, [](const DepthOrdering& g) { return "(" + format(g) + ")"; });
}

inline Cochain parse_cochain(const std::string& s, Ring ring) {
    detail::Cursor c(s);
    Cochain x = detail::parse_chain<Composition>(c, ring, [](detail::Cursor& cc) { return parse_cell(cc); });
    c.finish();
    return x;
}

inline LabeledCochain parse_labeled_cochain(const std::string& s, Ring ring) {
    detail::Cursor c(s);
    LabeledCochain x = detail::parse_chain<DepthOrdering>(c, ring, [](detail::Cursor& cc) {
        cc.expect('(');
        DepthOrdering g = parse_labeled(cc);
        cc.expect(')');
        return g;
    });
    c.finish();
    return x;
}

inline std::string format(const TensorSum& t) {
    if (t.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [pq, v] : t) parts.push_back(format(pq.first) + " (x) " + format(pq.second));
    return detail::join(parts, " + ");
}

// --- skyline expressions -----------------------------------------------------

inline std::string format(const GatheredBlock& b) {
    std::vector<std::string> f;
    for (auto it = b.profile.rbegin(); it != b.profile.rend(); ++it) {
        std::string s = "g(" + std::to_string(it->first) + "," + std::to_string(b.points >> it->first) + ")";
        if (it->second > 1) s += "^" + std::to_string(it->second);
        f.push_back(s);
    }
    return detail::join(f, "*");
}

inline std::string format(const SkylineMonomial& m) {
    std::vector<std::string> parts;
    for (const auto& b : m.blocks()) parts.push_back(format(b));
    if (m.stable())
        parts.push_back("1_inf");
    else if (m.unit_width() > 0 || parts.empty())
        parts.push_back("1_" + std::to_string(m.unit_width()));
    return detail::join(parts, " o ");
}

inline std::string format(const SkylineClass& x) {
    return detail::format_chain(x, [](const SkylineMonomial& m) { return format(m); });
}

inline std::string format(const SkylineTensor& t) {
    if (t.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [pq, v] : t) {
        auto wrap = [](const SkylineMonomial& m) {
            std::string s = format(m);
            return s.find(' ') == std::string::npos ? s : "(" + s + ")";
        };
        parts.push_back(wrap(pq.first) + " (x) " + wrap(pq.second));
    }
    return detail::join(parts, " + ");
}

namespace detail {

// A parsed value: a class, or the bare stable unit 1_inf.
struct SkyValue {
    SkylineClass x{Ring::F2};
    bool stable_unit = false;
    bool stable() const {
        if (stable_unit) return true;
        return !x.is_zero() && x.begin()->first.stable();
    }
};

class SkylineParser {
public:
    explicit SkylineParser(const std::string& s) : c_(s) {}
    SkylineClass run() {
        SkyValue v = sum();
        c_.finish();
        if (v.stable_unit) return SkylineClass(Ring::F2, SkylineMonomial::unit(0).with_unit(kStableUnit));
        return v.x;
    }

private:
    SkyValue sum() {
        SkyValue v = transfer();
        while (c_.accept('+')) {
            const std::size_t at = c_.pos();
            SkyValue w = transfer();
            if (v.stable_unit || w.stable_unit) throw ParseError("cannot add a bare 1_inf", at);
            v.x += w.x;
        }
        return v;
    }
    SkyValue transfer() {
        SkyValue v = cup();
        while (accept_o()) {
            const std::size_t at = c_.pos();
            SkyValue w = cup();
            if (w.stable_unit) {
                if (v.stable()) throw ParseError("1_inf used twice", at);
                v.x = stabilize(v.x);
                v.stable_unit = false;
            } else if (v.stable_unit) {
                if (w.stable()) throw ParseError("1_inf used twice", at);
                v.x = stabilize(w.x);
                v.stable_unit = false;
            } else {
                if (v.stable() || w.stable()) throw ParseError("transfer of stable classes is undefined", at);
                v.x = transfer_skyline(v.x, w.x);
            }
        }
        return v;
    }
    SkyValue cup() {
        SkyValue v = power();
        while (c_.accept('*')) {
            const std::size_t at = c_.pos();
            SkyValue w = power();
            if (v.stable_unit || w.stable_unit) throw ParseError("1_inf is not a cup factor", at);
            v.x = v.stable() || w.stable() ? stable_product(v.x, w.x) : cup_skyline(v.x, w.x);
        }
        return v;
    }
    SkyValue power() {
        SkyValue v = atom();
        if (c_.accept('^')) {
            const std::size_t at = c_.pos();
            long long e = c_.integer();
            if (e < 1) throw ParseError("exponent must be positive", at);
            if (v.stable_unit) throw ParseError("1_inf is not a cup factor", at);
            SkylineClass base = v.x;
            for (long long i = 1; i < e; ++i) v.x = v.stable() ? stable_product(v.x, base) : cup_skyline(v.x, base);
        }
        return v;
    }
    SkyValue atom() {
        SkyValue v;
        if (c_.accept('(')) {
            v = sum();
            c_.expect(')');
            return v;
        }
        if (c_.accept_word("g(")) {
            const std::size_t at = c_.pos();
            long long l = c_.integer();
            c_.expect(',');
            long long n = c_.integer();
            c_.expect(')');
            if (l < 1 || l > 20 || n < 0 || n > (1 << 20)) throw ParseError("g(l,n) needs l >= 1, n >= 0", at);
            v.x = SkylineClass(Ring::F2, gamma(static_cast<int>(l), static_cast<int>(n)));
            return v;
        }
        if (c_.accept_word("1_")) {
            if (c_.accept_word("inf")) {
                v.stable_unit = true;
                return v;
            }
            const std::size_t at = c_.pos();
            long long k = c_.integer();
            if (k < 0) throw ParseError("unit width must be non-negative", at);
            v.x = SkylineClass(Ring::F2, SkylineMonomial::unit(static_cast<int>(k)));
            return v;
        }
        if (c_.peek() == '0') {
            c_.expect('0');
            return v;
        }
        c_.fail("expected g(l,n), 1_k, 1_inf, 0 or '('");
    }
    bool accept_o() {
        if (!c_.peek_word("o")) return false;
        return c_.accept('o');
    }

    Cursor c_;
};

}  // namespace detail

inline SkylineClass parse_skyline(const std::string& s) { return detail::SkylineParser(s).run(); }

// --- polynomials and Dickson expressions ------------------------------------

inline std::string format_monomial(const Exponent& e) {
    std::vector<std::string> f;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        std::string s = "x" + std::to_string(j + 1);
        if (e[j] > 1) s += "^" + std::to_string(e[j]);
        f.push_back(s);
    }
    return f.empty() ? "1" : detail::join(f, "*");
}

/// Terms in descending lexicographic order.
inline std::string format(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::string> parts;
    for (auto it = p.terms().terms().rbegin(); it != p.terms().terms().rend(); ++it) parts.push_back(format_monomial(it->first));
    return detail::join(parts, " + ");
}

/// Parse in n variables; n = 0 infers the largest index used.
inline Polynomial parse_polynomial(const std::string& s, int n = 0) {
    detail::Cursor c(s);
    std::vector<std::pair<std::size_t, Exponent>> terms;
    int top = 0;
    auto term = [&]() {
        const std::size_t at = c.pos();
        Exponent e;
        if (c.peek() == '1') {
            c.expect('1');
            return std::make_pair(at, e);
        }
        do {
            c.expect('x');
            long long j = c.integer();
            if (j < 1 || j > 64) c.fail("variable index out of range");
            long long p = 1;
            if (c.accept('^')) p = c.integer();
            if (p < 0) c.fail("negative exponent");
            if (static_cast<int>(e.size()) < j) e.resize(static_cast<std::size_t>(j), 0);
            e[static_cast<std::size_t>(j - 1)] += static_cast<int>(p);
            top = std::max(top, static_cast<int>(j));
        } while (c.accept('*'));
        return std::make_pair(at, e);
    };
    if (c.peek() == '0') {
        c.expect('0');
        c.finish();
        return Polynomial(n);
    }
    do terms.push_back(term());
    while (c.accept('+'));
    c.finish();
    if (n == 0) n = std::max(top, 1);
    if (top > n) throw ParseError("variable index exceeds " + std::to_string(n), 0);
    Polynomial out(n);
    for (auto& [at, e] : terms) {
        e.resize(static_cast<std::size_t>(n), 0);
        out.add(e);
    }
    return out;
}

inline std::string format(const DicksonExpression& x) {
    if (x.terms.is_zero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [m, c] : x.terms) {
        std::vector<std::string> f;
        for (const auto& [k, e] : m) {
            std::string s = "d(" + std::to_string(k) + "," + std::to_string(x.n - k) + ")";
            if (e > 1) s += "^" + std::to_string(e);
            f.push_back(s);
        }
        parts.push_back(f.empty() ? "1" : detail::join(f, "*"));
    }
    return detail::join(parts, " + ");
}

/// Nakaoka terms as products of (odd column)^exponent; "1" for the empty term.
inline std::string format(const NakaokaTerm& t) {
    std::vector<std::string> f;
    for (const auto& [g, e] : t) {
        std::string s = "[" + format(g) + "]";
        if (e > 1) s += "^" + std::to_string(e);
        f.push_back(s);
    }
    return f.empty() ? "1" : detail::join(f, " ");
}

inline std::string format(const NakaokaExpression& x) {
    if (x.empty()) return "0";
    std::vector<std::string> parts;
    for (const auto& t : x) parts.push_back(format(t));
    return detail::join(parts, " + ");
}

}  // namespace fncalc
