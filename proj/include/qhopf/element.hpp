#pragma once

// Free *-algebra layer: words over a presentation's alphabet, Scalar-linear
// combinations of words, and tensor products with presentation-tagged legs.
// Values are immutable after construction; all operations return fresh values.

#include "qhopf/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhopf {

struct Presentation;

// Letters are small indices into a presentation's alphabet; a word is the
// index sequence.  The empty word is the unit.
using Word = std::string;

// deg-lex: length first, then left-to-right letter comparison in alphabet order
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct WordDesc {
    bool operator()(const Word& a, const Word& b) const { return word_less(b, a); }
};

struct Degree {
    int a = 0, b = 0;
    friend Degree operator+(Degree x, Degree y) { return {x.a + y.a, x.b + y.b}; }
    friend Degree operator-(Degree x, Degree y) { return {x.a - y.a, x.b - y.b}; }
    Degree operator-() const { return {-a, -b}; }
    friend bool operator==(Degree x, Degree y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Degree x, Degree y) { return !(x == y); }
    friend bool operator<(Degree x, Degree y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

// ---------------------------------------------------------------------------
// Element: finite map word -> Scalar, zero coefficients never stored.
// Terms iterate in descending monomial order, so begin() is the leading term.
// ---------------------------------------------------------------------------

struct Element {
    const Presentation* alg = nullptr;
    std::map<Word, Scalar, WordDesc> terms;

    Element() = default;
    explicit Element(const Presentation* p) : alg(p) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    const Word& leading_word() const {
        if (is_zero()) throw error("Element: leading word of zero");
        return terms.begin()->first;
    }
    const Scalar& leading_coeff() const {
        if (is_zero()) throw error("Element: leading coeff of zero");
        return terms.begin()->second;
    }

    // largest word length present (0 for the zero element)
    size_t max_word_len() const {
        size_t m = 0;
        for (auto& [w, c] : terms) m = std::max(m, w.size());
        return m;
    }

    friend Element operator+(const Element& x, const Element& y) {
        check_same(x, y);
        Element r = x;
        if (!r.alg) r.alg = y.alg;
        for (auto& [w, c] : y.terms) r.add_term(w, c);
        return r;
    }
    friend Element operator-(const Element& x, const Element& y) {
        check_same(x, y);
        Element r = x;
        if (!r.alg) r.alg = y.alg;
        for (auto& [w, c] : y.terms) r.add_term(w, -c);
        return r;
    }
    Element operator-() const {
        Element r(alg);
        for (auto& [w, c] : terms) r.terms.emplace(w, -c);
        return r;
    }
    friend Element operator*(const Scalar& s, const Element& x) {
        Element r(x.alg);
        if (s.is_zero()) return r;
        for (auto& [w, c] : x.terms) r.terms.emplace(w, s * c);
        return r;
    }
    // free product: bilinear word concatenation, no reduction
    friend Element operator*(const Element& x, const Element& y) {
        check_same(x, y);
        Element r(x.alg ? x.alg : y.alg);
        for (auto& [wx, cx] : x.terms)
            for (auto& [wy, cy] : y.terms) r.add_term(wx + wy, cx * cy);
        return r;
    }
    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }

    friend bool operator==(const Element& x, const Element& y) {
        return x.terms == y.terms;
    }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

    Element pow(int e) const {
        if (e < 0) throw error("Element: negative power");
        Element r(alg);
        r.add_term(Word(), Scalar::one());
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

private:
    static void check_same(const Element& x, const Element& y) {
        if (x.alg && y.alg && x.alg != y.alg)
            throw error("Element: mixed presentations");
    }
};

// ---------------------------------------------------------------------------
// TensorElement: finite Scalar-linear combination of n-tuples of words,
// each leg tagged with its presentation.
// ---------------------------------------------------------------------------

using TensorKey = std::vector<Word>;

struct TensorKeyDesc {
    bool operator()(const TensorKey& a, const TensorKey& b) const {
        for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
            if (a[i] != b[i]) return word_less(b[i], a[i]);
        }
        return a.size() > b.size();
    }
};

struct TensorElement {
    std::vector<const Presentation*> legs;
    std::map<TensorKey, Scalar, TensorKeyDesc> terms;

    TensorElement() = default;
    explicit TensorElement(std::vector<const Presentation*> l) : legs(std::move(l)) {}

    size_t arity() const { return legs.size(); }
    bool is_zero() const { return terms.empty(); }

    void add_term(const TensorKey& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& x, const TensorElement& y) {
        check_same(x, y);
        TensorElement r = x;
        if (r.legs.empty()) r.legs = y.legs;
        for (auto& [k, c] : y.terms) r.add_term(k, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& x, const TensorElement& y) {
        check_same(x, y);
        TensorElement r = x;
        if (r.legs.empty()) r.legs = y.legs;
        for (auto& [k, c] : y.terms) r.add_term(k, -c);
        return r;
    }
    friend TensorElement operator*(const Scalar& s, const TensorElement& x) {
        TensorElement r(x.legs);
        if (s.is_zero()) return r;
        for (auto& [k, c] : x.terms) r.terms.emplace(k, s * c);
        return r;
    }
    // componentwise product: (a (x) b) * (c (x) d) = ac (x) bd
    friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
        check_same(x, y);
        if (x.legs.empty()) return y.is_zero() ? x : y;
        TensorElement r(x.legs);
        for (auto& [kx, cx] : x.terms)
            for (auto& [ky, cy] : y.terms) {
                TensorKey k(kx.size());
                for (size_t i = 0; i < kx.size(); ++i) k[i] = kx[i] + ky[i];
                r.add_term(k, cx * cy);
            }
        return r;
    }
    TensorElement& operator+=(const TensorElement& y) { return *this = *this + y; }
    TensorElement& operator-=(const TensorElement& y) { return *this = *this - y; }

    friend bool operator==(const TensorElement& x, const TensorElement& y) {
        return x.terms == y.terms;
    }
    friend bool operator!=(const TensorElement& x, const TensorElement& y) { return !(x == y); }

private:
    static void check_same(const TensorElement& x, const TensorElement& y) {
        if (x.legs.empty() || y.legs.empty()) return;
        if (x.legs != y.legs) throw error("TensorElement: mismatched legs");
    }
};

// outer product of elements into a tensor
inline TensorElement tensor(const std::vector<Element>& parts) {
    std::vector<const Presentation*> legs;
    legs.reserve(parts.size());
    for (auto& p : parts) legs.push_back(p.alg);
    TensorElement t(legs);
    TensorKey base(parts.size());
    // expand multilinearly
    std::vector<std::map<Word, Scalar, WordDesc>::const_iterator> its;
    std::function<void(size_t, TensorKey&, Scalar)> rec = [&](size_t i, TensorKey& k, Scalar c) {
        if (i == parts.size()) {
            t.add_term(k, c);
            return;
        }
        for (auto& [w, s] : parts[i].terms) {
            k[i] = w;
            rec(i + 1, k, c * s);
        }
    };
    Scalar one = Scalar::one();
    rec(0, base, one);
    return t;
}

inline TensorElement tensor(const Element& a, const Element& b) {
    return tensor(std::vector<Element>{a, b});
}
inline TensorElement tensor(const Element& a, const Element& b, const Element& c) {
    return tensor(std::vector<Element>{a, b, c});
}

}  // namespace qhopf
