#pragma once

// A presented algebra: named alphabet with Z^2-degrees, star images, a raw
// relation set (each relation = 0) and an oriented rewrite-rule system.
// The monomial order is deg-lex with the declared alphabet order.

#include "qhopf/element.hpp"

#include <cassert>
#include <sstream>

namespace qhopf {

struct RewriteRule {
    Word lhs;     // strictly greater than every word of rhs
    Element rhs;  // lhs == rhs modulo the ideal
};

struct Presentation {
    std::string name;
    std::vector<std::string> letters;  // alphabet order = index order
    std::vector<Degree> degrees;       // per letter
    std::vector<Element> star_images;  // per letter
    std::vector<Element> relations;    // each understood as = 0
    std::vector<RewriteRule> rules;    // oriented, possibly completed
    bool confluent = false;            // all critical pairs resolve

    int letter(const std::string& sym) const {
        for (size_t i = 0; i < letters.size(); ++i)
            if (letters[i] == sym) return static_cast<int>(i);
        return -1;
    }

    Element unit() const {
        Element e(this);
        e.add_term(Word(), Scalar::one());
        return e;
    }
    Element scalar(const Scalar& s) const {
        Element e(this);
        e.add_term(Word(), s);
        return e;
    }
    Element gen(int i) const {
        Element e(this);
        e.add_term(Word(1, static_cast<char>(i)), Scalar::one());
        return e;
    }
    Element gen(const std::string& sym) const {
        int i = letter(sym);
        if (i < 0) throw error(name + ": unknown generator " + sym);
        return gen(i);
    }
    Element word_el(const Word& w) const {
        Element e(this);
        e.add_term(w, Scalar::one());
        return e;
    }

    Degree word_degree(const Word& w) const {
        Degree d{0, 0};
        for (char ch : w) d = d + degrees[static_cast<size_t>(ch)];
        return d;
    }

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += ".";
            s += letters[static_cast<size_t>(w[i])];
        }
        return s;
    }
};

// common degree of an element, or nullopt when inhomogeneous / zero
inline std::optional<Degree> element_degree(const Element& e) {
    if (e.is_zero() || !e.alg) return std::nullopt;
    std::optional<Degree> d;
    for (auto& [w, c] : e.terms) {
        Degree dw = e.alg->word_degree(w);
        if (!d)
            d = dw;
        else if (*d != dw)
            return std::nullopt;
    }
    return d;
}

// split into Z^2-homogeneous components
inline std::map<Degree, Element> homogeneous_components(const Element& e) {
    std::map<Degree, Element> out;
    for (auto& [w, c] : e.terms) {
        Degree d = e.alg->word_degree(w);
        auto [it, fresh] = out.emplace(d, Element(e.alg));
        it->second.add_term(w, c);
    }
    return out;
}

// derived star: anti-multiplicative on words, coefficients fixed (q is real)
inline Element star(const Element& e) {
    if (!e.alg) return e;
    const Presentation& P = *e.alg;
    Element r(&P);
    for (auto& [w, c] : e.terms) {
        Element t = P.scalar(c);
        for (size_t i = w.size(); i-- > 0;) {
            const Element& im = P.star_images[static_cast<size_t>(w[i])];
            if (im.is_zero() && P.star_images.empty())
                throw error(P.name + ": star image missing");
            t = t * im;
        }
        r += t;
    }
    return r;
}

inline std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    const Presentation* P = e.alg;
    std::string s;
    for (auto& [w, c] : e.terms) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        bool composite = mag.find_first_of("+-", 1) != std::string::npos;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string ws = P ? P->word_str(w) : (w.empty() ? "1" : "<word>");
        if (w.empty())
            s += composite ? "(" + mag + ")" : mag;
        else if (mag == "1")
            s += ws;
        else
            s += (composite ? "(" + mag + ")" : mag) + "*" + ws;
    }
    return s;
}

inline std::string to_string(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string s;
    for (auto& [k, c] : t.terms) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        bool composite = mag.find_first_of("+-", 1) != std::string::npos;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string body;
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) body += " (x) ";
            body += t.legs[i] ? t.legs[i]->word_str(k[i]) : "1";
        }
        if (mag == "1" && !(k.size() == 1 && k[0].empty()))
            s += body;
        else
            s += (composite ? "(" + mag + ")" : mag) + "*" + body;
    }
    return s;
}

// enumerate words of the given exact length whose degree matches `want`
// (nullopt = no constraint), in ascending monomial order
inline void enumerate_words(const Presentation& P, size_t len, std::optional<Degree> want,
                            const std::function<void(const Word&)>& fn) {
    Word w;
    std::function<void(Degree)> rec = [&](Degree d) {
        if (w.size() == len) {
            if (!want || d == *want) fn(w);
            return;
        }
        for (size_t i = 0; i < P.letters.size(); ++i) {
            w.push_back(static_cast<char>(i));
            rec(d + P.degrees[i]);
            w.pop_back();
        }
    };
    rec(Degree{0, 0});
}

}  // namespace qhopf
