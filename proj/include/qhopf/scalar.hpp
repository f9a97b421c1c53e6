#pragma once

// Exact arithmetic in Q(q): reduced fractions of integer-coefficient
// polynomials in the deformation parameter q.  Values are immutable and
// canonical, so equality is structural equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhopf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_error : error {
    using error::error;
};
struct cap_exceeded : error {
    using error::error;
};

// ---------------------------------------------------------------------------
// IntPoly: Z[q], coefficients indexed by exponent, trailing coefficient nonzero
// ---------------------------------------------------------------------------

struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(Int k) {
        if (k != 0) c.push_back(std::move(k));
    }
    explicit IntPoly(long k) : IntPoly(Int(k)) {}

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }
    // k * q^e
    static IntPoly monomial(Int k, int e) {
        IntPoly p;
        if (k != 0) {
            p.c.assign(static_cast<size_t>(e) + 1, Int(0));
            p.c[static_cast<size_t>(e)] = std::move(k);
        }
        return p;
    }
    static IntPoly q() { return monomial(Int(1), 1); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const { return c.back(); }  // requires nonzero

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        IntPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    Int content() const {
        Int g = 0;
        for (const auto& x : c) {
            g = boost::multiprecision::gcd(g, x);
            if (g == 1) break;
        }
        return g;
    }

    // exact division, throws if not divisible
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) throw error("IntPoly: division by zero polynomial");
        if (a.is_zero()) return IntPoly();
        if (a.degree() < b.degree()) throw error("IntPoly: inexact division");
        IntPoly rem = a;
        IntPoly quo;
        quo.c.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            Int qc = rem.lc() / b.lc();
            if (qc * b.lc() != rem.lc()) throw error("IntPoly: inexact division");
            int sh = rem.degree() - b.degree();
            quo.c[static_cast<size_t>(sh)] = qc;
            for (size_t i = 0; i < b.c.size(); ++i)
                rem.c[i + static_cast<size_t>(sh)] -= qc * b.c[i];
            rem.trim();
        }
        if (!rem.is_zero()) throw error("IntPoly: inexact division");
        quo.trim();
        return quo;
    }

    // primitive PRS gcd; result has positive leading coefficient
    static IntPoly gcd(IntPoly a, IntPoly b) {
        if (a.is_zero()) return normalize_sign(b);
        if (b.is_zero()) return normalize_sign(a);
        Int ca = a.content(), cb = b.content();
        Int cg = boost::multiprecision::gcd(ca, cb);
        a = a.div_content(ca);
        b = b.div_content(cb);
        while (!b.is_zero()) {
            IntPoly r = pseudo_rem(a, b);
            a = std::move(b);
            b = r.div_content(r.content());
        }
        a = normalize_sign(a);
        for (auto& x : a.c) x *= cg;
        return a;
    }

    IntPoly div_content(const Int& k) const {
        if (k == 0 || is_zero()) return *this;
        IntPoly r = *this;
        for (auto& x : r.c) x /= k;
        return r;
    }

    static IntPoly normalize_sign(IntPoly p) {
        if (!p.is_zero() && p.lc() < 0)
            for (auto& x : p.c) x = -x;
        return p;
    }

    static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
        int d = a.degree() - b.degree();
        if (d < 0) return a;
        for (int k = 0; k <= d; ++k) {
            if (a.is_zero() || a.degree() < b.degree()) break;
            Int la = a.lc();
            int sh = a.degree() - b.degree();
            for (auto& x : a.c) x *= b.lc();
            for (size_t i = 0; i < b.c.size(); ++i)
                a.c[i + static_cast<size_t>(sh)] -= la * b.c[i];
            a.trim();
        }
        return a;
    }

    Rat eval(const Rat& q0) const {
        Rat v = 0;
        for (size_t i = c.size(); i-- > 0;) v = v * q0 + Rat(c[i]);
        return v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            const Int& k = c[i];
            if (k == 0) continue;
            Int a = k < 0 ? Int(-k) : k;
            if (s.empty())
                s += (k < 0 ? "-" : "");
            else
                s += (k < 0 ? "-" : "+");
            bool unit_coeff = (a == 1) && i > 0;
            if (!unit_coeff) s += a.str();
            if (i > 0) {
                if (!unit_coeff) s += "*";
                s += "q";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Scalar: reduced num/den in Q(q); den nonzero with positive leading coeff
// ---------------------------------------------------------------------------

class Scalar {
public:
    Scalar() : num_(), den_(IntPoly::one()) {}
    Scalar(long k) : num_(IntPoly(Int(k))), den_(IntPoly::one()) {}
    Scalar(Int k) : num_(IntPoly(std::move(k))), den_(IntPoly::one()) {}
    Scalar(IntPoly n, IntPoly d) { assign(std::move(n), std::move(d)); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar q() { return Scalar(IntPoly::q(), IntPoly::one()); }
    static Scalar q_pow(int e) {
        if (e >= 0) return Scalar(IntPoly::monomial(Int(1), e), IntPoly::one());
        return Scalar(IntPoly::one(), IntPoly::monomial(Int(1), -e));
    }
    // (-q)^e, e may be negative
    static Scalar neg_q_pow(int e) {
        Scalar s = q_pow(e);
        if (e & 1) s = -s;
        return s;
    }
    static Scalar of_rat(const Rat& r) {
        return Scalar(IntPoly(Int(boost::multiprecision::numerator(r))),
                      IntPoly(Int(boost::multiprecision::denominator(r))));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw error("Scalar: division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(int e) const {
        if (e == 0) return one();
        Scalar base = *this;
        if (e < 0) {
            if (is_zero()) throw error("Scalar: negative power of zero");
            base = one() / base;
            e = -e;
        }
        Scalar r = one();
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // exact evaluation at a rational q0; throws pole_error on vanishing denominator
    Rat specialize(const Rat& q0) const {
        Rat d = den_.eval(q0);
        if (d == 0) throw pole_error("Scalar: pole at q0 (zero denominator)");
        return num_.eval(q0) / d;
    }

    std::string str() const {
        if (den_ == IntPoly::one()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        auto wrap = [](const std::string& s) {
            bool composite = s.find_first_of("+-", 1) != std::string::npos;
            if (!s.empty() && s[0] == '-') composite = true;
            return composite ? "(" + s + ")" : s;
        };
        return wrap(n) + "/" + wrap(d);
    }

private:
    IntPoly num_, den_;

    void assign(IntPoly n, IntPoly d) {
        if (d.is_zero()) throw error("Scalar: zero denominator");
        if (n.is_zero()) {
            num_ = IntPoly();
            den_ = IntPoly::one();
            return;
        }
        IntPoly g = IntPoly::gcd(n, d);
        n = IntPoly::div_exact(n, g);
        d = IntPoly::div_exact(d, g);
        if (d.lc() < 0) {
            n = -n;
            d = -d;
        }
        num_ = std::move(n);
        den_ = std::move(d);
    }
};

inline Scalar operator*(long k, const Scalar& s) { return Scalar(k) * s; }

}  // namespace qhopf
