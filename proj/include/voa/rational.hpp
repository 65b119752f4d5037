#pragma once

// Arithmetic in the cyclotomic field Q(eta), eta^2 + eta + 1 = 0.
// Every element is a unique pair a + b*eta with arbitrary-precision
// rational a, b.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace voa {

using Rat = mpq_class;

inline Rat rat_from(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

struct CycRat {
    Rat a;  // rational part
    Rat b;  // eta coefficient

    CycRat() : a(0), b(0) {}
    CycRat(long v) : a(v), b(0) {}
    CycRat(const Rat& v) : a(v), b(0) {}
    CycRat(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}

    static CycRat eta() { return CycRat(Rat(0), Rat(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    CycRat operator-() const { return CycRat(-a, -b); }

    CycRat& operator+=(const CycRat& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    CycRat& operator-=(const CycRat& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    // (a1 + b1 eta)(a2 + b2 eta), eta^2 = -1 - eta
    CycRat& operator*=(const CycRat& o) {
        Rat na = a * o.a - b * o.b;
        Rat nb = a * o.b + b * o.a - b * o.b;
        a = na;
        b = nb;
        return *this;
    }

    // field norm N(a + b eta) = a^2 - a b + b^2, zero iff the element is zero
    Rat norm() const { return a * a - a * b + b * b; }

    CycRat inverse() const {
        if (is_zero()) throw std::domain_error("CycRat: division by zero");
        Rat n = norm();
        // conjugate is (a - b) - b eta
        return CycRat((a - b) / n, -b / n);
    }

    CycRat& operator/=(const CycRat& o) { return *this *= o.inverse(); }

    friend CycRat operator+(CycRat x, const CycRat& y) { return x += y; }
    friend CycRat operator-(CycRat x, const CycRat& y) { return x -= y; }
    friend CycRat operator*(CycRat x, const CycRat& y) { return x *= y; }
    friend CycRat operator/(CycRat x, const CycRat& y) { return x /= y; }
    friend bool operator==(const CycRat& x, const CycRat& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const CycRat& x, const CycRat& y) { return !(x == y); }
};

// total order (for deterministic containers only, no algebraic meaning)
inline bool cyc_less(const CycRat& x, const CycRat& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

inline std::string cyc_to_string(const CycRat& x) {
    if (x.b == 0) return rat_to_string(x.a);
    std::string s;
    if (x.a != 0) {
        s += rat_to_string(x.a);
        s += (x.b > 0) ? "+" : "-";
    } else if (x.b < 0) {
        s += "-";
    }
    Rat ab = abs(x.b);
    if (ab != 1) {
        s += rat_to_string(ab);
        s += "*";
    }
    s += "h";
    return s;
}

// exact integer square root test; returns root when n is a perfect square
inline std::optional<mpz_class> exact_isqrt(const mpz_class& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// exact square root of a rational, if it exists
inline std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_isqrt(q.get_num());
    if (!n) return std::nullopt;
    auto d = exact_isqrt(q.get_den());
    if (!d) return std::nullopt;
    Rat r(*n, *d);
    r.canonicalize();
    return r;
}

}  // namespace voa
