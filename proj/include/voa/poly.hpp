#pragma once

// Dense univariate polynomials over a field, plus gcd machinery.
// Over Q(eta) the gcd runs through a subresultant PRS on integer-primitive
// representatives to keep coefficient growth down; over other fields a
// monic Euclidean remainder sequence is used.

#include "voa/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace voa {

template <typename F>
struct FieldOps;  // zero/one/is_zero/neg per coefficient field

template <>
struct FieldOps<CycRat> {
    static CycRat zero() { return CycRat(); }
    static CycRat one() { return CycRat(1); }
    static bool is_zero(const CycRat& x) { return x.is_zero(); }
};

template <typename F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(F c) {
        if (!FieldOps<F>::is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(FieldOps<F>::one()); }
    // the variable itself
    static Poly x() {
        Poly p;
        p.c_ = {FieldOps<F>::zero(), FieldOps<F>::one()};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }

    const F& operator[](size_t i) const {
        static const F z = FieldOps<F>::zero();
        return i < c_.size() ? c_[i] : z;
    }
    void set_coeff(size_t i, F v) {
        if (i >= c_.size()) c_.resize(i + 1, FieldOps<F>::zero());
        c_[i] = std::move(v);
        trim();
    }

    const F& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of 0");
        return c_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldOps<F>::zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FieldOps<F>::zero());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }

    friend Poly operator*(const Poly& x, const Poly& y) {
        if (x.is_zero() || y.is_zero()) return Poly();
        Poly r;
        r.c_.assign(x.c_.size() + y.c_.size() - 1, FieldOps<F>::zero());
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (FieldOps<F>::is_zero(x.c_[i])) continue;
            for (size_t j = 0; j < y.c_.size(); ++j)
                r.c_[i + j] += x.c_[i] * y.c_[j];
        }
        r.trim();
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const F& s) {
        if (FieldOps<F>::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v = v * s;
        return *this;
    }
    friend Poly operator*(const F& s, Poly p) { return p.scale(s); }

    friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    // Euclidean division, exact over a field.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        q = Poly();
        r = a;
        F inv_lead = FieldOps<F>::one() / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            F coef = r.leading() * inv_lead;
            q.set_coeff(static_cast<size_t>(shift), coef);
            for (int i = 0; i <= b.degree(); ++i)
                r.c_[static_cast<size_t>(i + shift)] -= coef * b.c_[static_cast<size_t>(i)];
            r.trim();
        }
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
        return q;
    }

    Poly derivative() const {
        Poly r;
        for (size_t i = 1; i < c_.size(); ++i) {
            F v = c_[i];
            for (size_t j = 1; j < i; ++j) v += c_[i];  // v = i * c_[i]
            r.c_.push_back(v);
        }
        r.trim();
        return r;
    }

    F eval(const F& x0) const {
        F acc = FieldOps<F>::zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        F inv = FieldOps<F>::one() / leading();
        return r.scale(inv);
    }

    Poly shifted(int k) const {  // multiply by x^k
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), FieldOps<F>::zero());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
        return r;
    }

  private:
    std::vector<F> c_;
    void trim() {
        while (!c_.empty() && FieldOps<F>::is_zero(c_.back())) c_.pop_back();
    }
};

// ---------------------------------------------------------------------------
// gcd

// generic monic Euclid, fine for small nested fields
template <typename F>
Poly<F> poly_gcd_euclid(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> q, r;
        Poly<F>::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace detail {

// Clear rational denominators and divide out the integer content, so all
// coefficients lie in Z[eta] with trivial content over Z.
inline Poly<CycRat> z_primitive(const Poly<CycRat>& p) {
    if (p.is_zero()) return p;
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.a.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.b.get_den().get_mpz_t());
    }
    mpz_class content = 0;
    std::vector<CycRat> sc;
    sc.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        CycRat v(c.a * lcm, c.b * lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.a.get_num().get_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.b.get_num().get_mpz_t());
        sc.push_back(std::move(v));
    }
    if (content == 0) content = 1;
    Rat inv(1, content);
    inv.canonicalize();
    for (auto& v : sc) {
        v.a *= inv;
        v.b *= inv;
    }
    return Poly<CycRat>(std::move(sc));
}

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, stays in Z[eta]
inline Poly<CycRat> prem(const Poly<CycRat>& a, const Poly<CycRat>& b) {
    Poly<CycRat> r = a;
    int db = b.degree();
    const CycRat& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        CycRat lr = r.leading();
        Poly<CycRat> scaled = r;
        scaled.scale(lb);
        Poly<CycRat> sub = b.shifted(shift);
        sub.scale(lr);
        r = scaled - sub;
    }
    return r;
}

}  // namespace detail

// subresultant PRS over Q(eta); keeps intermediate coefficients small
inline Poly<CycRat> poly_gcd_subresultant(Poly<CycRat> a, Poly<CycRat> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = detail::z_primitive(a);
    b = detail::z_primitive(b);
    if (a.degree() < b.degree()) std::swap(a, b);

    CycRat g(1), h(1);
    while (true) {
        int delta = a.degree() - b.degree();
        Poly<CycRat> r = detail::prem(a, b);
        if (r.is_zero()) return detail::z_primitive(b).monic();
        if (r.degree() == 0) return Poly<CycRat>::one();
        // beta = -g * h^delta
        CycRat hd(1);
        for (int i = 0; i < delta; ++i) hd *= h;
        CycRat beta = -(g * hd);
        a = std::move(b);
        // exact division of every coefficient by beta
        {
            std::vector<CycRat> cc(r.coeffs().begin(), r.coeffs().end());
            CycRat ib = beta.inverse();
            for (auto& v : cc) v *= ib;
            b = Poly<CycRat>(std::move(cc));
        }
        g = a.leading();
        // h = g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            CycRat gd(1);
            for (int i = 0; i < delta; ++i) gd *= g;
            CycRat hprev(1);
            for (int i = 0; i < delta - 1; ++i) hprev *= h;
            h = gd / hprev;
        }
    }
}

template <typename F>
Poly<F> poly_gcd(const Poly<F>& a, const Poly<F>& b) {
    if constexpr (std::is_same_v<F, CycRat>)
        return poly_gcd_subresultant(a, b);
    else
        return poly_gcd_euclid(a, b);
}

// p / gcd(p, p'), the radical of p up to scalars
template <typename F>
Poly<F> poly_squarefree_part(const Poly<F>& p) {
    if (p.degree() <= 0) return p.monic();
    Poly<F> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return (p / g).monic();
}

}  // namespace voa
