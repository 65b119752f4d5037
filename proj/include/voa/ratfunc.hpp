#pragma once

// Rational functions num/den over a coefficient field, kept in the canonical
// form gcd(num, den) = 1 with den monic. Nests: RatFunc<RatFunc<...>> is
// again a field, which the curve-intersection code relies on.

#include "voa/poly.hpp"

#include <stdexcept>
#include <utility>

namespace voa {

template <typename F>
class RatFunc {
  public:
    RatFunc() : num_(), den_(Poly<F>::one()) {}
    RatFunc(long v) : num_(Poly<F>(F(v))), den_(Poly<F>::one()) {}
    explicit RatFunc(F v) : num_(Poly<F>(std::move(v))), den_(Poly<F>::one()) {}
    explicit RatFunc(Poly<F> p) : num_(std::move(p)), den_(Poly<F>::one()) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce();
    }

    static RatFunc x() { return RatFunc(Poly<F>::x()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        if (x.is_zero() || y.is_zero()) return RatFunc();
        // cross-reduce before multiplying
        Poly<F> g1 = poly_gcd(x.num_, y.den_);
        Poly<F> g2 = poly_gcd(y.num_, x.den_);
        Poly<F> n = (x.num_ / g1) * (y.num_ / g2);
        Poly<F> d = (x.den_ / g2) * (y.den_ / g1);
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.normalize_leading();
        return r;
    }
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
        if (y.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return x * y.inverse();
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_leading();
        return r;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

    // substitute the variable by a field value; throws on poles
    F eval(const F& x0) const {
        F d = den_.eval(x0);
        if (FieldOps<F>::is_zero(d)) throw std::domain_error("RatFunc: pole at evaluation point");
        return num_.eval(x0) / d;
    }

  private:
    Poly<F> num_;
    Poly<F> den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        Poly<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        normalize_leading();
    }
    void normalize_leading() {
        F lead = den_.leading();
        if (!(lead == FieldOps<F>::one())) {
            F inv = FieldOps<F>::one() / lead;
            num_.scale(inv);
            den_.scale(inv);
        }
    }
};

template <typename F>
struct FieldOps<RatFunc<F>> {
    static RatFunc<F> zero() { return RatFunc<F>(); }
    static RatFunc<F> one() { return RatFunc<F>(1); }
    static bool is_zero(const RatFunc<F>& x) { return x.is_zero(); }
};

}  // namespace voa
