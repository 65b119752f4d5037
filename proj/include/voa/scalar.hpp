#pragma once

// The coefficient field Q(eta)(c): rational functions in the formal central
// charge over the cyclotomic rationals, plus root extraction and the textual
// form used by the CLI (`c` for the charge, `h` for eta).

#include "voa/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace voa {

using CPoly = Poly<CycRat>;
using Scalar = RatFunc<CycRat>;

struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

struct PoleAtPoint : std::domain_error {
    std::string factor;
    explicit PoleAtPoint(std::string f)
        : std::domain_error("pole at evaluation point, vanishing factor " + f),
          factor(std::move(f)) {}
};

inline Scalar scalar_c() { return Scalar::x(); }
inline Scalar scalar_from(long v) { return Scalar(v); }
inline Scalar scalar_from(const Rat& v) { return Scalar(CycRat(v)); }

// canonical representative of num/den; normalize(p*g, q*g) == normalize(p, q)
inline Scalar normalize(const CPoly& num, const CPoly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    return Scalar(num, den);
}

std::string cpoly_to_string(const CPoly& p);
std::string scalar_to_string(const Scalar& s);

// exact value at c = c0; throws PoleAtPoint naming the vanishing factor
CycRat evaluate_at(const Scalar& s, const CycRat& c0);

struct RootReport {
    std::vector<Rat> roots;  // the complete set of rational roots, sorted
    // non-linear factors carrying the remaining (irrational) roots,
    // integer-primitive; `certified` marks factors proven irreducible over Q
    struct Factor {
        CPoly poly;
        bool certified_irreducible;
    };
    std::vector<Factor> other_factors;
};

// all rational roots of p (eta-components of a root must vanish), each
// verified by exact evaluation
RootReport rational_roots(const CPoly& p);

// parse the textual scalar form, e.g. "(5*c^2+33*c-44)/(7*(5*c+11)*(2*c-1))"
Scalar parse_scalar(const std::string& text);

// integer-primitive copy: clears denominators, divides by integer content,
// flips sign so the leading rational part is positive
CPoly integer_primitive(const CPoly& p);

}  // namespace voa
