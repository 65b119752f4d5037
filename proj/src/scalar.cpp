#include "voa/scalar.hpp"

#include "voa/formula.hpp"

#include <algorithm>
#include <sstream>

namespace voa {

namespace {

// prints one coefficient times c^i, with enough parentheses to re-parse
void print_term(std::ostream& os, const CycRat& coef, int power, bool first) {
    std::string cs = cyc_to_string(coef);
    bool negated = false;
    if (coef.b == 0 && coef.a < 0) {
        negated = true;
        cs = rat_to_string(-coef.a);
    }
    if (first) {
        if (negated) os << "-";
    } else {
        os << (negated ? "-" : "+");
    }
    bool coef_is_one = (!negated && coef.b == 0 && coef.a == 1) || (negated && cs == "1");
    bool needs_paren = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos ||
                       cs.find('h') != std::string::npos;
    if (power == 0) {
        if (needs_paren)
            os << "(" << cs << ")";
        else
            os << cs;
        return;
    }
    if (!coef_is_one) {
        if (needs_paren)
            os << "(" << cs << ")*";
        else
            os << cs << "*";
    }
    os << "c";
    if (power > 1) os << "^" << power;
}

}  // namespace

std::string cpoly_to_string(const CPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const CycRat& c = p[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        print_term(os, c, i, first);
        first = false;
    }
    return os.str();
}

std::string scalar_to_string(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string num = cpoly_to_string(s.num());
    if (s.is_polynomial()) {
        return num;
    }
    return "(" + num + ")/(" + cpoly_to_string(s.den()) + ")";
}

CycRat evaluate_at(const Scalar& s, const CycRat& c0) {
    CycRat d = s.den().eval(c0);
    if (d.is_zero()) {
        // name the vanishing factor: for rational points that is c - c0
        std::string f;
        if (c0.is_rational()) {
            f = "c";
            if (c0.a > 0)
                f += "-" + rat_to_string(c0.a);
            else if (c0.a < 0)
                f += "+" + rat_to_string(-c0.a);
        } else {
            f = "den(" + cpoly_to_string(s.den()) + ")";
        }
        throw PoleAtPoint(f);
    }
    return s.num().eval(c0) / d;
}

CPoly integer_primitive(const CPoly& p) {
    if (p.is_zero()) return p;
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.a.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.b.get_den().get_mpz_t());
    }
    mpz_class content = 0;
    std::vector<CycRat> sc;
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
    CPoly out(std::move(sc));
    const CycRat& lead = out.leading();
    if (lead.a < 0 || (lead.a == 0 && lead.b < 0)) {
        std::vector<CycRat> neg;
        for (const auto& c : out.coeffs()) neg.push_back(-c);
        out = CPoly(std::move(neg));
    }
    return out;
}

namespace {

// rational-coefficient part splitter: p = A + eta * B
void split_eta(const CPoly& p, std::vector<Rat>& a, std::vector<Rat>& b) {
    a.clear();
    b.clear();
    for (const auto& c : p.coeffs()) {
        a.push_back(c.a);
        b.push_back(c.b);
    }
}

CPoly from_rat_vec(const std::vector<Rat>& v) {
    std::vector<CycRat> c;
    c.reserve(v.size());
    for (const auto& r : v) c.emplace_back(r);
    return CPoly(std::move(c));
}

std::vector<mpz_class> divisors(const mpz_class& n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

RootReport rational_roots(const CPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    RootReport report;

    // a rational root must kill both eta-components
    std::vector<Rat> av, bv;
    split_eta(p, av, bv);
    CPoly a = from_rat_vec(av), b = from_rat_vec(bv);
    CPoly g = b.is_zero() ? a : (a.is_zero() ? b : poly_gcd(a, b));
    if (g.degree() <= 0) return report;

    g = integer_primitive(g);

    // strip roots at zero
    size_t zshift = 0;
    while (g[zshift].is_zero()) ++zshift;
    if (zshift > 0) {
        report.roots.emplace_back(0);
        std::vector<CycRat> shifted(g.coeffs().begin() + static_cast<long>(zshift),
                                    g.coeffs().end());
        g = CPoly(std::move(shifted));
    }

    // rational root theorem on the squarefree part
    CPoly sq = integer_primitive(poly_squarefree_part(g));
    if (sq.degree() >= 1) {
        mpz_class a0 = sq[0].a.get_num();
        mpz_class an = sq.leading().a.get_num();
        for (const auto& dn : divisors(a0)) {
            for (const auto& dd : divisors(an)) {
                for (int sign = 0; sign < 2; ++sign) {
                    Rat cand(sign ? -dn : dn, dd);
                    cand.canonicalize();
                    if (sq.eval(CycRat(cand)).is_zero() && p.eval(CycRat(cand)).is_zero()) {
                        if (std::find(report.roots.begin(), report.roots.end(), cand) ==
                            report.roots.end())
                            report.roots.push_back(cand);
                    }
                }
            }
        }
    }
    std::sort(report.roots.begin(), report.roots.end());

    // divide the found linear factors out of the squarefree part and report
    // what remains
    CPoly rem = sq;
    for (const auto& r : report.roots) {
        if (r == 0) continue;
        std::vector<CycRat> lin = {CycRat(-r), CycRat(1)};
        CPoly factor{std::move(lin)};
        while (rem.degree() >= 1 && rem.eval(CycRat(r)).is_zero()) {
            CPoly q, rr;
            CPoly::divmod(rem, factor, q, rr);
            if (!rr.is_zero()) break;
            rem = q;
        }
    }
    if (rem.degree() >= 2) {
        RootReport::Factor f;
        f.poly = integer_primitive(rem);
        // degree 2 or 3 with no rational roots is irreducible over Q
        f.certified_irreducible = rem.degree() <= 3;
        report.other_factors.push_back(std::move(f));
    }
    return report;
}

Scalar parse_scalar(const std::string& text) {
    Formula f = Formula::parse(text);
    return f.eval("c", {});
}

}  // namespace voa
