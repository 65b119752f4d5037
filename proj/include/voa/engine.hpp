#pragma once

// State model and product calculus for tensor powers of the universal
// Virasoro vertex algebra. States are finite linear combinations of PBW
// monomials in creation modes L_site(-level), level >= 2, over a coefficient
// field K; K is either Scalar (formal central charge) or CycRat (fixed
// charge).
//
// Mode actions straighten through the commutator
//   [L(m), L(n)] = (m - n) L(m+n) + c/12 (m^3 - m) delta_{m+n,0}
// and k-th products come from the generator action plus the iterate formula
// for u_(p) v with p <= -1.

#include "voa/scalar.hpp"

#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace voa {

template <typename K>
struct KTraits;

template <>
struct KTraits<CycRat> {
    static CycRat from_rat(const Rat& r) { return CycRat(r); }
    static std::string to_string(const CycRat& v) { return cyc_to_string(v); }
};

template <>
struct KTraits<Scalar> {
    static Scalar from_rat(const Rat& r) { return Scalar(CycRat(r)); }
    static std::string to_string(const Scalar& v) { return scalar_to_string(v); }
};

struct ModeFactor {
    int site;   // 1-based tensor site
    int level;  // creation level, canonical monomials have level >= 2

    friend bool operator==(const ModeFactor& x, const ModeFactor& y) {
        return x.site == y.site && x.level == y.level;
    }
    // site ascending, level descending within a site
    friend bool operator<(const ModeFactor& x, const ModeFactor& y) {
        if (x.site != y.site) return x.site < y.site;
        return x.level > y.level;
    }
};

struct Monomial {
    std::vector<ModeFactor> f;

    int weight() const {
        int w = 0;
        for (const auto& m : f) w += m.level;
        return w;
    }
    bool is_vacuum() const { return f.empty(); }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.f == y.f; }
    friend bool operator<(const Monomial& x, const Monomial& y) {
        return std::lexicographical_compare(x.f.begin(), x.f.end(), y.f.begin(), y.f.end());
    }
};

template <typename K>
struct State {
    int n = 1;  // tensor rank
    std::map<Monomial, K> terms;

    State() = default;
    explicit State(int rank) : n(rank) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const Monomial& m, const K& coeff) {
        if (FieldOps<K>::is_zero(coeff)) return;
        auto [it, inserted] = terms.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (FieldOps<K>::is_zero(it->second)) terms.erase(it);
        }
    }

    State& operator+=(const State& o) {
        assert(n == o.n);
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    State& operator-=(const State& o) {
        assert(n == o.n);
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend State operator+(State x, const State& y) { return x += y; }
    friend State operator-(State x, const State& y) { return x -= y; }

    State& scale(const K& s) {
        if (FieldOps<K>::is_zero(s)) {
            terms.clear();
            return *this;
        }
        for (auto& [m, c] : terms) c = c * s;
        return *this;
    }
    friend State operator*(const K& s, State v) { return v.scale(s); }

    friend bool operator==(const State& x, const State& y) {
        return x.n == y.n && x.terms == y.terms;
    }

    // -1 for the zero state, otherwise defined only on homogeneous states
    int weight() const {
        if (terms.empty()) return -1;
        int w = terms.begin()->first.weight();
        for (const auto& [m, c] : terms)
            if (m.weight() != w) throw std::domain_error("state is not weight-homogeneous");
        return w;
    }
    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int w = terms.begin()->first.weight();
        for (const auto& [m, c] : terms)
            if (m.weight() != w) return false;
        return true;
    }
    std::map<int, State> graded_parts() const {
        std::map<int, State> parts;
        for (const auto& [m, c] : terms) {
            auto& p = parts[m.weight()];
            p.n = n;
            p.add_term(m, c);
        }
        return parts;
    }
};

struct RankMismatch : std::domain_error {
    RankMismatch(const std::string& what) : std::domain_error(what) {}
};

template <typename K>
class Engine {
  public:
    Engine(int rank, K central_charge, size_t memo_byte_cap = size_t(1) << 31)
        : n_(rank), c_(std::move(central_charge)), memo_cap_(memo_byte_cap) {
        if (rank < 1) throw std::domain_error("rank must be positive");
    }

    int rank() const { return n_; }
    const K& central() const { return c_; }

    State<K> zero() const { return State<K>(n_); }
    State<K> vacuum() const {
        State<K> v(n_);
        v.add_term(Monomial{}, FieldOps<K>::one());
        return v;
    }
    // L_site(-level) applied to the vacuum
    State<K> generator(int site, int level = 2) const {
        check_site(site);
        State<K> v(n_);
        v.add_term(Monomial{{ModeFactor{site, level}}}, FieldOps<K>::one());
        return v;
    }
    // total conformal vector
    State<K> omega() const {
        State<K> v(n_);
        for (int s = 1; s <= n_; ++s) v.add_term(Monomial{{ModeFactor{s, 2}}}, FieldOps<K>::one());
        return v;
    }

    // L_site(m) . v, straightened to canonical PBW form
    State<K> apply_mode(const State<K>& v, int site, int m) {
        check_site(site);
        if (v.n != n_) throw RankMismatch("apply_mode: rank mismatch");
        State<K> out(n_);
        for (const auto& [mono, coeff] : v.terms) {
            Word w = site_word(mono, site);
            const auto& acted = act_single(m, w);
            for (const auto& [w2, k2] : acted) {
                Monomial m2 = replace_site_word(mono, site, w2);
                out.add_term(m2, coeff * k2);
            }
        }
        return out;
    }

    // sum over sites of coef[site-1] * L_site(m) . v
    State<K> apply_combo_mode(const State<K>& v, const std::vector<K>& coefs, int m) {
        State<K> out(n_);
        for (int s = 1; s <= n_; ++s) {
            if (FieldOps<K>::is_zero(coefs[size_t(s - 1)])) continue;
            State<K> part = apply_mode(v, s, m);
            out += part.scale(coefs[size_t(s - 1)]);
        }
        return out;
    }

    State<K> nth_product(const State<K>& a, int k, const State<K>& b) {
        if (a.n != n_ || b.n != n_) throw RankMismatch("nth_product: rank mismatch");
        State<K> out(n_);
        for (const auto& [am, ac] : a.terms) {
            for (const auto& [bm, bc] : b.terms) {
                const State<K>& p = prod(am, k, bm);
                for (const auto& [m, c] : p.terms) out.add_term(m, ac * bc * c);
            }
        }
        return out;
    }

    State<K> normal_order(const State<K>& a, const State<K>& b) {
        return nth_product(a, -1, b);
    }

    // translation operator T(v) = v_(-2) vacuum
    State<K> translate(const State<K>& v) {
        if (v.n != n_) throw RankMismatch("translate: rank mismatch");
        State<K> out(n_);
        for (const auto& [mono, coeff] : v.terms) {
            State<K> t = translate_monomial(mono);
            out += t.scale(coeff);
        }
        return out;
    }

    State<K> translate_pow(State<K> v, int k) {
        for (int i = 0; i < k; ++i) v = translate(v);
        return v;
    }

    // all k-th products for k >= 0, omitting zeros; finite by the weight bound
    std::map<int, State<K>> singular_part(const State<K>& a, const State<K>& b) {
        int wa = a.weight(), wb = b.weight();
        std::map<int, State<K>> out;
        if (wa < 0 || wb < 0) return out;
        for (int k = 0; k < wa + wb; ++k) {
            State<K> p = nth_product(a, k, b);
            if (!p.is_zero()) out.emplace(k, std::move(p));
        }
        return out;
    }

    // canonical monomials of the given weight, deterministically ordered
    std::vector<Monomial> basis(int w) const {
        std::vector<Monomial> out;
        Monomial cur;
        basis_rec(1, w, cur, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    size_t memo_bytes() const { return memo_bytes_; }

  private:
    int n_;
    K c_;
    size_t memo_cap_;
    size_t memo_bytes_ = 0;

    // single-site straightening word: levels in non-increasing order
    using Word = std::vector<int>;
    using WordCombo = std::vector<std::pair<Word, K>>;

    std::map<std::pair<int, Word>, WordCombo> act_memo_;
    std::map<std::tuple<Monomial, int, Monomial>, State<K>> prod_memo_;

    void check_site(int site) const {
        if (site < 1 || site > n_)
            throw RankMismatch("site out of range for rank " + std::to_string(n_));
    }

    static Word site_word(const Monomial& m, int site) {
        Word w;
        for (const auto& fc : m.f)
            if (fc.site == site) w.push_back(fc.level);
        return w;
    }

    static Monomial replace_site_word(const Monomial& m, int site, const Word& w) {
        Monomial r;
        r.f.reserve(m.f.size() + w.size());
        bool placed = false;
        for (const auto& fc : m.f) {
            if (fc.site == site) continue;
            if (!placed && fc.site > site) {
                for (int lv : w) r.f.push_back(ModeFactor{site, lv});
                placed = true;
            }
            r.f.push_back(fc);
        }
        if (!placed)
            for (int lv : w) r.f.push_back(ModeFactor{site, lv});
        return r;
    }

    static void accumulate(WordCombo& acc, const Word& w, const K& c) {
        if (FieldOps<K>::is_zero(c)) return;
        for (auto& [aw, ac] : acc) {
            if (aw == w) {
                ac += c;
                return;
            }
        }
        acc.emplace_back(w, c);
    }

    // L(m) acting on a straight word of creation levels (site-independent)
    const WordCombo& act_single(int m, const Word& w) {
        auto key = std::make_pair(m, w);
        auto it = act_memo_.find(key);
        if (it != act_memo_.end()) return it->second;

        WordCombo result;
        if (w.empty()) {
            if (m <= -2) {
                result.emplace_back(Word{-m}, FieldOps<K>::one());
            }
            // L(m) vacuum = 0 for m >= -1
        } else if (m <= -2 && -m >= w.front()) {
            Word w2;
            w2.reserve(w.size() + 1);
            w2.push_back(-m);
            w2.insert(w2.end(), w.begin(), w.end());
            result.emplace_back(std::move(w2), FieldOps<K>::one());
        } else {
            int l = w.front();
            Word rest(w.begin() + 1, w.end());
            // L(m) L(-l) = L(-l) L(m) + (m + l) L(m - l) + c/12 (m^3 - m) delta_{m,l}
            for (const auto& [w1, c1] : act_single(m, rest)) {
                for (const auto& [w2, c2] : act_single(-l, w1)) {
                    accumulate(result, w2, c1 * c2);
                }
            }
            if (m + l != 0) {
                K f = KTraits<K>::from_rat(Rat(m + l));
                for (const auto& [w1, c1] : act_single(m - l, rest))
                    accumulate(result, w1, f * c1);
            }
            if (m == l) {
                Rat central(static_cast<long>(m) * m * m - m, 12);
                central.canonicalize();
                K f = c_ * KTraits<K>::from_rat(central);
                accumulate(result, rest, f);
            }
        }
        // clean zero entries for stable memo contents
        WordCombo cleaned;
        for (auto& [wc, cc] : result)
            if (!FieldOps<K>::is_zero(cc)) cleaned.emplace_back(std::move(wc), std::move(cc));

        auto [ins, ok] = act_memo_.emplace(std::move(key), std::move(cleaned));
        return ins->second;
    }

    State<K> translate_monomial(const Monomial& mono) {
        // T is a derivation sending L_s(-l) to (l-1) L_s(-l-1)
        State<K> out(n_);
        for (size_t i = 0; i < mono.f.size(); ++i) {
            // apply the raised mode chain left of i, then the raised factor,
            // then the remainder; go through apply_mode for straightening
            State<K> v(n_);
            Monomial tail;
            tail.f.assign(mono.f.begin() + static_cast<long>(i) + 1, mono.f.end());
            v.add_term(tail, KTraits<K>::from_rat(Rat(mono.f[i].level - 1)));
            v = apply_mode(v, mono.f[i].site, -(mono.f[i].level + 1));
            for (size_t j = i; j-- > 0;)
                v = apply_mode(v, mono.f[j].site, -mono.f[j].level);
            out += v;
        }
        return out;
    }

    // k-th product of canonical monomials, memoized
    const State<K>& prod(const Monomial& a, int k, const Monomial& b) {
        auto key = std::make_tuple(a, k, b);
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end()) return it->second;

        State<K> result(n_);
        if (a.is_vacuum()) {
            if (k == -1) result.add_term(b, FieldOps<K>::one());
        } else if (a.f.size() == 1) {
            // L_s(-l) vac = T^{l-2} omega_s / (l-2)!, and (T^j u)_(k) =
            // (-1)^j k (k-1) ... (k-j+1) u_(k-j)
            int s = a.f[0].site, l = a.f[0].level;
            Rat coef = (l % 2 == 0) ? 1 : -1;
            for (int i = 0; i <= l - 3; ++i) {
                coef *= Rat(k - i);
                coef /= Rat(i + 1);
            }
            coef.canonicalize();
            if (coef != 0) {
                State<K> bs(n_);
                bs.add_term(b, KTraits<K>::from_rat(coef));
                result = apply_mode(bs, s, k - l + 1);
            }
        } else {
            // a = u_(p) rest with u = omega_s, p = -l + 1; iterate formula
            int s = a.f[0].site, l = a.f[0].level;
            int p = -l + 1;
            Monomial rest;
            rest.f.assign(a.f.begin() + 1, a.f.end());
            int wr = rest.weight(), wb = b.weight();

            Rat binom = 1;  // C(p, j)
            for (int j = 0;; ++j) {
                if (j > 0) {
                    binom *= Rat(p - (j - 1));
                    binom /= Rat(j);
                }
                bool live = false;
                // u_(p-j) (rest_(k+j) b)
                if (k + j < wr + wb) {
                    live = true;
                    const State<K>& inner = prod(rest, k + j, b);
                    if (!inner.is_zero()) {
                        State<K> t = apply_mode(inner, s, -l - j);
                        Rat f = (j % 2 == 0) ? binom : -binom;
                        t.scale(KTraits<K>::from_rat(f));
                        result += t;
                    }
                }
                // - (-1)^p rest_(p+k-j) (u_(j) b), u_(j) = L_s(j-1)
                if (j - 1 <= wb) {
                    live = true;
                    State<K> bs(n_);
                    bs.add_term(b, FieldOps<K>::one());
                    State<K> ub = apply_mode(bs, s, j - 1);
                    if (!ub.is_zero()) {
                        State<K> t(n_);
                        for (const auto& [m2, c2] : ub.terms) {
                            const State<K>& q = prod(rest, p + k - j, m2);
                            for (const auto& [m3, c3] : q.terms) t.add_term(m3, c2 * c3);
                        }
                        Rat f = (j % 2 == 0) ? binom : -binom;
                        // total sign: (-1)^j C(p,j) * (-(-1)^p), (-1)^p = (-1)^{l+1}
                        if (l % 2 != 0) f = -f;
                        t.scale(KTraits<K>::from_rat(f));
                        result += t;
                    }
                }
                if (!live) break;
            }
        }

        if (memo_bytes_ < memo_cap_) {
            memo_bytes_ += 64 + 48 * result.terms.size();
            auto [ins, ok] = prod_memo_.emplace(std::move(key), std::move(result));
            return ins->second;
        }
        static thread_local State<K> overflow;
        overflow = std::move(result);
        return overflow;
    }

    void basis_rec(int site, int remaining, Monomial& cur, std::vector<Monomial>& out) const {
        if (site > n_) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        // partitions of some v <= remaining into parts >= 2, levels descending
        partition_rec(site, remaining, remaining, cur, out);
    }
    void partition_rec(int site, int remaining, int max_part, Monomial& cur,
                       std::vector<Monomial>& out) const {
        basis_rec(site + 1, remaining, cur, out);  // close this site's block
        for (int part = std::min(remaining, max_part); part >= 2; --part) {
            cur.f.push_back(ModeFactor{site, part});
            partition_rec(site, remaining - part, part, cur, out);
            cur.f.pop_back();
        }
    }
};

}  // namespace voa
