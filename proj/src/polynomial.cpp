#include "jackfock/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jackfock {

namespace {

constexpr const char* kNames[kNumSymbols] = {"b", "u", "v", "r"};

void sort_and_merge(std::vector<Term>& t) {
    std::sort(t.begin(), t.end(),
              [](const Term& x, const Term& y) { return x.mono > y.mono; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        mpz_class c = t[i].coef;
        while (j < t.size() && t[j].mono == t[i].mono) c += t[j++].coef;
        if (c != 0) {
            t[out].mono = t[i].mono;
            t[out].coef = std::move(c);
            ++out;
        }
        i = j;
    }
    t.resize(out);
}

// Merge b*sign into a (both sorted).
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back(subtract ? Term{b[j].mono, -b[j].coef} : b[j]);
            ++j;
        } else {
            mpz_class c = subtract ? mpz_class(a[i].coef - b[j].coef) : mpz_class(a[i].coef + b[j].coef);
            if (c != 0) out.push_back(Term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

Polynomial normalize_sign(Polynomial p) {
    if (!p.is_zero() && sgn(p.leading().coef) < 0) return -p;
    return p;
}

Monomial monomial_gcd(const Polynomial& p) {
    std::array<unsigned, kNumSymbols> e{};
    for (int i = 0; i < kNumSymbols; ++i) e[i] = p.min_degree(static_cast<Symbol>(i));
    return Monomial::from_exponents(e);
}

Polynomial content_in(const Polynomial& p, Symbol x);

Polynomial primitive_part_in(const Polynomial& p, Symbol x) {
    Polynomial c = content_in(p, x);
    if (c.is_one()) return p;
    return divide_exact(p, c);
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, Symbol x) {
    const unsigned n = b.degree(x);
    const Polynomial lcb = b.coefficients_in(x)[n];
    while (!r.is_zero()) {
        const unsigned d = r.degree(x);
        if (d < n) break;
        const Polynomial lcr = r.coefficients_in(x)[d];
        r = lcb * r - (lcr * b).times_monomial(Monomial::of(x, d - n));
    }
    return r;
}

// gcd of two polynomials that are primitive with respect to x and both
// involve x.
Polynomial primitive_prs(Polynomial a, Polynomial b, Symbol x) {
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    while (true) {
        Polynomial r = pseudo_remainder(a, b, x);
        if (r.is_zero()) return b;
        if (r.degree(x) == 0) return Polynomial(1);
        a = std::move(b);
        b = primitive_part_in(r, x);
    }
}

Polynomial content_in(const Polynomial& p, Symbol x) {
    auto coeffs = p.coefficients_in(x);
    Polynomial g;
    // Start from the sparsest coefficient; the gcd shrinks quickly.
    std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& s, const Polynomial& t) {
        return s.terms().size() < t.terms().size();
    });
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

mpz_class max_norm(const Polynomial& p) {
    mpz_class m = 0;
    for (const auto& t : p.terms())
        if (abs(t.coef) > m) m = abs(t.coef);
    return m;
}

// p(x = xi) as a polynomial in the remaining symbols.
Polynomial evaluate_at(const Polynomial& p, Symbol x, const mpz_class& xi) {
    std::vector<mpz_class> powers{1};
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        const unsigned e = t.mono.exponent(x);
        while (powers.size() <= e) powers.push_back(powers.back() * xi);
        out.push_back(Term{t.mono.with_exponent(x, 0), t.coef * powers[e]});
    }
    return Polynomial::from_terms(std::move(out));
}

// xi-adic expansion of g with symmetric digits, digits become coefficients of x^i.
Polynomial reconstruct(Polynomial g, Symbol x, const mpz_class& xi) {
    std::vector<Term> out;
    const mpz_class half = xi / 2;
    for (unsigned i = 0; !g.is_zero(); ++i) {
        if (i > 0xFFFFu) throw std::overflow_error("gcd reconstruction degree overflow");
        std::vector<Term> digit, rest;
        for (const auto& t : g.terms()) {
            mpz_class d;
            mpz_fdiv_r(d.get_mpz_t(), t.coef.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            mpz_class q = (t.coef - d);
            mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
            if (d != 0) digit.push_back(Term{t.mono.with_exponent(x, i), d});
            if (q != 0) rest.push_back(Term{t.mono, q});
        }
        for (auto& t : digit) out.push_back(std::move(t));
        g = Polynomial::from_terms(std::move(rest));
    }
    return Polynomial::from_terms(std::move(out));
}

// Heuristic gcd by evaluation at large integers; every answer is confirmed
// by trial division.
bool heuristic_gcd(const Polynomial& a, const Polynomial& b, Polynomial& g, int depth = 0) {
    if (a.is_constant() || b.is_constant()) {
        g = Polynomial(1);
        if (a.is_constant() && b.is_constant()) {
            mpz_class c;
            mpz_gcd(c.get_mpz_t(), a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t());
            g = Polynomial(c);
        } else {
            const Polynomial& k = a.is_constant() ? a : b;
            const Polynomial& o = a.is_constant() ? b : a;
            mpz_class c = abs(k.constant_term());
            mpz_class oc = o.content();
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), oc.get_mpz_t());
            g = Polynomial(c);
        }
        return true;
    }
    if (depth > kNumSymbols + 1) return false;
    const mpz_class ca = a.content(), cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    const Polynomial pa = a.divided_by(ca), pb = b.divided_by(cb);
    const unsigned mask = a.symbol_mask() | b.symbol_mask();
    Symbol x = Symbol::b;
    for (int i = 0; i < kNumSymbols; ++i)
        if (mask & (1u << i)) {
            x = static_cast<Symbol>(i);
            break;
        }
    mpz_class xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const Polynomial ea = evaluate_at(pa, x, xi), eb = evaluate_at(pb, x, xi);
        Polynomial gamma;
        if (!ea.is_zero() && !eb.is_zero() && heuristic_gcd(ea, eb, gamma, depth + 1)) {
            Polynomial cand = reconstruct(gamma, x, xi);
            if (!cand.is_zero()) {
                const mpz_class c = cand.content();
                if (c != 1) cand = cand.divided_by(c);
                Polynomial q;
                if (try_divide(pa, cand, q) && try_divide(pb, cand, q)) {
                    g = cand.scaled(cg);
                    return true;
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

}  // namespace

const char* symbol_name(Symbol s) { return kNames[static_cast<int>(s)]; }

Symbol symbol_from_name(const std::string& name) {
    for (int i = 0; i < kNumSymbols; ++i)
        if (name == kNames[i]) return static_cast<Symbol>(i);
    throw std::invalid_argument("unknown symbol '" + name + "'");
}

Monomial Monomial::of(Symbol s, unsigned e) {
    if (e > 0xFFFFu) throw std::overflow_error("exponent too large");
    return Monomial(static_cast<std::uint64_t>(e) << shift(s));
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumSymbols>& e) {
    Monomial m;
    for (int i = 0; i < kNumSymbols; ++i) m = m * of(static_cast<Symbol>(i), e[i]);
    return m;
}

Monomial Monomial::with_exponent(Symbol s, unsigned e) const {
    const std::uint64_t mask = 0xFFFFull << shift(s);
    return Monomial((bits_ & ~mask) | of(s, e).bits_);
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (int i = 0; i < kNumSymbols; ++i) d += exponent(i);
    return d;
}

bool Monomial::divides(Monomial other) const {
    for (int i = 0; i < kNumSymbols; ++i)
        if (exponent(i) > other.exponent(i)) return false;
    return true;
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_.push_back(Term{Monomial{}, mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
    if (c != 0) terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::monomial(const mpz_class& c, Monomial m) {
    Polynomial p;
    if (c != 0) p.terms_.push_back(Term{m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    sort_and_merge(terms);
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

mpz_class Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return 0;
}

unsigned Polynomial::symbol_mask() const {
    unsigned m = 0;
    for (const auto& t : terms_)
        for (int i = 0; i < kNumSymbols; ++i)
            if (t.mono.exponent(i) > 0) m |= 1u << i;
    return m;
}

unsigned Polynomial::degree(Symbol s) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(s));
    return d;
}

unsigned Polynomial::min_degree(Symbol s) const {
    if (terms_.empty()) return 0;
    unsigned d = terms_.front().mono.exponent(s);
    for (const auto& t : terms_) d = std::min(d, t.mono.exponent(s));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coef = -t.coef;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono).scaled(a.terms_[0].coef);
    if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono).scaled(b.terms_[0].coef);
    std::vector<Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) t.push_back(Term{x.mono * y.mono, x.coef * y.coef});
    return Polynomial::from_terms(std::move(t));
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    if (c != 1)
        for (auto& t : p.terms_) t.coef *= c;
    return p;
}

Polynomial Polynomial::times_monomial(Monomial m) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.mono = t.mono * m;
    return p;
}

Polynomial Polynomial::divided_by(const mpz_class& c) const {
    if (c == 0) throw std::domain_error("division by zero");
    Polynomial p = *this;
    for (auto& t : p.terms_) {
        if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("inexact integer division");
        mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    }
    return p;
}

Polynomial Polynomial::divided_by(Monomial m) const {
    Polynomial p = *this;
    for (auto& t : p.terms_) {
        if (!m.divides(t.mono)) throw std::domain_error("inexact monomial division");
        t.mono = t.mono / m;
    }
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

mpz_class Polynomial::content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<Polynomial> Polynomial::coefficients_in(Symbol s) const {
    std::vector<Polynomial> out(degree(s) + 1);
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : terms_) buckets[t.mono.exponent(s)].push_back(Term{t.mono.with_exponent(s, 0), t.coef});
    // Clearing one exponent keeps the relative order within a bucket.
    for (std::size_t i = 0; i < out.size(); ++i) out[i].terms_ = std::move(buckets[i]);
    return out;
}

Polynomial Polynomial::from_coefficients(Symbol s, const std::vector<Polynomial>& c) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (const auto& x : c[i].terms_)
            t.push_back(Term{x.mono * Monomial::of(s, static_cast<unsigned>(i)), x.coef});
    return from_terms(std::move(t));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->coef;
        const bool neg = sgn(c) < 0;
        mpz_class a = abs(c);
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        first = false;
        bool need_star = false;
        if (a != 1 || it->mono.is_one()) {
            os << a.get_str();
            need_star = true;
        }
        for (int i = 0; i < kNumSymbols; ++i) {
            const unsigned e = it->mono.exponent(i);
            if (e == 0) continue;
            if (need_star) os << "*";
            os << kNames[i];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial& q) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Term> quot;
    Polynomial r = a;
    const Term& lb = b.leading();
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lb.mono.divides(lr.mono)) return false;
        if (!mpz_divisible_p(lr.coef.get_mpz_t(), lb.coef.get_mpz_t())) return false;
        Term t{lr.mono / lb.mono, 0};
        mpz_divexact(t.coef.get_mpz_t(), lr.coef.get_mpz_t(), lb.coef.get_mpz_t());
        r -= b.times_monomial(t.mono).scaled(t.coef);
        quot.push_back(std::move(t));
    }
    q = Polynomial::from_terms(std::move(quot));
    return true;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_one()) return a;
    if (b.is_constant()) return a.divided_by(b.leading().coef);
    Polynomial q;
    if (!try_divide(a, b, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    if (a.is_constant() || b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return Polynomial(g);
    }
    if (a == b || a == -b) return normalize_sign(a);

    // Pull out monomial factors first; they are common and cheap.
    const Monomial ma = monomial_gcd(a), mb = monomial_gcd(b);
    std::array<unsigned, kNumSymbols> common{};
    for (int i = 0; i < kNumSymbols; ++i) common[i] = std::min(ma.exponent(i), mb.exponent(i));
    const Monomial mc = Monomial::from_exponents(common);
    if (!ma.is_one() || !mb.is_one()) {
        Polynomial g = gcd(a.divided_by(ma), b.divided_by(mb));
        return g.times_monomial(mc);
    }

    {
        Polynomial h;
        if (heuristic_gcd(a, b, h)) return normalize_sign(h);
    }

    const unsigned mask_a = a.symbol_mask(), mask_b = b.symbol_mask();
    // A symbol present in only one argument: reduce that argument to its content.
    for (int i = 0; i < kNumSymbols; ++i) {
        const unsigned bit = 1u << i;
        const Symbol x = static_cast<Symbol>(i);
        if ((mask_a & bit) && !(mask_b & bit)) return gcd(content_in(a, x), b);
        if ((mask_b & bit) && !(mask_a & bit)) return gcd(a, content_in(b, x));
    }

    // Main variable: the shared symbol of least degree keeps the PRS short.
    Symbol x = Symbol::b;
    unsigned best = ~0u;
    for (int i = 0; i < kNumSymbols; ++i) {
        if (!(mask_a & (1u << i))) continue;
        const Symbol s = static_cast<Symbol>(i);
        const unsigned d = std::max(a.degree(s), b.degree(s));
        if (d < best) {
            best = d;
            x = s;
        }
    }
    const Polynomial ca = content_in(a, x), cb = content_in(b, x);
    const Polynomial c = gcd(ca, cb);
    const Polynomial pa = divide_exact(a, ca), pb = divide_exact(b, cb);
    Polynomial g = primitive_prs(pa, pb, x);
    if (g.degree(x) > 0) g = primitive_part_in(g, x);
    else g = Polynomial(1);
    return normalize_sign(c * g);
}

}  // namespace jackfock
