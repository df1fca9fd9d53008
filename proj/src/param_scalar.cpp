#include "jackfock/param_scalar.hpp"

#include <sstream>

namespace jackfock {

namespace {

bool single_term(const Polynomial& p) { return p.terms().size() == 1; }

std::string wrap(const Polynomial& p) {
    std::string s = p.to_string();
    return single_term(p) ? s : "(" + s + ")";
}

// Evaluate p with s replaced by value (or s^2 replaced by value).
ParamScalar evaluate_in(const Polynomial& p, Symbol s, const ParamScalar& value, BindMode mode) {
    const auto coeffs = p.coefficients_in(s);
    if (mode == BindMode::square) {
        for (std::size_t i = 1; i < coeffs.size(); i += 2)
            if (!coeffs[i].is_zero())
                throw std::domain_error(std::string("odd power of ") + symbol_name(s) +
                                        " is not representable in square mode");
    }
    const std::size_t step = mode == BindMode::square ? 2 : 1;
    ParamScalar acc;
    // Horner from the top power down.
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (i % step != 0) continue;
        if (!acc.is_zero()) acc *= value;
        acc += ParamScalar(coeffs[i]);
    }
    return acc;
}

}  // namespace

ParamScalar::ParamScalar(const mpq_class& q)
    : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {}

ParamScalar::ParamScalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void ParamScalar::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_one()) {
        if (den_.is_constant() || num_.is_constant()) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
            if (g != 1) {
                num_ = num_.divided_by(g);
                den_ = den_.divided_by(g);
            }
        } else {
            Polynomial g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
    }
    if (sgn(den_.leading().coef) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

mpq_class ParamScalar::constant_value() const {
    if (!is_constant()) throw std::domain_error("value still depends on symbols: " + to_string());
    mpq_class q(num_.constant_term(), den_.constant_term());
    q.canonicalize();
    return q;
}

ParamScalar ParamScalar::operator-() const { return ParamScalar(-num_, den_, Canonical{}); }

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        canonicalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
    if (is_zero() || o.is_zero()) return *this = ParamScalar();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel before multiplying so the operands stay small.
    Polynomial g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Polynomial n1 = g1.is_one() ? num_ : divide_exact(num_, g1);
    Polynomial d2 = g1.is_one() ? o.den_ : divide_exact(o.den_, g1);
    Polynomial n2 = g2.is_one() ? o.num_ : divide_exact(o.num_, g2);
    Polynomial d1 = g2.is_one() ? den_ : divide_exact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    if (sgn(den_.leading().coef) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) { return *this *= o.inverse(); }

ParamScalar ParamScalar::scaled(const mpq_class& q) const {
    if (q == 0 || is_zero()) return ParamScalar();
    if (q == 1) return *this;
    return *this * ParamScalar(q);
}

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (sgn(num_.leading().coef) < 0) return ParamScalar(-den_, -num_, Canonical{});
    return ParamScalar(den_, num_, Canonical{});
}

ParamScalar ParamScalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return ParamScalar(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

std::string ParamScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
}

ParamScalar substitute(const ParamScalar& x, Symbol s, const ParamScalar& value, BindMode mode) {
    const unsigned bit = 1u << static_cast<int>(s);
    if (!(x.symbol_mask() & bit)) return x;
    ParamScalar num = evaluate_in(x.num(), s, value, mode);
    ParamScalar den = evaluate_in(x.den(), s, value, mode);
    if (den.is_zero()) {
        std::ostringstream os;
        os << "resonance: denominator " << x.den().to_string() << " vanishes at " << symbol_name(s)
           << (mode == BindMode::square ? "^2" : "") << " = " << value.to_string();
        throw ResonanceError(x.den(), os.str());
    }
    return num / den;
}

ParamScalar substitute(const ParamScalar& x, const Assignment& assignment) {
    ParamScalar y = x;
    for (const auto& [s, bind] : assignment) {
        try {
            y = substitute(y, s, ParamScalar(bind.value), bind.mode);
        } catch (const ResonanceError&) {
            // Report the original denominator, not a partially substituted one.
            std::ostringstream os;
            os << "resonance: denominator " << x.den().to_string() << " vanishes";
            throw ResonanceError(x.den(), os.str());
        }
    }
    return y;
}

mpq_class specialize(const ParamScalar& x, const Assignment& assignment) {
    for (int i = 0; i < kNumSymbols; ++i) {
        const Symbol s = static_cast<Symbol>(i);
        if ((x.symbol_mask() & (1u << i)) && !assignment.count(s))
            throw std::invalid_argument(std::string("no value bound for symbol ") + symbol_name(s));
    }
    return substitute(x, assignment).constant_value();
}

std::string render_in_square(const Polynomial& p, Symbol s, const std::string& square_name) {
    for (const auto& t : p.terms())
        if (t.mono.exponent(s) % 2 != 0) return p.to_string();
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = sgn(it->coef) < 0;
        const mpz_class a = abs(it->coef);
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        first = false;
        bool star = false;
        if (a != 1 || it->mono.is_one()) {
            os << a.get_str();
            star = true;
        }
        for (int i = 0; i < kNumSymbols; ++i) {
            unsigned e = it->mono.exponent(i);
            if (e == 0) continue;
            if (star) os << "*";
            if (static_cast<Symbol>(i) == s) {
                os << square_name;
                e /= 2;
            } else {
                os << symbol_name(static_cast<Symbol>(i));
            }
            if (e > 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

}  // namespace jackfock
