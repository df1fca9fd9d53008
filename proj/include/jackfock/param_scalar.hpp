#pragma once

#include "jackfock/polynomial.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace jackfock {

// Exact element of Q(b, u, v, r), stored as num/den with integer
// polynomials. Canonical form: gcd(num, den) = 1 over Z[b,u,v,r] and the
// leading coefficient of den is positive.
class ParamScalar {
public:
    ParamScalar() : den_(1) {}
    ParamScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit ParamScalar(const mpz_class& c) : num_(c), den_(1) {}
    explicit ParamScalar(const mpq_class& q);
    ParamScalar(Polynomial num, Polynomial den);
    explicit ParamScalar(Polynomial num) : num_(std::move(num)), den_(1) {}
    static ParamScalar symbol(Symbol s) { return ParamScalar(Polynomial::symbol(s)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Throws std::domain_error when symbols remain.
    mpq_class constant_value() const;
    unsigned symbol_mask() const { return num_.symbol_mask() | den_.symbol_mask(); }

    ParamScalar operator-() const;
    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o);
    ParamScalar& operator/=(const ParamScalar& o);
    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
    friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }

    ParamScalar scaled(const mpq_class& q) const;
    ParamScalar inverse() const;
    ParamScalar pow(int e) const;

    bool operator==(const ParamScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ParamScalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    struct Canonical {};
    ParamScalar(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

// How a bound value enters: as the symbol itself, or as its square
// (b^2 = beta; odd powers are then not representable).
enum class BindMode { value, square };

struct Binding {
    mpq_class value;
    BindMode mode = BindMode::value;
};

using Assignment = std::map<Symbol, Binding>;

// A denominator vanished at a specialization. `factor` is the vanishing
// polynomial before specialization.
class ResonanceError : public std::runtime_error {
public:
    ResonanceError(Polynomial factor, const std::string& what)
        : std::runtime_error(what), factor_(std::move(factor)) {}
    const Polynomial& factor() const { return factor_; }

private:
    Polynomial factor_;
};

// Substitute one symbol by an arbitrary field element. With BindMode::square
// every exponent of `s` must be even and `value` replaces s^2.
ParamScalar substitute(const ParamScalar& x, Symbol s, const ParamScalar& value,
                       BindMode mode = BindMode::value);
// Partial substitution of rational values; unbound symbols stay formal.
ParamScalar substitute(const ParamScalar& x, const Assignment& assignment);
// Full evaluation; throws std::invalid_argument if a symbol is left unbound.
mpq_class specialize(const ParamScalar& x, const Assignment& assignment);

// Polynomial in s^2 rendered with s^2 written as `square_name`, e.g. 2+2*beta.
// Falls back to the plain form when an odd power of s occurs.
std::string render_in_square(const Polynomial& p, Symbol s, const std::string& square_name);

}  // namespace jackfock
