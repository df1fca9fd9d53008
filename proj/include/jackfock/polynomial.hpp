#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace jackfock {

// Formal coupling symbols. b drives CS/Laughlin; u, v, r drive Halperin.
enum class Symbol : std::uint8_t { b = 0, u = 1, v = 2, r = 3 };

inline constexpr int kNumSymbols = 4;

const char* symbol_name(Symbol s);
Symbol symbol_from_name(const std::string& name);

// Packed exponent vector, 16 bits per symbol, b in the top bits so that
// integer comparison is lex order with b > u > v > r.
class Monomial {
public:
    constexpr Monomial() = default;
    static Monomial of(Symbol s, unsigned e = 1);
    static Monomial from_exponents(const std::array<unsigned, kNumSymbols>& e);

    unsigned exponent(Symbol s) const {
        return static_cast<unsigned>((bits_ >> shift(s)) & 0xFFFFu);
    }
    unsigned exponent(int i) const { return exponent(static_cast<Symbol>(i)); }
    Monomial with_exponent(Symbol s, unsigned e) const;
    unsigned total_degree() const;
    bool is_one() const { return bits_ == 0; }
    bool divides(Monomial other) const;

    Monomial operator*(Monomial o) const { return Monomial(bits_ + o.bits_); }
    // Caller guarantees divisibility.
    Monomial operator/(Monomial o) const { return Monomial(bits_ - o.bits_); }

    std::uint64_t bits() const { return bits_; }
    auto operator<=>(const Monomial&) const = default;

private:
    explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
    static constexpr unsigned shift(Symbol s) {
        return 48u - 16u * static_cast<unsigned>(s);
    }
    std::uint64_t bits_ = 0;
};

struct Term {
    Monomial mono;
    mpz_class coef;
};

// Sparse multivariate polynomial with integer coefficients. Terms are kept
// sorted by strictly decreasing monomial, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT(google-explicit-constructor)
    explicit Polynomial(const mpz_class& c);
    static Polynomial monomial(const mpz_class& c, Monomial m);
    static Polynomial symbol(Symbol s) { return monomial(1, Monomial::of(s)); }
    // Terms in any order; merges duplicates and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    const Term& leading() const { return terms_.front(); }
    mpz_class constant_term() const;
    // Bitmask of symbols with a positive exponent somewhere.
    unsigned symbol_mask() const;
    unsigned degree(Symbol s) const;
    // Smallest exponent of s over all terms (0 for the zero polynomial).
    unsigned min_degree(Symbol s) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const mpz_class& c) const;
    Polynomial times_monomial(Monomial m) const;
    Polynomial divided_by(const mpz_class& c) const;  // exact
    Polynomial divided_by(Monomial m) const;          // exact
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Integer gcd of the coefficients, nonnegative.
    mpz_class content() const;

    // Coefficients as a polynomial in s; index = power of s.
    std::vector<Polynomial> coefficients_in(Symbol s) const;
    static Polynomial from_coefficients(Symbol s, const std::vector<Polynomial>& c);

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// Exact multivariate division; throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
// Returns q with a = q*b if the division is exact, and false otherwise.
bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial& q);

// Greatest common divisor, normalized to a positive leading coefficient.
// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace jackfock
