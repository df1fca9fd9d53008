#pragma once

#include "jackfock/fock_vector.hpp"

#include <map>
#include <string>
#include <vector>

namespace jackfock {

enum class SymBasis { powersum, monomial, schur };

const char* basis_name(SymBasis b);
SymBasis basis_from_name(const std::string& name);

struct SymmetricPolynomial {
    int degree = 0;
    SymBasis basis = SymBasis::powersum;
    PartitionVector coeffs;

    bool operator==(const SymmetricPolynomial& o) const {
        return degree == o.degree && basis == o.basis && coeffs == o.coeffs;
    }
};

// Per-degree change-of-basis data, indexed by enumerate_level(k).
struct BasisTables {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    RationalMatrix characters;     // (lambda, mu) -> chi^lambda(mu)
    std::vector<mpq_class> z;      // z_mu
    RationalMatrix p_to_m;         // (mu, lambda): coefficient of m_lambda in p_mu
    RationalMatrix m_to_p;         // (lambda, mu): coefficient of p_mu in m_lambda
};

// Built once per degree; safe to call concurrently.
const BasisTables& basis_tables(int k);

// Irreducible character chi^lambda at cycle type mu (Murnaghan-Nakayama).
long character(const Partition& lambda, const Partition& mu);
mpq_class centralizer_order(const Partition& mu);

SymmetricPolynomial convert(const SymmetricPolynomial& f, SymBasis target);

// a~_{-mu}|0> -> p_mu with the same coefficients.
SymmetricPolynomial coherent_map(const PartitionVector& v);

// Polynomial in explicit variables z_1..z_N: exponent vector -> coefficient.
class VarPolynomial {
public:
    explicit VarPolynomial(int n = 0) : n_(n) {}
    static VarPolynomial constant(int n, const ParamScalar& c);
    static VarPolynomial power_sum(int n, int k);

    int num_vars() const { return n_; }
    const std::map<std::vector<int>, ParamScalar>& terms() const { return terms_; }
    void add(const std::vector<int>& e, const ParamScalar& c);
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    VarPolynomial operator*(const VarPolynomial& o) const;
    VarPolynomial operator+(const VarPolynomial& o) const;
    VarPolynomial operator-(const VarPolynomial& o) const;
    VarPolynomial scaled(const ParamScalar& s) const;
    bool operator==(const VarPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    bool is_symmetric() const;
    ParamScalar evaluate(const std::vector<mpq_class>& point) const;
    std::string to_string() const;

private:
    int n_;
    std::map<std::vector<int>, ParamScalar> terms_;
};

VarPolynomial expand_in_variables(const SymmetricPolynomial& f, int n);

// Exact value at a rational point; coefficients may stay symbolic.
ParamScalar evaluate(const SymmetricPolynomial& f, int n, const std::vector<mpq_class>& point);

}  // namespace jackfock
