#pragma once

// Brute-force reference computations that share no code with the library
// beyond the Partition type and GMP.

#include "jackfock/partitions.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracles {

using jackfock::Partition;
using Exps = std::vector<int>;
using Poly = std::map<Exps, mpq_class>;

Poly multiply(const Poly& a, const Poly& b);
Poly power_sum(int k, int n);
Poly power_sum_product(const Partition& mu, int n);
Poly monomial_symmetric(const Partition& lambda, int n);

// Coefficient of z^lambda (lambda padded with zeros to n entries).
mpq_class coefficient(const Poly& f, const Partition& lambda, int n);

// Semistandard tableaux of shape lambda and content mu, counted by backtracking.
long kostka(const Partition& lambda, const Partition& mu);

// sum_i (z_i d_i)^2 f + beta sum_{i<j} (z_i + z_j)/(z_i - z_j) (z_i d_i - z_j d_j) f,
// dividing by (z_i - z_j) with synthetic division.
Poly cs_operator(const Poly& f, const mpq_class& beta, int n);

// Jack eigenfunction of cs_operator in |lambda| variables, expanded in the
// monomial basis over mu <= lambda, with the m_lambda coefficient set to 1.
std::map<Partition, mpq_class> jack_monomial(const Partition& lambda, const mpq_class& beta);

}  // namespace oracles
