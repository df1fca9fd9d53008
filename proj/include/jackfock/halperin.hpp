#pragma once

#include "jackfock/boson_fock.hpp"
#include "jackfock/fermion_fock.hpp"

#include <vector>

namespace jackfock {

// Symbols: u = sqrt(p), v = sqrt(q), r the interlayer exponent. Layer 0 is
// the a^1 family, layer 1 the a^2 family.

// H_L(p, a^1) + H_L(q, a^2) + H_int, raw a-modes. a^1_0 acts as u * N1.
OperatorSpec build_halperin(long N1 = 0);
// H_int alone; `part` 0 = both terms, 1 = the a^1 a^1 a^2 term, 2 = the a^1 a^2 a^2 term.
OperatorSpec build_halperin_interaction(long N1 = 0, int part = 0);
// H_L(p, a^1) + H_L(q, a^2).
OperatorSpec build_halperin_free();

std::vector<BiPartition> bilevel_basis(int k1, int k2);
// All bi-partitions of total weight k, grouped by layer-1 weight ascending.
std::vector<BiPartition> total_level_basis(int k);

ParamScalar halperin_energy(const Partition& lambda, const Partition& mu);

// Raw a-mode bi-Jack state P_lambda(p/2) (x) P_mu(q/2), monic in Schur terms per layer.
BiVector bijack_state(const Partition& lambda, const Partition& mu);
// Coefficients of a raw bi-level vector in the bi-Jack basis.
BiVector bijack_decompose(const BiVector& raw);

struct HalperinState {
    BiPartition label;
    ParamScalar energy;
    BiVector vector;  // raw a-mode basis
    std::vector<BiPartition> gaps_used;
};

// Finite Neumann series sum_j [(E - H_L(p) - H_L(q))^{-1} H_int]^j Omega^0.
HalperinState omega_eigenstate(const Partition& lambda, const Partition& mu, long N1 = 0);

// D^Hal: layerwise (u/2)^{-l} (v/2)^{-l}, or the inverse.
OperatorSpec build_dhal(bool inverse = false);

struct FermionicInteraction {
    FermionOperator first;   // H_int^1
    FermionOperator second;  // H_int^2
};

// Sextic normal-ordered sums plus single contractions, obtained by normal
// ordering the bosonic H_int (zero mode a^1_0 taken as 0). The quadratic
// pair a_X a_Y with X = -n < 0 contributes
// sum_{t>0} :psi_{X-t} psi*_{Y+t}: - :psi_{Y+t} psi*_{X-t}:.
FermionicInteraction build_halperin_fermionic_interaction();
// The older closed form with unrestricted sextic sums and unweighted
// (u, r, m) contraction terms. Kept for comparison; it does not reproduce
// the bosonic H_int.
FermionicInteraction build_halperin_fermionic_interaction_as_printed();

// Raw a-mode bi-vector rewritten layerwise in the Schur (Maya) basis.
BiVector to_schur_layers(const BiVector& powersum_layers);

LabeledMatrix<BiPartition> bosonic_bimatrix(const OperatorSpec& op, int total_level);
LabeledMatrix<BiPartition> fermionic_bimatrix(const FermionOperator& op, int total_level);
// The bosonic matrix transported layerwise to the Schur basis.
LabeledMatrix<BiPartition> bosonic_bimatrix_schur(const OperatorSpec& op, int total_level);

}  // namespace jackfock
