#pragma once

#include "jackfock/boson_fock.hpp"
#include "jackfock/fermion_fock.hpp"
#include "jackfock/symfunc.hpp"

#include <optional>
#include <string>

namespace jackfock {

enum class Model { cs, laughlin };
const char* model_name(Model m);
Model model_from_name(const std::string& name);

// Interaction prefactor: 1 - b^2 (cs) or 1 - b^2/2 (laughlin).
ParamScalar interaction_coupling(Model m);

// cs: E^1 + (1 - b^2) sum (lambda^t_i)^2; laughlin: sum lambda_i^2 - (b^2/2) sum (lambda^t_i)^2.
ParamScalar energy(Model m, const Partition& lambda);

// Maya-basis matrix of H0 + c (Hd + Ht) at level k.
LabeledMatrix<Partition> hamiltonian_matrix(Model m, int k);
// Bosonic a~-mode Hamiltonian (cs_deformed, or the deformed Laughlin operator).
OperatorSpec bosonic_hamiltonian(Model m);

struct Spectrum {
    Model model = Model::cs;
    Partition lambda;
    ParamScalar energy;
    PartitionVector vector;  // Schur (Maya) basis
    // Partitions mu whose gap E_lambda - E_mu entered the resolvent.
    std::vector<Partition> gaps_used;
};

// Finite Neumann series sum_j [c (E - H0^b)^{-1} Ht]^j s_lambda; monic in s_lambda.
Spectrum eigenstate(Model m, const Partition& lambda);

class DegenerateSpectrumError : public ResonanceError {
public:
    using ResonanceError::ResonanceError;
};

// Specializes b^2 (BindMode::square) or b. Throws ResonanceError naming the
// vanishing gap, or DegenerateSpectrumError if a level-mate whose energy
// differs as a function of b shares the specialized energy.
Spectrum eigenstate_at(Model m, const Partition& lambda, const Binding& coupling);

enum class Normalization { monic_schur, paper_onek };
Normalization normalization_from_name(const std::string& name);

// Scales a Schur-basis vector. paper_onek makes the raw a_{-1}^k coefficient b^{-k}.
PartitionVector normalize(const PartitionVector& schur_vector, Model m, Normalization n);
Spectrum normalize(const Spectrum& s, Normalization n);

// Eigenvector in the a~-mode power-sum basis.
PartitionVector bosonic_vector(const Spectrum& s);
// Raw a-mode coefficients: the similarity map D (or D^Lau) applied to bosonic_vector.
PartitionVector raw_vector(const Spectrum& s);
// Jack polynomial at beta = b^2 (cs) or b^2/2 (laughlin).
SymmetricPolynomial to_polynomial(const Spectrum& s, SymBasis basis = SymBasis::powersum);

// Replaces b^2 by b^2/2 in every coefficient.
PartitionVector halve_coupling(const PartitionVector& v);

}  // namespace jackfock
