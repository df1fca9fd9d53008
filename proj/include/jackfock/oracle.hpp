#pragma once

#include "jackfock/fock_vector.hpp"
#include "jackfock/symfunc.hpp"

#include <vector>

namespace jackfock {

enum class NullspaceStatus { simple, empty, degenerate };
const char* nullspace_status_name(NullspaceStatus s);

struct NullspaceResult {
    NullspaceStatus status = NullspaceStatus::empty;
    // Basis vectors, each scaled so its first nonzero entry is 1.
    std::vector<std::vector<ParamScalar>> basis;
};

// Fraction-free (Bareiss) elimination over Q(b,u,v,r).
NullspaceResult nullspace(const ScalarMatrix& a);
NullspaceResult nullspace_eigenvector(const ScalarMatrix& m, const ParamScalar& e);

// Labeled variant: the simple-case vector as a FockVector over the column basis.
struct LabeledNullspace {
    NullspaceStatus status = NullspaceStatus::empty;
    std::vector<PartitionVector> basis;
};
LabeledNullspace nullspace_eigenvector(const LabeledMatrix<Partition>& m, const ParamScalar& e);

// Same, with the unknown restricted to the span of columns mu <= lambda in
// dominance. Separates eigenvectors whose energies coincide for incomparable
// partitions.
LabeledNullspace nullspace_eigenvector_below(const LabeledMatrix<Partition>& m, const ParamScalar& e,
                                             const Partition& lambda);

// Level-k matrix of a bosonic operator transported from the power-sum basis
// to the Schur basis by the character table.
LabeledMatrix<Partition> schur_basis_matrix(const LabeledMatrix<Partition>& powersum_matrix);

// u and v proportional (both nonzero, or both zero).
bool proportional(const PartitionVector& u, const PartitionVector& v);

// sum_i (z_i d_i)^2 f + beta sum_{i<j} (z_i + z_j)/(z_i - z_j) (z_i d_i - z_j d_j) f,
// half the coordinate-space CS operator. Throws std::invalid_argument for
// non-symmetric f and std::logic_error if a division is inexact.
VarPolynomial apply_cs_differential(const VarPolynomial& f, const ParamScalar& beta);

}  // namespace jackfock
