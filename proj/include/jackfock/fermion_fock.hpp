#pragma once

#include "jackfock/fock_vector.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace jackfock {

// Occupation of the negative modes of one fermion family. Bit j of `psi`
// means psi_{-(j+1/2)} is occupied (a row of the diagram), bit j of
// `psi_star` means psi*_{-(j+1/2)} is occupied (a column).
//
// Internally states are products in grouped order: all psi modes in
// decreasing mode, then all psi* modes in decreasing mode. The Maya basis
// vector of a partition differs from that by maya_to_grouped_sign.
struct FermionState {
    std::uint64_t psi = 0;
    std::uint64_t psi_star = 0;
    auto operator<=>(const FermionState&) const = default;
    bool operator==(const FermionState&) const = default;
};

int charge(const FermionState& s);
FermionState fermion_state(const Partition& lambda);
// Requires charge zero.
Partition partition_of(const FermionState& s);

// Sign (-1)^{sum (m_i - 1/2)} of the Maya state relative to the interleaved
// product psi_{-n_1} psi*_{-m_1} psi_{-n_2} psi*_{-m_2} ...
int maya_sign(const Partition& lambda);
// Maya(lambda) = maya_to_grouped_sign(lambda) * grouped product.
int maya_to_grouped_sign(const Partition& lambda);

struct MayaState {
    Partition partition;
    int sign = 1;
    // Doubled positive mode labels, decreasing: 2n_i and 2m_i (odd integers).
    std::vector<int> psi;
    std::vector<int> psi_star;
};

MayaState maya_from_partition(const Partition& lambda);
// Throws std::invalid_argument if modes or sign are inconsistent.
Partition partition_from_maya(const MayaState& m);

// Summation variables are stored doubled: half-integer variables take odd
// values, integer variables even values. Mode indices are doubled too.
enum class VarKind { half_integer, integer };

constexpr int kFermionVars = 5;
using VarCoeffs = std::array<int, kFermionVars>;

struct FermionFactor {
    int layer = 0;
    bool star = false;  // psi* if true, psi otherwise
    int c0 = 0;         // doubled index = c0 + sum c[i] * var[i]
    VarCoeffs c{};
};

enum class Relation { positive, nonnegative, nonzero };

// Relation applied to c0 + sum c[i] * var[i] (doubled units).
struct LinearConstraint {
    int c0 = 0;
    VarCoeffs c{};
    Relation rel = Relation::positive;
};

// Coefficient monomial coef * prod var_i^pow_i in undoubled variable values.
struct WeightTerm {
    mpq_class coef;
    VarCoeffs pow{};
};

struct FermionTemplate {
    ParamScalar coeff{1};
    int num_vars = 0;
    std::array<VarKind, kFermionVars> kinds{VarKind::half_integer, VarKind::half_integer, VarKind::half_integer,
                                            VarKind::half_integer, VarKind::half_integer};
    std::vector<WeightTerm> weight{WeightTerm{mpq_class(1), {}}};
    std::vector<FermionFactor> factors;  // leftmost first
    std::vector<LinearConstraint> constraints;
    // Reorder creation modes to the left before applying. Only reorderings
    // within one layer contribute a sign; different layers commute.
    bool normal_order = true;
};

struct FermionOperator {
    std::string name;
    int layers = 1;
    std::vector<FermionTemplate> templates;

    FermionOperator operator+(const FermionOperator& o) const;
    FermionOperator scaled(const ParamScalar& s) const;
};

enum class FermionKind { H0, Hd, Ht, Ht_as_printed, Ht_cases, Ht_cases_as_printed, boson_mode, virasoro };

FermionKind fermion_kind_from_name(const std::string& name);

// n is the mode index for boson_mode and virasoro, ignored otherwise.
// Ht excludes the s = -k terms of the printed sum, which reproduce the quartic
// part of Hd; Ht_as_printed keeps them. Ht_cases uses the upper limit
// n <= r - 1/2 and the ordering psi_k psi_r in the first case;
// Ht_cases_as_printed keeps psi_r psi_k there.
FermionOperator build_fermionic(FermionKind kind, int n = 0);

// Single mode operator psi_x or psi*_x with x = doubled_index / 2.
FermionOperator fermion_mode(bool star, int doubled_index, int layer = 0, int layers = 1);

using FermionMulti = std::vector<FermionState>;

FockVector<FermionMulti> apply_to_fermion_state(const FermionOperator& op, const FermionMulti& state);
FockVector<FermionState> apply_fermionic(const FermionOperator& op, const FockVector<FermionState>& v);
// Charge-zero single layer in the Maya basis.
PartitionVector apply_fermionic(const FermionOperator& op, const PartitionVector& v);
// Two layers, each in its Maya basis (tensor product, no inter-layer signs).
BiVector apply_fermionic(const FermionOperator& op, const BiVector& v);

// Maya-basis matrix, column j = image of the j-th state of enumerate_level(k_in).
LabeledMatrix<Partition> fermionic_matrix(const FermionOperator& op, int k_in, int k_out);
inline LabeledMatrix<Partition> fermionic_matrix(const FermionOperator& op, int k) {
    return fermionic_matrix(op, k, k);
}

}  // namespace jackfock
