#pragma once

#include "jackfock/fock_vector.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace jackfock {

// One mode a^{layer}_{index} with index = c0 + cn*n + cm*m in terms of the
// template's summation variables.
struct ModeFactor {
    int layer = 0;
    int c0 = 0;
    int cn = 0;
    int cm = 0;
};

// coeff * sum_{n, m} (w0 + wn*n + wm*m) * (product of factors), the product
// applied right to left. Variables range over [lower, +inf); an empty lower
// bound means the variable runs over all integers.
struct ModeTemplate {
    ParamScalar coeff{1};
    int num_vars = 0;
    std::array<std::optional<int>, 2> lower{1, 1};
    std::array<mpq_class, 3> weight{mpq_class(1), mpq_class(0), mpq_class(0)};
    std::vector<ModeFactor> factors;
    // Move creation modes to the left before applying (bosonic modes commute
    // up to [a_n, a_m] = n delta_{n+m}, and normal ordering drops that term).
    bool normal_order = false;
};

// Diagonal term: state -> prod_layers base[layer]^{length of that layer's partition}.
struct LengthPowerTerm {
    std::vector<ParamScalar> base;
};

struct OperatorSpec {
    std::string name;
    int layers = 1;
    std::vector<ModeTemplate> templates;
    std::vector<LengthPowerTerm> diagonal;
    // Scalar value of a_0 per layer (absent entries count as zero).
    std::vector<ParamScalar> zero_modes;

    // Total level shift if every template has one independent of the
    // summation variables.
    std::optional<int> level_shift() const;
    OperatorSpec operator+(const OperatorSpec& o) const;
    OperatorSpec scaled(const ParamScalar& s) const;
};

enum class OperatorKind { cs_deformed, cs_raw, laughlin, level, similarity_D, similarity_DLau };

OperatorKind operator_kind_from_name(const std::string& name);

struct OperatorParams {
    Symbol coupling = Symbol::b;
    // Reinstates b^2 N sum a_{-n} a_n (CS kinds only).
    std::optional<long> background_N;
    // laughlin: build the a~-mode form instead of the raw a-mode form.
    bool deformed = false;
    // similarity maps: inverse direction (multiply by b^{+l} instead of b^{-l}).
    bool inverse = false;
    int layer = 0;
    int layers = 1;
};

OperatorSpec build_operator(OperatorKind kind, const OperatorParams& params = {});

// Single product of modes a_{i_1} a_{i_2} ... (applied right to left).
OperatorSpec mode_word(const std::vector<int>& indices, int layer = 0, int layers = 1);
// L_n = 1/2 sum_m :a_{n-m} a_m: (zero mode taken as 0).
OperatorSpec virasoro_boson(int n);

PartitionVector apply_operator(const OperatorSpec& op, const PartitionVector& v);
BiVector apply_operator(const OperatorSpec& op, const BiVector& v);
// Image of one multi-layer basis state.
FockVector<std::vector<Partition>> apply_to_state(const OperatorSpec& op, const std::vector<Partition>& state);

class LevelLeakError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Column j = image of the j-th state of enumerate_level(k); throws
// LevelLeakError unless op conserves the level.
LabeledMatrix<Partition> operator_matrix(const OperatorSpec& op, int k);
// Single-layer matrix between two levels (for level-shifting words).
LabeledMatrix<Partition> operator_matrix(const OperatorSpec& op, int k_in, int k_out);

}  // namespace jackfock
