#include "jackfock/fermion_fock.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace jackfock {

namespace {

constexpr int kMaxModes = 64;

int popcount(std::uint64_t x) { return std::popcount(x); }

std::uint64_t above(std::uint64_t x, int j) { return j + 1 >= kMaxModes ? 0 : x >> (j + 1); }

// Applies psi_x (star = false) or psi*_x to s in place, x = x2 / 2.
// Returns the Jordan-Wigner sign, or 0 if the result vanishes.
int apply_mode(FermionState& s, bool star, int x2) {
    const int j = (std::abs(x2) - 1) / 2;
    if (x2 < 0) {
        if (j >= kMaxModes) throw std::overflow_error("fermion mode beyond supported range");
        const std::uint64_t bit = 1ull << j;
        if (!star) {
            if (s.psi & bit) return 0;
            const int sign = popcount(above(s.psi, j)) % 2 ? -1 : 1;
            s.psi |= bit;
            return sign;
        }
        if (s.psi_star & bit) return 0;
        const int sign = (popcount(s.psi) + popcount(above(s.psi_star, j))) % 2 ? -1 : 1;
        s.psi_star |= bit;
        return sign;
    }
    if (j >= kMaxModes) return 0;
    const std::uint64_t bit = 1ull << j;
    if (!star) {
        // psi_x with x > 0 removes the psi* particle at x.
        if (!(s.psi_star & bit)) return 0;
        const int sign = (popcount(s.psi) + popcount(above(s.psi_star, j))) % 2 ? -1 : 1;
        s.psi_star &= ~bit;
        return sign;
    }
    if (!(s.psi & bit)) return 0;
    const int sign = popcount(above(s.psi, j)) % 2 ? -1 : 1;
    s.psi &= ~bit;
    return sign;
}

int mode_size(const FermionState& s) {
    int total = 0;
    for (int j = 0; j < kMaxModes; ++j) {
        if (s.psi >> j & 1u) total += 2 * j + 1;
        if (s.psi_star >> j & 1u) total += 2 * j + 1;
    }
    return total;  // doubled
}

int linear(int c0, const VarCoeffs& c, const VarCoeffs& var) {
    int x = c0;
    for (int i = 0; i < kFermionVars; ++i) x += c[i] * var[i];
    return x;
}

// Highest variable index with a nonzero coefficient, or -1.
int last_var(const VarCoeffs& c) {
    for (int i = kFermionVars - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return -1;
}

bool satisfied(const LinearConstraint& c, const VarCoeffs& var) {
    const int x = linear(c.c0, c.c, var);
    switch (c.rel) {
        case Relation::positive: return x > 0;
        case Relation::nonnegative: return x >= 0;
        case Relation::nonzero: return x != 0;
    }
    return false;
}

mpq_class eval_weight(const std::vector<WeightTerm>& w, const VarCoeffs& var) {
    mpq_class total = 0;
    for (const auto& t : w) {
        mpq_class m = t.coef;
        for (int i = 0; i < kFermionVars; ++i)
            for (int p = 0; p < t.pow[i]; ++p) m *= mpq_class(var[i], 2);
        total += m;
    }
    return total;
}

constexpr auto kInt = VarKind::integer;
constexpr auto kHalf = VarKind::half_integer;
using Kinds = std::array<VarKind, kFermionVars>;
constexpr Kinds kAllHalf{kHalf, kHalf, kHalf, kHalf, kHalf};

FermionFactor psi(VarCoeffs c, int c0 = 0, int layer = 0) { return {layer, false, c0, c}; }
FermionFactor psis(VarCoeffs c, int c0 = 0, int layer = 0) { return {layer, true, c0, c}; }

LinearConstraint gt0(VarCoeffs c, int c0 = 0) { return {c0, c, Relation::positive}; }
LinearConstraint ge0(VarCoeffs c, int c0 = 0) { return {c0, c, Relation::nonnegative}; }
LinearConstraint ne0(VarCoeffs c, int c0 = 0) { return {c0, c, Relation::nonzero}; }

WeightTerm wt(mpq_class c, VarCoeffs p = {}) { return {std::move(c), p}; }

FermionTemplate tmpl(int num_vars, std::vector<FermionFactor> f, std::vector<WeightTerm> w,
                     std::vector<LinearConstraint> cons, Kinds kinds = kAllHalf) {
    FermionTemplate t;
    t.num_vars = num_vars;
    t.factors = std::move(f);
    t.weight = std::move(w);
    t.constraints = std::move(cons);
    t.kinds = kinds;
    return t;
}

// Five-case form; variables (n, k, r) for cases I-III and (r, k, s) for IV-V.
std::vector<FermionTemplate> ht_cases(bool printed_first_case) {
    std::vector<FermionTemplate> out;
    const Kinds nkr{kInt, kHalf, kHalf, kHalf, kHalf};
    const auto n_ge_1 = ge0({1, 0, 0}, -2);
    const auto k_gt_r = gt0({0, 1, -1});
    const auto r_gt_0 = gt0({0, 0, 1});
    const auto n_le_r = ge0({-1, 0, 1}, -1);  // r - 1/2 - n >= 0
    // I: two columns r < k become k+n and r-n.
    {
        std::vector<FermionFactor> f{psis({-1, -1, 0}), psis({1, 0, -1})};
        if (printed_first_case) {
            f.push_back(psi({0, 0, 1}));
            f.push_back(psi({0, 1, 0}));
        } else {
            f.push_back(psi({0, 1, 0}));
            f.push_back(psi({0, 0, 1}));
        }
        out.push_back(tmpl(3, f, {wt(2, {0, 1, 0}), wt(-2, {0, 0, 1})}, {n_ge_1, k_gt_r, r_gt_0, n_le_r}, nkr));
    }
    // II: two rows r < k become k-n and r+n, with 2n <= k - r - 1.
    out.push_back(tmpl(3, {psi({1, -1, 0}), psi({-1, 0, -1}), psis({0, 0, 1}), psis({0, 1, 0})},
                       {wt(2, {0, 0, 1}), wt(-2, {0, 1, 0}), wt(4, {1, 0, 0})},
                       {n_ge_1, k_gt_r, r_gt_0, ge0({-2, 1, -1}, -2)}, nkr));
    // III: a row r and a column k become a row r-n and a column k+n.
    out.push_back(tmpl(3, {psi({1, 0, -1}), psis({-1, -1, 0}), psi({0, 1, 0}), psis({0, 0, 1})},
                       {wt(2, {0, 1, 0}), wt(2, {0, 0, 1}), wt(-2, {1, 0, 0})},
                       {n_ge_1, gt0({0, 1, 0}), r_gt_0, n_le_r}, nkr));
    // IV and V: variables (r, k, s).
    const auto kr = gt0({-1, 1, 0});
    const auto r0 = gt0({1, 0, 0});
    const auto s0 = gt0({0, 0, 1});
    out.push_back(tmpl(3, {psis({-1, -1, -1}), psi({1, 0, 0}), psi({0, 1, 0}), psis({0, 0, 1})},
                       {wt(2, {1, 0, 0}), wt(-2, {0, 1, 0})}, {kr, r0, s0}));
    out.push_back(tmpl(3, {psi({0, -1, 0}), psis({0, 0, -1}), psi({-1, 0, 0}), psis({1, 1, 1})},
                       {wt(2, {0, 1, 0}), wt(-2, {1, 0, 0})}, {kr, r0, s0}));
    return out;
}

}  // namespace

int charge(const FermionState& s) { return popcount(s.psi) - popcount(s.psi_star); }

FermionState fermion_state(const Partition& lambda) {
    const FrobeniusCoords f = frobenius(lambda);
    FermionState s;
    for (int i = 0; i < f.d(); ++i) {
        if (f.arms[i] >= kMaxModes || f.legs[i] >= kMaxModes) throw std::overflow_error("partition too large");
        s.psi |= 1ull << f.arms[i];
        s.psi_star |= 1ull << f.legs[i];
    }
    return s;
}

Partition partition_of(const FermionState& s) {
    if (charge(s) != 0) throw std::invalid_argument("state has nonzero charge");
    FrobeniusCoords f;
    for (int j = kMaxModes - 1; j >= 0; --j) {
        if (s.psi >> j & 1u) f.arms.push_back(j);
        if (s.psi_star >> j & 1u) f.legs.push_back(j);
    }
    return from_frobenius(f);
}

int maya_sign(const Partition& lambda) {
    long s = 0;
    for (int b : frobenius(lambda).legs) s += b;
    return s % 2 ? -1 : 1;
}

int maya_to_grouped_sign(const Partition& lambda) {
    const int d = lambda.diagonal_length();
    return ((d * (d - 1) / 2) % 2 ? -1 : 1) * maya_sign(lambda);
}

MayaState maya_from_partition(const Partition& lambda) {
    const FrobeniusCoords f = frobenius(lambda);
    MayaState m;
    m.partition = lambda;
    m.sign = maya_sign(lambda);
    for (int a : f.arms) m.psi.push_back(2 * a + 1);
    for (int b : f.legs) m.psi_star.push_back(2 * b + 1);
    return m;
}

Partition partition_from_maya(const MayaState& m) {
    FrobeniusCoords f;
    for (int x : m.psi) {
        if (x <= 0 || x % 2 == 0) throw std::invalid_argument("psi modes must be positive odd doubled labels");
        f.arms.push_back((x - 1) / 2);
    }
    for (int x : m.psi_star) {
        if (x <= 0 || x % 2 == 0) throw std::invalid_argument("psi* modes must be positive odd doubled labels");
        f.legs.push_back((x - 1) / 2);
    }
    Partition p = from_frobenius(f);
    if (maya_sign(p) != m.sign) throw std::invalid_argument("Maya sign does not match the modes");
    if (!m.partition.empty() && !(m.partition == p)) throw std::invalid_argument("Maya modes disagree with partition");
    return p;
}

FermionOperator FermionOperator::operator+(const FermionOperator& o) const {
    if (layers != o.layers) throw std::invalid_argument("adding fermionic operators on different layer counts");
    FermionOperator r = *this;
    r.name = name + "+" + o.name;
    r.templates.insert(r.templates.end(), o.templates.begin(), o.templates.end());
    return r;
}

FermionOperator FermionOperator::scaled(const ParamScalar& s) const {
    FermionOperator r = *this;
    for (auto& t : r.templates) t.coeff *= s;
    return r;
}

FermionKind fermion_kind_from_name(const std::string& name) {
    if (name == "H0") return FermionKind::H0;
    if (name == "Hd") return FermionKind::Hd;
    if (name == "Ht") return FermionKind::Ht;
    if (name == "Ht_as_printed") return FermionKind::Ht_as_printed;
    if (name == "Ht_cases") return FermionKind::Ht_cases;
    if (name == "Ht_cases_as_printed") return FermionKind::Ht_cases_as_printed;
    if (name == "boson_mode") return FermionKind::boson_mode;
    if (name == "virasoro") return FermionKind::virasoro;
    throw std::invalid_argument("unknown fermionic operator '" + name + "'");
}

FermionOperator build_fermionic(FermionKind kind, int n) {
    FermionOperator op;
    const auto k_pos = gt0({1, 0, 0});
    switch (kind) {
        case FermionKind::H0:
            op.name = "H0";
            op.templates.push_back(tmpl(1, {psi({-1, 0, 0}), psis({1, 0, 0})}, {wt(1, {2, 0, 0}), wt(mpq_class(3, 4))}, {k_pos}));
            op.templates.push_back(tmpl(1, {psis({-1, 0, 0}), psi({1, 0, 0})}, {wt(-1, {2, 0, 0}), wt(mpq_class(-3, 4))}, {k_pos}));
            break;
        case FermionKind::Hd:
            op.name = "Hd";
            // (1/3)(k - 1/2) psi_{-k} psi*_k
            op.templates.push_back(tmpl(1, {psi({-1, 0, 0}), psis({1, 0, 0})},
                                        {wt(mpq_class(1, 3), {1, 0, 0}), wt(mpq_class(-1, 6))}, {k_pos}));
            // (k - 1/2)(k + 1/6) psi*_{-k} psi_k
            op.templates.push_back(tmpl(1, {psis({-1, 0, 0}), psi({1, 0, 0})},
                                        {wt(1, {2, 0, 0}), wt(mpq_class(-1, 3), {1, 0, 0}), wt(mpq_class(-1, 12))},
                                        {k_pos}));
            // (2/3)(2k + l) :psi_{-l} psi*_{-k} psi_k psi*_l:, variables (k, l)
            op.templates.push_back(tmpl(2, {psi({0, -1, 0}), psis({-1, 0, 0}), psi({1, 0, 0}), psis({0, 1, 0})},
                                        {wt(mpq_class(4, 3), {1, 0, 0}), wt(mpq_class(2, 3), {0, 1, 0})},
                                        {gt0({1, 1, 0})}));
            break;
        case FermionKind::Ht:
        case FermionKind::Ht_as_printed: {
            op.name = kind == FermionKind::Ht ? "Ht" : "Ht_as_printed";
            // (2k + (2/3)(s + l)) :psi_{-s-k-l} psi*_s psi_k psi*_l:, variables (s, k, l)
            std::vector<LinearConstraint> cons{gt0({0, 1, 1})};
            if (kind == FermionKind::Ht) cons.push_back(ne0({1, 1, 0}));
            op.templates.push_back(tmpl(3, {psi({-1, -1, -1}), psis({1, 0, 0}), psi({0, 1, 0}), psis({0, 0, 1})},
                                        {wt(2, {0, 1, 0}), wt(mpq_class(2, 3), {1, 0, 0}), wt(mpq_class(2, 3), {0, 0, 1})},
                                        cons));
            break;
        }
        case FermionKind::Ht_cases:
        case FermionKind::Ht_cases_as_printed:
            op.name = kind == FermionKind::Ht_cases ? "Ht_cases" : "Ht_cases_as_printed";
            op.templates = ht_cases(kind == FermionKind::Ht_cases_as_printed);
            break;
        case FermionKind::boson_mode:
            op.name = "boson_mode(" + std::to_string(n) + ")";
            op.templates.push_back(tmpl(1, {psi({-1, 0, 0}, 2 * n), psis({1, 0, 0})}, {wt(1)}, {}));
            break;
        case FermionKind::virasoro:
            op.name = "virasoro(" + std::to_string(n) + ")";
            op.templates.push_back(tmpl(1, {psi({-1, 0, 0}), psis({1, 0, 0}, 2 * n)},
                                        {wt(1, {1, 0, 0}), wt(mpq_class(n, 2))}, {}));
            break;
    }
    return op;
}

FermionOperator fermion_mode(bool star, int doubled_index, int layer, int layers) {
    if (doubled_index % 2 == 0) throw std::invalid_argument("fermion modes are half-integers");
    FermionOperator op;
    op.name = std::string(star ? "psi*" : "psi") + "(" + std::to_string(doubled_index) + "/2)";
    op.layers = layers;
    FermionTemplate t;
    t.num_vars = 0;
    t.factors.push_back(FermionFactor{layer, star, doubled_index, {}});
    t.normal_order = false;
    op.templates.push_back(std::move(t));
    return op;
}

namespace {

bool occupied(const FermionState& s, bool psi_family, int j) {
    if (j >= kMaxModes) return false;
    return ((psi_family ? s.psi : s.psi_star) >> j) & 1u;
}

struct Enumerator {
    const FermionTemplate& t;
    const FermionMulti& state;
    std::vector<std::vector<int>> values;
    std::vector<std::vector<std::size_t>> factors_at;      // factors fixed once var i is set
    std::vector<std::vector<std::size_t>> constraints_at;  // same for constraints
    std::map<FermionMulti, mpq_class> acc;
    VarCoeffs var{};
    std::vector<int> idx;

    // An annihilator must find its mode in the input state, since all
    // annihilators act first after normal ordering.
    bool factor_ok(std::size_t i) {
        const auto& f = t.factors[i];
        idx[i] = linear(f.c0, f.c, var);
        if (idx[i] == 0) return false;
        if (!t.normal_order || idx[i] < 0) return true;
        // psi_x (x > 0) removes a psi* particle, psi*_x removes a psi particle.
        return occupied(state[static_cast<std::size_t>(f.layer)], f.star, (idx[i] - 1) / 2);
    }

    bool fixed_ok(std::size_t level) {
        for (auto i : factors_at[level])
            if (!factor_ok(i)) return false;
        for (auto c : constraints_at[level])
            if (!satisfied(t.constraints[c], var)) return false;
        return true;
    }

    void leaf() {
        const std::size_t nf = t.factors.size();
        std::vector<std::size_t> order(nf);
        for (std::size_t i = 0; i < nf; ++i) order[i] = i;
        int sign = 1;
        if (t.normal_order) {
            // Sign of moving creators left, counted within each layer.
            int inversions = 0;
            for (std::size_t i = 0; i < nf; ++i)
                for (std::size_t j = i + 1; j < nf; ++j)
                    if (idx[i] > 0 && idx[j] < 0 && t.factors[i].layer == t.factors[j].layer) ++inversions;
            if (inversions % 2) sign = -1;
            std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return idx[i] < 0; });
        }
        FermionMulti s = state;
        for (std::size_t pos = nf; pos-- > 0;) {
            const std::size_t i = order[pos];
            const int sg = apply_mode(s[static_cast<std::size_t>(t.factors[i].layer)], t.factors[i].star, idx[i]);
            if (sg == 0) return;
            sign *= sg;
        }
        const mpq_class w = eval_weight(t.weight, var);
        if (w == 0) return;
        if (sign > 0) acc[s] += w;
        else acc[s] -= w;
    }

    void run(int i) {
        if (i == t.num_vars) {
            leaf();
            return;
        }
        for (int v : values[static_cast<std::size_t>(i)]) {
            var[static_cast<std::size_t>(i)] = v;
            if (fixed_ok(static_cast<std::size_t>(i) + 1)) run(i + 1);
        }
        var[static_cast<std::size_t>(i)] = 0;
    }
};

}  // namespace

FockVector<FermionMulti> apply_to_fermion_state(const FermionOperator& op, const FermionMulti& state) {
    if (static_cast<int>(state.size()) != op.layers) throw std::invalid_argument("state has wrong number of layers");
    if (static_cast<int>(state.size()) < 1) throw std::invalid_argument("no layers");
    int size2 = 0;
    for (const auto& s : state) size2 += mode_size(s);

    FockVector<FermionMulti> out;
    for (const auto& t : op.templates) {
        if (t.num_vars < 0 || t.num_vars > kFermionVars) throw std::invalid_argument("bad variable count");
        for (const auto& f : t.factors)
            if (f.layer < 0 || f.layer >= op.layers) throw std::invalid_argument("factor layer out of range");
        int c0sum = 0;
        for (const auto& f : t.factors) c0sum += std::abs(f.c0);
        for (const auto& c : t.constraints) c0sum += std::abs(c.c0);
        const int bound = 2 * size2 + c0sum + 4;

        Enumerator e{t, state, {}, {}, {}, {}, {}, std::vector<int>(t.factors.size())};
        e.values.resize(static_cast<std::size_t>(t.num_vars));
        for (int i = 0; i < t.num_vars; ++i) {
            const int parity = t.kinds[static_cast<std::size_t>(i)] == VarKind::half_integer ? 1 : 0;
            for (int x = -bound; x <= bound; ++x)
                if (std::abs(x) % 2 == parity) e.values[static_cast<std::size_t>(i)].push_back(x);
        }
        // Slot 0 holds items that depend on no variable; slot i+1 those fixed by var i.
        e.factors_at.resize(static_cast<std::size_t>(t.num_vars) + 1);
        e.constraints_at.resize(static_cast<std::size_t>(t.num_vars) + 1);
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            const int lv = last_var(t.factors[i].c);
            if (lv >= t.num_vars) throw std::invalid_argument("factor uses an undeclared variable");
            e.factors_at[static_cast<std::size_t>(lv + 1)].push_back(i);
        }
        for (std::size_t i = 0; i < t.constraints.size(); ++i) {
            const int lv = last_var(t.constraints[i].c);
            if (lv >= t.num_vars) throw std::invalid_argument("constraint uses an undeclared variable");
            e.constraints_at[static_cast<std::size_t>(lv + 1)].push_back(i);
        }
        if (e.fixed_ok(0)) e.run(0);
        for (const auto& [s, a] : e.acc)
            if (a != 0) out.add(s, t.coeff.scaled(a));
    }
    return out;
}

FockVector<FermionState> apply_fermionic(const FermionOperator& op, const FockVector<FermionState>& v) {
    if (op.layers != 1) throw std::invalid_argument("single-layer vector with a multi-layer operator");
    FockVector<FermionState> out;
    for (const auto& [s, c] : v)
        for (const auto& [r, a] : apply_to_fermion_state(op, {s})) out.add(r[0], a * c);
    return out;
}

PartitionVector apply_fermionic(const FermionOperator& op, const PartitionVector& v) {
    if (op.layers != 1) throw std::invalid_argument("single-layer vector with a multi-layer operator");
    PartitionVector out;
    for (const auto& [lam, c] : v) {
        const ParamScalar cg = maya_to_grouped_sign(lam) > 0 ? c : -c;
        for (const auto& [r, a] : apply_to_fermion_state(op, {fermion_state(lam)})) {
            const Partition mu = partition_of(r[0]);
            const ParamScalar x = a * cg;
            out.add(mu, maya_to_grouped_sign(mu) > 0 ? x : -x);
        }
    }
    return out;
}

BiVector apply_fermionic(const FermionOperator& op, const BiVector& v) {
    if (op.layers != 2) throw std::invalid_argument("two-layer vector needs a two-layer operator");
    BiVector out;
    for (const auto& [bp, c] : v) {
        const int sg_in = maya_to_grouped_sign(bp.layer1) * maya_to_grouped_sign(bp.layer2);
        const ParamScalar cg = sg_in > 0 ? c : -c;
        for (const auto& [r, a] : apply_to_fermion_state(op, {fermion_state(bp.layer1), fermion_state(bp.layer2)})) {
            BiPartition o{partition_of(r[0]), partition_of(r[1])};
            const int sg = maya_to_grouped_sign(o.layer1) * maya_to_grouped_sign(o.layer2);
            const ParamScalar x = a * cg;
            out.add(o, sg > 0 ? x : -x);
        }
    }
    return out;
}

LabeledMatrix<Partition> fermionic_matrix(const FermionOperator& op, int k_in, int k_out) {
    LabeledMatrix<Partition> m;
    m.col_basis = enumerate_level(k_in);
    m.row_basis = enumerate_level(k_out);
    std::map<Partition, std::size_t> row;
    for (std::size_t i = 0; i < m.row_basis.size(); ++i) row.emplace(m.row_basis[i], i);
    m.entries = ScalarMatrix(m.row_basis.size(), m.col_basis.size());
    for (std::size_t j = 0; j < m.col_basis.size(); ++j) {
        const auto img = apply_fermionic(op, PartitionVector::basis(m.col_basis[j]));
        for (const auto& [mu, a] : img) {
            auto it = row.find(mu);
            if (it == row.end())
                throw std::domain_error(op.name + " leaves level " + std::to_string(k_out));
            m.entries(it->second, j) = a;
        }
    }
    return m;
}

}  // namespace jackfock
