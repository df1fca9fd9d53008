#include "jackfock/halperin.hpp"

#include "jackfock/spectral_solver.hpp"
#include "jackfock/symfunc.hpp"

#include <map>
#include <mutex>
#include <set>

namespace jackfock {

namespace {

ParamScalar sym(Symbol s) { return ParamScalar::symbol(s); }

Symbol layer_symbol(int layer) { return layer == 0 ? Symbol::u : Symbol::v; }

// Monic Laughlin Jack (Schur basis) with b renamed to the layer's symbol.
const PartitionVector& layer_jack(const Partition& lambda, int layer) {
    static std::mutex mu;
    static std::map<std::pair<int, Partition>, PartitionVector> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(layer, lambda);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const ParamScalar s = sym(layer_symbol(layer));
    const PartitionVector v = eigenstate(Model::laughlin, lambda).vector.map_coefficients(
        [&](const Partition&, const ParamScalar& c) { return substitute(c, Symbol::b, s); });
    return cache.emplace(key, v).first->second;
}

// Raw a-mode form of a Schur-basis Laughlin vector on one layer: a~ -> a via (s/2)^{-l}.
PartitionVector layer_raw(const PartitionVector& schur, int degree, int layer) {
    const ParamScalar g = sym(layer_symbol(layer)).scaled(mpq_class(1, 2));
    const auto p = convert(SymmetricPolynomial{degree, SymBasis::schur, schur}, SymBasis::powersum).coeffs;
    return p.map_coefficients([&](const Partition& mu, const ParamScalar& c) { return c / g.pow(mu.length()); });
}

const Partition& layer_of(const BiPartition& b, int layer) { return layer == 0 ? b.layer1 : b.layer2; }

BiPartition with_layer(const BiPartition& b, int layer, const Partition& p) {
    return layer == 0 ? BiPartition{p, b.layer2} : BiPartition{b.layer1, p};
}

// Applies f to every single-layer slice of v (other layer's label and this layer's degree fixed).
template <class F>
BiVector transform_layer(const BiVector& v, int layer, F&& f) {
    std::map<std::pair<Partition, int>, PartitionVector> groups;
    for (const auto& [bp, c] : v) groups[{layer_of(bp, 1 - layer), layer_of(bp, layer).weight()}].add(layer_of(bp, layer), c);
    BiVector out;
    for (const auto& [key, slice] : groups) {
        const PartitionVector img = f(slice, key.second);
        BiPartition proto = layer == 0 ? BiPartition{Partition(), key.first} : BiPartition{key.first, Partition()};
        for (const auto& [p, c] : img) out.add(with_layer(proto, layer, p), c);
    }
    return out;
}

PartitionVector jack_coefficients(PartitionVector schur, int layer) {
    PartitionVector out;
    while (!schur.is_zero()) {
        const auto [nu, c] = *schur.begin();
        out.add(nu, c);
        schur.add(layer_jack(nu, layer), -c);
    }
    return out;
}

ModeTemplate htemplate(ParamScalar coeff, std::array<std::optional<int>, 2> lower, std::vector<ModeFactor> f) {
    ModeTemplate t;
    t.coeff = std::move(coeff);
    t.num_vars = 2;
    t.lower = lower;
    t.factors = std::move(f);
    return t;
}

}  // namespace

OperatorSpec build_halperin_interaction(long N1, int part) {
    if (part < 0 || part > 2) throw std::invalid_argument("interaction part must be 0, 1 or 2");
    const ParamScalar u = sym(Symbol::u), v = sym(Symbol::v), r = sym(Symbol::r);
    OperatorSpec op;
    op.name = "H_int";
    op.layers = 2;
    op.zero_modes = {u * ParamScalar(N1), ParamScalar()};
    // 2r/v sum_{n>=0, m>0} a1_{-n} a1_{n-m} a2_m
    if (part != 2)
        op.templates.push_back(htemplate(r * 2 / v, {0, 1}, {{0, 0, -1, 0}, {0, 0, 1, -1}, {1, 0, 0, 1}}));
    // -2r/u sum_{n,m>0} a1_{-m} a2_{-n} a2_{n+m}
    if (part != 1)
        op.templates.push_back(htemplate(-r * 2 / u, {1, 1}, {{0, 0, 0, -1}, {1, 0, -1, 0}, {1, 0, 1, 1}}));
    return op;
}

OperatorSpec build_halperin_free() {
    OperatorParams p1;
    p1.coupling = Symbol::u;
    p1.layer = 0;
    p1.layers = 2;
    OperatorParams p2 = p1;
    p2.coupling = Symbol::v;
    p2.layer = 1;
    return build_operator(OperatorKind::laughlin, p1) + build_operator(OperatorKind::laughlin, p2);
}

OperatorSpec build_halperin(long N1) {
    OperatorSpec op = build_halperin_free() + build_halperin_interaction(N1);
    op.name = "H_Hal";
    return op;
}

std::vector<BiPartition> bilevel_basis(int k1, int k2) {
    std::vector<BiPartition> out;
    for (const auto& a : enumerate_level(k1))
        for (const auto& b : enumerate_level(k2)) out.push_back({a, b});
    return out;
}

std::vector<BiPartition> total_level_basis(int k) {
    std::vector<BiPartition> out;
    for (int k1 = 0; k1 <= k; ++k1) {
        const auto part = bilevel_basis(k1, k - k1);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

ParamScalar halperin_energy(const Partition& lambda, const Partition& mu) {
    const ParamScalar p = sym(Symbol::u).pow(2), q = sym(Symbol::v).pow(2);
    return ParamScalar(row_square_sum(lambda) + row_square_sum(mu)) -
           p * ParamScalar(mpq_class(hd_energy(lambda), 2)) - q * ParamScalar(mpq_class(hd_energy(mu), 2));
}

BiVector bijack_state(const Partition& lambda, const Partition& mu) {
    const PartitionVector a = layer_raw(layer_jack(lambda, 0), lambda.weight(), 0);
    const PartitionVector b = layer_raw(layer_jack(mu, 1), mu.weight(), 1);
    BiVector out;
    for (const auto& [x, c] : a)
        for (const auto& [y, d] : b) out.add({x, y}, c * d);
    return out;
}

BiVector bijack_decompose(const BiVector& raw) {
    BiVector v = raw;
    for (int layer = 0; layer < 2; ++layer) {
        const ParamScalar g = sym(layer_symbol(layer)).scaled(mpq_class(1, 2));
        v = transform_layer(v, layer, [&](const PartitionVector& slice, int degree) {
            const PartitionVector tilde =
                slice.map_coefficients([&](const Partition& mu, const ParamScalar& c) { return c * g.pow(mu.length()); });
            const auto s = convert(SymmetricPolynomial{degree, SymBasis::powersum, tilde}, SymBasis::schur).coeffs;
            return jack_coefficients(s, layer);
        });
    }
    return v;
}

HalperinState omega_eigenstate(const Partition& lambda, const Partition& mu, long N1) {
    HalperinState st;
    st.label = {lambda, mu};
    st.energy = halperin_energy(lambda, mu);
    const OperatorSpec hint = build_halperin_interaction(N1);
    BiVector term = bijack_state(lambda, mu);
    st.vector = term;
    std::set<BiPartition> used;
    // H_int lowers the layer-2 level at every step.
    for (int step = 0; step <= mu.weight() && !term.is_zero(); ++step) {
        const BiVector img = apply_operator(hint, term);
        BiVector next;
        for (const auto& [ab, c] : bijack_decompose(img)) {
            const ParamScalar gap = st.energy - halperin_energy(ab.layer1, ab.layer2);
            if (gap.is_zero())
                throw ResonanceError(gap.num(), "resonance: bi-Jack " + ab.layer1.to_string() + "," +
                                                    ab.layer2.to_string() + " has the energy of the target state");
            used.insert(ab);
            next.add(bijack_state(ab.layer1, ab.layer2), c / gap);
        }
        term = next;
        st.vector.add(term);
    }
    if (!term.is_zero()) throw std::logic_error("interaction series did not terminate");
    st.gaps_used.assign(used.rbegin(), used.rend());
    return st;
}

OperatorSpec build_dhal(bool inverse) {
    OperatorSpec op;
    op.name = "D_Hal";
    op.layers = 2;
    const ParamScalar gu = sym(Symbol::u).scaled(mpq_class(1, 2)), gv = sym(Symbol::v).scaled(mpq_class(1, 2));
    LengthPowerTerm t;
    t.base = inverse ? std::vector<ParamScalar>{gu, gv} : std::vector<ParamScalar>{gu.inverse(), gv.inverse()};
    op.diagonal.push_back(std::move(t));
    return op;
}

namespace {

FermionFactor f_psi(VarCoeffs c, int layer, int c0 = 0) { return {layer, false, c0, c}; }
FermionFactor f_psis(VarCoeffs c, int layer, int c0 = 0) { return {layer, true, c0, c}; }

FermionTemplate ftemplate(int num_vars, std::array<VarKind, kFermionVars> kinds, std::vector<FermionFactor> f,
                          std::vector<LinearConstraint> cons, mpq_class w = 1) {
    FermionTemplate t;
    t.num_vars = num_vars;
    t.kinds = kinds;
    t.factors = std::move(f);
    t.constraints = std::move(cons);
    t.weight = {WeightTerm{std::move(w), {}}};
    return t;
}

constexpr auto H = VarKind::half_integer;
constexpr auto I = VarKind::integer;

// :psi^A_r psi^A*_s psi^A_k psi^A*_l psi^B_{-u} psi^B*_{u-(r+s+k+l)}: over r+s+k+l of the given sign.
FermionTemplate sextic(int quartic_layer, int other_layer, int total_sign, bool first_pair_negative) {
    const int t = total_sign;
    std::vector<LinearConstraint> cons{{0, {t, t, t, t, 0}, Relation::positive}};
    if (first_pair_negative) cons.push_back({0, {-1, -1, 0, 0, 0}, Relation::positive});
    return ftemplate(5, {H, H, H, H, H},
                     {f_psi({1, 0, 0, 0, 0}, quartic_layer), f_psis({0, 1, 0, 0, 0}, quartic_layer),
                      f_psi({0, 0, 1, 0, 0}, quartic_layer), f_psis({0, 0, 0, 1, 0}, quartic_layer),
                      f_psi({0, 0, 0, 0, -1}, other_layer), f_psis({-1, -1, -1, -1, 1}, other_layer)},
                     cons);
}

}  // namespace

// Variables are doubled; an integer m enters mode indices as 2m = var.
FermionicInteraction build_halperin_fermionic_interaction_as_printed() {
    const ParamScalar u = sym(Symbol::u), v = sym(Symbol::v), r = sym(Symbol::r);
    FermionicInteraction out;
    out.first.name = "H_int^1";
    out.first.layers = 2;
    out.second.name = "H_int^2";
    out.second.layers = 2;

    out.first.templates.push_back(sextic(0, 1, -1, false));
    // (psi2_{-u} psi2*_{m+u} - psi2*_{m-u} psi2_u)(psi1_{-r} psi1*_{r-m} + psi1*_{-m-r} psi1_r), vars (u, r, m)
    {
        const std::vector<LinearConstraint> pos{{0, {1, 0, 0, 0, 0}, Relation::positive},
                                                {0, {0, 1, 0, 0, 0}, Relation::positive},
                                                {0, {0, 0, 1, 0, 0}, Relation::positive}};
        const std::array<VarKind, kFermionVars> k{H, H, I, H, H};
        const std::vector<std::pair<std::vector<FermionFactor>, int>> l2{
            {{f_psi({-1, 0, 0, 0, 0}, 1), f_psis({1, 0, 1, 0, 0}, 1)}, 1},
            {{f_psis({-1, 0, 1, 0, 0}, 1), f_psi({1, 0, 0, 0, 0}, 1)}, -1}};
        const std::vector<std::vector<FermionFactor>> l1{
            {f_psi({0, -1, 0, 0, 0}, 0), f_psis({0, 1, -1, 0, 0}, 0)},
            {f_psis({0, -1, -1, 0, 0}, 0), f_psi({0, 1, 0, 0, 0}, 0)}};
        for (const auto& [a, sg] : l2)
            for (const auto& b : l1) {
                std::vector<FermionFactor> f = a;
                f.insert(f.end(), b.begin(), b.end());
                out.first.templates.push_back(ftemplate(3, k, f, pos, sg));
            }
    }
    out.second.templates.push_back(sextic(1, 0, 1, false));
    // (psi1_{-u} psi1*_{-m+u} - psi1*_{-m-u} psi1_u)(psi2_{-r} psi2*_{r+m} + psi2*_{m-r} psi2_r), vars (u, r, m)
    {
        const std::vector<LinearConstraint> pos{{0, {1, 0, 0, 0, 0}, Relation::positive},
                                                {0, {0, 1, 0, 0, 0}, Relation::positive},
                                                {0, {0, 0, 1, 0, 0}, Relation::positive}};
        const std::array<VarKind, kFermionVars> k{H, H, I, H, H};
        const std::vector<std::pair<std::vector<FermionFactor>, int>> l1{
            {{f_psi({-1, 0, 0, 0, 0}, 0), f_psis({1, 0, -1, 0, 0}, 0)}, 1},
            {{f_psis({-1, 0, -1, 0, 0}, 0), f_psi({1, 0, 0, 0, 0}, 0)}, -1}};
        const std::vector<std::vector<FermionFactor>> l2{
            {f_psi({0, -1, 0, 0, 0}, 1), f_psis({0, 1, 1, 0, 0}, 1)},
            {f_psis({0, -1, 1, 0, 0}, 1), f_psi({0, 1, 0, 0, 0}, 1)}};
        for (const auto& [a, sg] : l1)
            for (const auto& b : l2) {
                std::vector<FermionFactor> f = a;
                f.insert(f.end(), b.begin(), b.end());
                out.second.templates.push_back(ftemplate(3, k, f, pos, sg));
            }
    }
    out.first = out.first.scaled(r * 2 / v);
    out.second = out.second.scaled(-r * 2 / u);
    return out;
}

FermionicInteraction build_halperin_fermionic_interaction() {
    const ParamScalar u = sym(Symbol::u), v = sym(Symbol::v), r = sym(Symbol::r);
    FermionicInteraction out;
    out.first.name = "H_int^1";
    out.first.layers = 2;
    out.second.name = "H_int^2";
    out.second.layers = 2;
    out.first.templates.push_back(sextic(0, 1, -1, true));
    out.second.templates.push_back(sextic(1, 0, 1, true));

    // Single contractions of a_X a_Y: sum_{t>0} :psi_{X-t} psi*_{Y+t}: - :psi_{Y+t} psi*_{X-t}:,
    // times the other layer's mode a_Z = sum_w :psi_{-w} psi*_{Z+w}:. Vars (n, m, t, w).
    const std::array<VarKind, kFermionVars> k{I, I, H, H, H};
    const std::vector<LinearConstraint> nmt{{0, {1, 0, 0, 0, 0}, Relation::positive},
                                            {0, {0, 1, 0, 0, 0}, Relation::positive},
                                            {0, {0, 0, 1, 0, 0}, Relation::positive}};
    // First term: X = -n, Y = n - m on layer 0, Z = m on layer 1.
    // Second term: X = -n, Y = n + m on layer 1, Z = -m on layer 0.
    for (int which = 0; which < 2; ++which) {
        const int ql = which == 0 ? 0 : 1, ol = 1 - ql;
        const int ym = which == 0 ? -1 : 1;  // coefficient of m in Y
        const int zm = -ym;                  // Z = -ym * m
        const FermionFactor other_c = f_psi({0, 0, 0, -1, 0}, ol);
        const FermionFactor other_a = f_psis({0, zm, 0, 1, 0}, ol);
        FermionOperator& dst = which == 0 ? out.first : out.second;
        dst.templates.push_back(ftemplate(4, k,
                                          {f_psi({-1, 0, -1, 0, 0}, ql), f_psis({1, ym, 1, 0, 0}, ql), other_c, other_a},
                                          nmt, 1));
        dst.templates.push_back(ftemplate(4, k,
                                          {f_psi({1, ym, 1, 0, 0}, ql), f_psis({-1, 0, -1, 0, 0}, ql), other_c, other_a},
                                          nmt, -1));
    }
    out.first = out.first.scaled(r * 2 / v);
    out.second = out.second.scaled(-r * 2 / u);
    return out;
}

BiVector to_schur_layers(const BiVector& v) {
    BiVector out = v;
    for (int layer = 0; layer < 2; ++layer)
        out = transform_layer(out, layer, [](const PartitionVector& slice, int degree) {
            return convert(SymmetricPolynomial{degree, SymBasis::powersum, slice}, SymBasis::schur).coeffs;
        });
    return out;
}

namespace {

BiVector from_schur_layers(const BiVector& v) {
    BiVector out = v;
    for (int layer = 0; layer < 2; ++layer)
        out = transform_layer(out, layer, [](const PartitionVector& slice, int degree) {
            return convert(SymmetricPolynomial{degree, SymBasis::schur, slice}, SymBasis::powersum).coeffs;
        });
    return out;
}

template <class F>
LabeledMatrix<BiPartition> bimatrix(int k, F&& column) {
    LabeledMatrix<BiPartition> m;
    m.row_basis = m.col_basis = total_level_basis(k);
    std::map<BiPartition, std::size_t> row;
    for (std::size_t i = 0; i < m.row_basis.size(); ++i) row.emplace(m.row_basis[i], i);
    m.entries = ScalarMatrix(m.row_basis.size(), m.col_basis.size());
    for (std::size_t j = 0; j < m.col_basis.size(); ++j)
        for (const auto& [bp, c] : column(m.col_basis[j])) {
            auto it = row.find(bp);
            if (it == row.end()) throw LevelLeakError("operator leaves total level " + std::to_string(k));
            m.entries(it->second, j) = c;
        }
    return m;
}

}  // namespace

LabeledMatrix<BiPartition> bosonic_bimatrix(const OperatorSpec& op, int k) {
    return bimatrix(k, [&](const BiPartition& b) { return apply_operator(op, BiVector::basis(b)); });
}

LabeledMatrix<BiPartition> fermionic_bimatrix(const FermionOperator& op, int k) {
    return bimatrix(k, [&](const BiPartition& b) { return apply_fermionic(op, BiVector::basis(b)); });
}

LabeledMatrix<BiPartition> bosonic_bimatrix_schur(const OperatorSpec& op, int k) {
    return bimatrix(k, [&](const BiPartition& b) {
        return to_schur_layers(apply_operator(op, from_schur_layers(BiVector::basis(b))));
    });
}

}  // namespace jackfock
