#include "jackfock/boson_fock.hpp"

#include <algorithm>
#include <cstdlib>

namespace jackfock {

namespace {

using MultiState = std::vector<Partition>;

// Per-layer multiplicity tables: mult[layer][part].
using Occupation = std::vector<std::vector<int>>;

Occupation to_occupation(const MultiState& s) {
    Occupation o(s.size());
    for (std::size_t l = 0; l < s.size(); ++l) {
        o[l].assign(static_cast<std::size_t>(s[l].empty() ? 1 : s[l][0] + 1), 0);
        for (int p : s[l].parts()) ++o[l][static_cast<std::size_t>(p)];
    }
    return o;
}

MultiState from_occupation(const Occupation& o) {
    MultiState s;
    for (const auto& layer : o) {
        std::vector<int> parts;
        for (std::size_t p = layer.size(); p-- > 1;)
            for (int c = 0; c < layer[p]; ++c) parts.push_back(static_cast<int>(p));
        s.emplace_back(std::move(parts));
    }
    return s;
}

int template_shift(const ModeTemplate& t, bool& fixed) {
    int cn = 0, cm = 0, c0 = 0;
    for (const auto& f : t.factors) {
        cn += f.cn;
        cm += f.cm;
        c0 += f.c0;
    }
    fixed = cn == 0 && cm == 0;
    return -c0;
}

ModeTemplate sum_template(ParamScalar coeff, int num_vars, std::vector<ModeFactor> factors,
                          std::array<mpq_class, 3> weight = {mpq_class(1), mpq_class(0), mpq_class(0)}) {
    ModeTemplate t;
    t.coeff = std::move(coeff);
    t.num_vars = num_vars;
    t.factors = std::move(factors);
    t.weight = std::move(weight);
    return t;
}

// sum_{n,m>0} a_{-n} a_{-m} a_{n+m}
ModeTemplate split_term(ParamScalar c, int layer) {
    return sum_template(std::move(c), 2, {{layer, 0, -1, 0}, {layer, 0, 0, -1}, {layer, 0, 1, 1}});
}

// sum_{n,m>0} a_{-n-m} a_n a_m
ModeTemplate join_term(ParamScalar c, int layer) {
    return sum_template(std::move(c), 2, {{layer, 0, -1, -1}, {layer, 0, 1, 0}, {layer, 0, 0, 1}});
}

// sum_{n>0} (w0 + wn n) a_{-n} a_n
ModeTemplate number_term(ParamScalar c, int layer, mpq_class w0, mpq_class wn) {
    return sum_template(std::move(c), 1, {{layer, 0, -1, 0}, {layer, 0, 1, 0}}, {std::move(w0), std::move(wn), mpq_class(0)});
}

}  // namespace

std::optional<int> OperatorSpec::level_shift() const {
    std::optional<int> shift;
    for (const auto& t : templates) {
        bool fixed = false;
        const int s = template_shift(t, fixed);
        if (!fixed) return std::nullopt;
        if (shift && *shift != s) return std::nullopt;
        shift = s;
    }
    if (!diagonal.empty()) {
        if (shift && *shift != 0) return std::nullopt;
        shift = 0;
    }
    return shift.value_or(0);
}

OperatorSpec OperatorSpec::operator+(const OperatorSpec& o) const {
    if (layers != o.layers) throw std::invalid_argument("adding operators on different layer counts");
    OperatorSpec r = *this;
    r.name = name + "+" + o.name;
    r.templates.insert(r.templates.end(), o.templates.begin(), o.templates.end());
    r.diagonal.insert(r.diagonal.end(), o.diagonal.begin(), o.diagonal.end());
    for (std::size_t l = 0; l < o.zero_modes.size(); ++l) {
        if (r.zero_modes.size() <= l) r.zero_modes.resize(l + 1);
        if (!o.zero_modes[l].is_zero()) {
            if (!r.zero_modes[l].is_zero() && r.zero_modes[l] != o.zero_modes[l])
                throw std::invalid_argument("conflicting zero-mode values");
            r.zero_modes[l] = o.zero_modes[l];
        }
    }
    return r;
}

OperatorSpec OperatorSpec::scaled(const ParamScalar& s) const {
    OperatorSpec r = *this;
    for (auto& t : r.templates) t.coeff *= s;
    if (!r.diagonal.empty()) throw std::invalid_argument("cannot scale a diagonal length-power term");
    return r;
}

OperatorKind operator_kind_from_name(const std::string& name) {
    if (name == "cs_deformed") return OperatorKind::cs_deformed;
    if (name == "cs_raw") return OperatorKind::cs_raw;
    if (name == "laughlin") return OperatorKind::laughlin;
    if (name == "level") return OperatorKind::level;
    if (name == "similarity_D") return OperatorKind::similarity_D;
    if (name == "similarity_DLau") return OperatorKind::similarity_DLau;
    throw std::invalid_argument("unknown operator kind '" + name + "'");
}

OperatorSpec build_operator(OperatorKind kind, const OperatorParams& params) {
    const ParamScalar b = ParamScalar::symbol(params.coupling);
    const ParamScalar b2 = b * b;
    const int l = params.layer;
    OperatorSpec op;
    op.layers = params.layers;
    if (l < 0 || l >= op.layers) throw std::invalid_argument("layer out of range");
    switch (kind) {
        case OperatorKind::cs_deformed: {
            op.name = "cs_deformed";
            const ParamScalar g = 1 - b2;
            op.templates = {split_term(1, l), join_term(1, l), number_term(g, l, 0, 1), split_term(-g, l)};
            break;
        }
        case OperatorKind::cs_raw: {
            op.name = "cs_raw";
            op.templates = {split_term(b, l), join_term(b, l), number_term(1 - b2, l, 0, 1)};
            break;
        }
        case OperatorKind::laughlin: {
            const ParamScalar g = 1 - b2 / 2;
            if (params.deformed) {
                op.name = "laughlin_deformed";
                op.templates = {split_term(1, l), join_term(1, l), number_term(g, l, 0, 1), split_term(-g, l)};
            } else {
                op.name = "laughlin";
                op.templates = {number_term(g, l, 0, 1), split_term(b, l), join_term(b / 2, l)};
            }
            break;
        }
        case OperatorKind::level: {
            op.name = "level";
            op.templates = {number_term(1, l, 1, 0)};
            break;
        }
        case OperatorKind::similarity_D:
        case OperatorKind::similarity_DLau: {
            const bool lau = kind == OperatorKind::similarity_DLau;
            op.name = lau ? "similarity_DLau" : "similarity_D";
            const ParamScalar g = lau ? b / 2 : b;
            LengthPowerTerm t;
            t.base.assign(static_cast<std::size_t>(op.layers), ParamScalar(1));
            t.base[static_cast<std::size_t>(l)] = params.inverse ? g : g.inverse();
            op.diagonal.push_back(std::move(t));
            break;
        }
    }
    if (params.background_N) {
        if (kind != OperatorKind::cs_deformed && kind != OperatorKind::cs_raw)
            throw std::invalid_argument("background term only defined for CS operators");
        op.templates.push_back(number_term(b2 * ParamScalar(*params.background_N), l, 1, 0));
    }
    return op;
}

OperatorSpec mode_word(const std::vector<int>& indices, int layer, int layers) {
    OperatorSpec op;
    op.name = "word";
    op.layers = layers;
    ModeTemplate t;
    t.num_vars = 0;
    for (int i : indices) t.factors.push_back({layer, i, 0, 0});
    op.templates.push_back(std::move(t));
    return op;
}

OperatorSpec virasoro_boson(int n) {
    OperatorSpec op;
    op.name = "virasoro";
    ModeTemplate t;
    t.coeff = ParamScalar(mpq_class(1, 2));
    t.num_vars = 1;
    t.lower = {std::nullopt, std::nullopt};
    t.factors = {{0, n, -1, 0}, {0, 0, 1, 0}};
    t.normal_order = true;
    op.templates.push_back(std::move(t));
    return op;
}

FockVector<MultiState> apply_to_state(const OperatorSpec& op, const MultiState& state) {
    if (static_cast<int>(state.size()) != op.layers) throw std::invalid_argument("state has wrong number of layers");
    int k_in = 0;
    for (const auto& p : state) k_in += p.weight();
    const Occupation occ0 = to_occupation(state);

    FockVector<MultiState> out;
    for (const auto& t : op.templates) {
        bool fixed = false;
        const int shift = template_shift(t, fixed);
        if (!fixed) throw std::invalid_argument("template without a fixed level shift");
        int c0sum = 0;
        for (const auto& f : t.factors) c0sum += std::abs(f.c0);
        const int bound = 2 * (k_in + std::abs(shift) + c0sum) + 2;
        const int lo_n = t.num_vars >= 1 ? t.lower[0].value_or(-bound) : 0;
        const int hi_n = t.num_vars >= 1 ? bound : 0;
        const int lo_m = t.num_vars >= 2 ? t.lower[1].value_or(-bound) : 0;
        const int hi_m = t.num_vars >= 2 ? bound : 0;

        std::map<MultiState, mpq_class> plain;
        std::map<MultiState, ParamScalar> with_zero;
        std::vector<int> idx(t.factors.size());
        std::vector<std::size_t> order(t.factors.size());
        for (int n = lo_n; n <= hi_n; ++n)
            for (int m = lo_m; m <= hi_m; ++m) {
                const mpq_class w = t.weight[0] + t.weight[1] * n + t.weight[2] * m;
                if (w == 0) continue;
                for (std::size_t i = 0; i < t.factors.size(); ++i) {
                    const auto& f = t.factors[i];
                    idx[i] = f.c0 + f.cn * n + f.cm * m;
                    order[i] = i;
                }
                if (t.normal_order)
                    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return idx[i] < 0; });
                Occupation occ = occ0;
                mpq_class amp = w;
                ParamScalar zero_factor(1);
                bool has_zero = false, dead = false;
                for (std::size_t pos = order.size(); pos-- > 0 && !dead;) {
                    const std::size_t i = order[pos];
                    auto& layer = occ[static_cast<std::size_t>(t.factors[i].layer)];
                    const int j = idx[i];
                    if (j > 0) {
                        if (static_cast<std::size_t>(j) >= layer.size() || layer[static_cast<std::size_t>(j)] == 0) {
                            dead = true;
                            break;
                        }
                        amp *= j * layer[static_cast<std::size_t>(j)];
                        --layer[static_cast<std::size_t>(j)];
                    } else if (j < 0) {
                        if (layer.size() <= static_cast<std::size_t>(-j)) layer.resize(static_cast<std::size_t>(-j) + 1, 0);
                        ++layer[static_cast<std::size_t>(-j)];
                    } else {
                        const auto lz = static_cast<std::size_t>(t.factors[i].layer);
                        if (lz >= op.zero_modes.size() || op.zero_modes[lz].is_zero()) {
                            dead = true;
                            break;
                        }
                        zero_factor *= op.zero_modes[lz];
                        has_zero = true;
                    }
                }
                if (dead) continue;
                MultiState s = from_occupation(occ);
                if (has_zero) {
                    auto it = with_zero.find(s);
                    ParamScalar add = zero_factor.scaled(amp);
                    if (it == with_zero.end()) with_zero.emplace(std::move(s), std::move(add));
                    else it->second += add;
                } else {
                    plain[std::move(s)] += amp;
                }
            }
        for (const auto& [s, a] : plain)
            if (a != 0) out.add(s, t.coeff.scaled(a));
        for (const auto& [s, a] : with_zero) out.add(s, t.coeff * a);
    }
    for (const auto& d : op.diagonal) {
        ParamScalar f(1);
        for (std::size_t l = 0; l < state.size() && l < d.base.size(); ++l) f *= d.base[l].pow(state[l].length());
        out.add(state, f);
    }
    return out;
}

PartitionVector apply_operator(const OperatorSpec& op, const PartitionVector& v) {
    if (op.layers != 1) throw std::invalid_argument("single-layer vector with a multi-layer operator");
    PartitionVector out;
    for (const auto& [lam, c] : v) {
        const auto img = apply_to_state(op, {lam});
        for (const auto& [s, a] : img) out.add(s[0], a * c);
    }
    return out;
}

BiVector apply_operator(const OperatorSpec& op, const BiVector& v) {
    if (op.layers != 2) throw std::invalid_argument("two-layer vector needs a two-layer operator");
    BiVector out;
    for (const auto& [bp, c] : v) {
        const auto img = apply_to_state(op, {bp.layer1, bp.layer2});
        for (const auto& [s, a] : img) out.add(BiPartition{s[0], s[1]}, a * c);
    }
    return out;
}

LabeledMatrix<Partition> operator_matrix(const OperatorSpec& op, int k_in, int k_out) {
    if (op.layers != 1) throw std::invalid_argument("operator_matrix needs a single-layer operator");
    LabeledMatrix<Partition> m;
    m.col_basis = enumerate_level(k_in);
    m.row_basis = enumerate_level(k_out);
    std::map<Partition, std::size_t> row;
    for (std::size_t i = 0; i < m.row_basis.size(); ++i) row.emplace(m.row_basis[i], i);
    m.entries = ScalarMatrix(m.row_basis.size(), m.col_basis.size());
    for (std::size_t j = 0; j < m.col_basis.size(); ++j) {
        const auto img = apply_to_state(op, {m.col_basis[j]});
        for (const auto& [s, a] : img) {
            auto it = row.find(s[0]);
            if (it == row.end())
                throw LevelLeakError(op.name + " maps level " + std::to_string(k_in) + " outside level " +
                                     std::to_string(k_out));
            m.entries(it->second, j) = a;
        }
    }
    return m;
}

LabeledMatrix<Partition> operator_matrix(const OperatorSpec& op, int k) {
    const auto shift = op.level_shift();
    if (!shift || *shift != 0) throw LevelLeakError(op.name + " does not conserve the level");
    return operator_matrix(op, k, k);
}

}  // namespace jackfock
