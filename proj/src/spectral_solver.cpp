#include "jackfock/spectral_solver.hpp"

#include <map>
#include <mutex>
#include <set>

namespace jackfock {

namespace {

ParamScalar b2() { return ParamScalar::symbol(Symbol::b).pow(2); }

// Ht matrices per level, shared by all eigenstate calls.
const LabeledMatrix<Partition>& ht_matrix(int k) {
    static std::mutex mu;
    static std::map<int, LabeledMatrix<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, fermionic_matrix(build_fermionic(FermionKind::Ht), k)).first;
    return it->second;
}

ParamScalar coherent_scale(Model m) {
    const ParamScalar b = ParamScalar::symbol(Symbol::b);
    return m == Model::cs ? b : b.scaled(mpq_class(1, 2));
}

}  // namespace

const char* model_name(Model m) { return m == Model::cs ? "cs" : "laughlin"; }

Model model_from_name(const std::string& name) {
    if (name == "cs") return Model::cs;
    if (name == "laughlin") return Model::laughlin;
    throw std::invalid_argument("unknown model '" + name + "'");
}

ParamScalar interaction_coupling(Model m) {
    return ParamScalar(1) - (m == Model::cs ? b2() : b2().scaled(mpq_class(1, 2)));
}

ParamScalar energy(Model m, const Partition& lambda) {
    return ParamScalar(free_fermion_energy(lambda)) + interaction_coupling(m) * ParamScalar(hd_energy(lambda));
}

LabeledMatrix<Partition> hamiltonian_matrix(Model m, int k) {
    const ParamScalar c = interaction_coupling(m);
    const FermionOperator h = build_fermionic(FermionKind::H0) +
                              (build_fermionic(FermionKind::Hd) + build_fermionic(FermionKind::Ht)).scaled(c);
    return fermionic_matrix(h, k);
}

OperatorSpec bosonic_hamiltonian(Model m) {
    if (m == Model::cs) return build_operator(OperatorKind::cs_deformed);
    OperatorParams p;
    p.deformed = true;
    return build_operator(OperatorKind::laughlin, p);
}

Spectrum eigenstate(Model m, const Partition& lambda) {
    Spectrum s;
    s.model = m;
    s.lambda = lambda;
    s.energy = energy(m, lambda);
    const int k = lambda.weight();
    const auto& ht = ht_matrix(k);
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < ht.col_basis.size(); ++i) index.emplace(ht.col_basis[i], i);

    const ParamScalar c = interaction_coupling(m);
    std::set<Partition> used;
    PartitionVector term = PartitionVector::basis(lambda);
    s.vector = term;
    // Ht strictly lowers dominance, so the loop ends after at most P(k) steps.
    for (std::size_t step = 0; step <= ht.col_basis.size() && !term.is_zero(); ++step) {
        PartitionVector next;
        for (const auto& [mu, a] : term) {
            const std::size_t j = index.at(mu);
            for (std::size_t i = 0; i < ht.row_basis.size(); ++i)
                if (!ht.entries(i, j).is_zero()) next.add(ht.row_basis[i], ht.entries(i, j) * a);
        }
        PartitionVector scaled;
        for (const auto& [nu, a] : next) {
            if (nu == lambda) throw std::logic_error("Ht returned to the leading state");
            used.insert(nu);
            scaled.add(nu, a * c / (s.energy - energy(m, nu)));
        }
        term = scaled;
        s.vector.add(term);
    }
    if (!term.is_zero()) throw std::logic_error("resolvent series did not terminate");
    s.gaps_used.assign(used.rbegin(), used.rend());
    return s;
}

Spectrum eigenstate_at(Model m, const Partition& lambda, const Binding& coupling) {
    const Assignment a{{Symbol::b, coupling}};
    Spectrum s = eigenstate(m, lambda);
    for (const auto& mu : s.gaps_used) {
        const ParamScalar gap = s.energy - energy(m, mu);
        if (specialize(gap, a) == 0)
            throw ResonanceError(gap.num(), "resonance: energy gap " + render_in_square(gap.num(), Symbol::b, "beta") +
                                                " between " + lambda.to_string() + " and " + mu.to_string() +
                                                " vanishes at the requested coupling");
    }
    const mpq_class e = specialize(s.energy, a);
    for (const auto& mu : enumerate_level(lambda.weight())) {
        if (mu == lambda) continue;
        const ParamScalar gap = s.energy - energy(m, mu);
        // Identical energies of incomparable partitions do not obstruct the triangular construction.
        if (gap.is_zero()) continue;
        if (specialize(energy(m, mu), a) == e)
            throw DegenerateSpectrumError(gap.num(), "degenerate spectrum: " + lambda.to_string() + " and " +
                                                         mu.to_string() + " share the energy at gap factor " +
                                                         render_in_square(gap.num(), Symbol::b, "beta"));
    }
    Spectrum out = s;
    out.energy = ParamScalar(e);
    out.vector = s.vector.map_coefficients([&](const Partition&, const ParamScalar& c) {
        return ParamScalar(specialize(c, a));
    });
    return out;
}

Normalization normalization_from_name(const std::string& name) {
    if (name == "monic" || name == "monic_schur") return Normalization::monic_schur;
    if (name == "paper" || name == "paper_onek") return Normalization::paper_onek;
    throw std::invalid_argument("unknown normalization '" + name + "'");
}

PartitionVector normalize(const PartitionVector& v, Model m, Normalization n) {
    if (v.is_zero()) throw std::invalid_argument("cannot normalize the zero vector");
    if (n == Normalization::monic_schur) return v.scaled(v.begin()->second.inverse());
    const int k = v.begin()->first.weight();
    const auto p = convert(SymmetricPolynomial{k, SymBasis::schur, v}, SymBasis::powersum);
    std::vector<int> ones(static_cast<std::size_t>(k), 1);
    const ParamScalar lead = p.coeffs.coefficient(Partition(ones));
    if (lead.is_zero()) throw std::invalid_argument("vector has no a_{-1}^k component");
    // raw coefficient = a~ coefficient * g^{-k}; target b^{-k}.
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(k));
    const ParamScalar target = m == Model::cs ? ParamScalar(1) : ParamScalar(mpq_class(mpz_class(1), two_k));
    return v.scaled(target / lead);
}

Spectrum normalize(const Spectrum& s, Normalization n) {
    Spectrum out = s;
    out.vector = normalize(s.vector, s.model, n);
    return out;
}

PartitionVector bosonic_vector(const Spectrum& s) {
    return convert(SymmetricPolynomial{s.lambda.weight(), SymBasis::schur, s.vector}, SymBasis::powersum).coeffs;
}

PartitionVector raw_vector(const Spectrum& s) {
    const OperatorSpec d = build_operator(s.model == Model::cs ? OperatorKind::similarity_D : OperatorKind::similarity_DLau);
    return apply_operator(d, bosonic_vector(s));
}

SymmetricPolynomial to_polynomial(const Spectrum& s, SymBasis basis) {
    const ParamScalar g = coherent_scale(s.model);
    // a_{-n} = g a~_{-n} maps to g p_n.
    const PartitionVector raw = raw_vector(s);
    const PartitionVector p = raw.map_coefficients(
        [&](const Partition& mu, const ParamScalar& c) { return c * g.pow(mu.length()); });
    SymmetricPolynomial f = coherent_map(p);
    f.degree = s.lambda.weight();
    return convert(f, basis);
}

PartitionVector halve_coupling(const PartitionVector& v) {
    const ParamScalar half = b2().scaled(mpq_class(1, 2));
    return v.map_coefficients([&](const Partition&, const ParamScalar& c) {
        return substitute(c, Symbol::b, half, BindMode::square);
    });
}

}  // namespace jackfock
