#include "jackfock/verify.hpp"

#include "jackfock/boson_fock.hpp"
#include "jackfock/fermion_fock.hpp"
#include "jackfock/oracle.hpp"
#include "jackfock/spectral_solver.hpp"
#include "jackfock/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jackfock {

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Suite suite_from_name(const std::string& name) {
    if (name == "identities") return Suite::identities;
    if (name == "fermionization") return Suite::fermionization;
    if (name == "oracle") return Suite::oracle;
    if (name == "squeeze") return Suite::squeeze;
    if (name == "all") return Suite::all;
    throw std::invalid_argument("unknown suite: " + name);
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::identities: return "identities";
        case Suite::fermionization: return "fermionization";
        case Suite::oracle: return "oracle";
        case Suite::squeeze: return "squeeze";
        case Suite::all: return "all";
    }
    return "?";
}

namespace {

// Runs `body` over a range of cases; body returns an empty string on success.
class Check {
public:
    Check(const char* suite, std::string name) {
        r_.suite = suite;
        r_.name = std::move(name);
        r_.passed = true;
    }
    void add(const std::string& failure) {
        ++r_.cases;
        if (!failure.empty() && r_.passed) {
            r_.passed = false;
            r_.detail = failure;
        }
    }
    CheckResult done() {
        if (r_.passed) r_.detail = std::to_string(r_.cases) + " cases";
        return r_;
    }

private:
    CheckResult r_;
};

std::vector<Partition> up_to(int k) {
    std::vector<Partition> out;
    for (int n = 0; n <= k; ++n) {
        auto level = enumerate_level(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

PartitionVector schur_to_powersum(const PartitionVector& v, int k) {
    return convert(SymmetricPolynomial{k, SymBasis::schur, v}, SymBasis::powersum).coeffs;
}

PartitionVector powersum_to_schur(const PartitionVector& v, int k) {
    return convert(SymmetricPolynomial{k, SymBasis::powersum, v}, SymBasis::schur).coeffs;
}

ScalarMatrix columns(const std::vector<Partition>& in, const std::vector<Partition>& out,
                     const std::function<PartitionVector(const Partition&)>& image) {
    ScalarMatrix m(out.size(), in.size());
    for (std::size_t j = 0; j < in.size(); ++j) {
        const PartitionVector img = image(in[j]);
        for (std::size_t i = 0; i < out.size(); ++i) m(i, j) = img.coefficient(out[i]);
        for (const auto& [p, c] : img)
            if (std::find(out.begin(), out.end(), p) == out.end()) throw LevelLeakError("word leaves its target level");
    }
    return m;
}

void identities(int w, VerifyReport& rep) {
    const auto parts = up_to(w);
    for (auto kind : {IdentityKind::kappa, IdentityKind::hook, IdentityKind::column_square, IdentityKind::theorem4}) {
        Check c("identities", identity_name(kind));
        for (const auto& l : parts) {
            const auto r = verify_identity(kind, l);
            c.add(r.holds ? "" : l.to_string() + ": " + r.lhs.get_str() + " != " + r.rhs.get_str());
        }
        rep.checks.push_back(c.done());
    }
    Check e("identities", "free_fermion_energy");
    for (const auto& l : parts) {
        const mpq_class expect = row_square_sum(l) - hd_energy(l);
        const bool ok = free_fermion_energy(l) == expect && free_fermion_energy(l.transpose()) == -expect &&
                        hd_energy(l.transpose()) == row_square_sum(l);
        e.add(ok ? "" : l.to_string());
    }
    rep.checks.push_back(e.done());
    Check f("identities", "frobenius_roundtrip");
    for (const auto& l : parts) f.add(from_frobenius(frobenius(l)) == l ? "" : l.to_string());
    rep.checks.push_back(f.done());
}

void fermionization(int w, VerifyReport& rep) {
    {
        Check c("fermionization", "hd_diagonal");
        const auto hd = build_fermionic(FermionKind::Hd);
        for (const auto& l : up_to(std::min(w, 10))) {
            const auto img = apply_fermionic(hd, PartitionVector::basis(l));
            c.add(img == PartitionVector::basis(l, ParamScalar(static_cast<long>(hd_energy(l)))) ? "" : l.to_string());
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("fermionization", "h0_diagonal");
        const auto h0 = build_fermionic(FermionKind::H0);
        for (const auto& l : up_to(std::min(w, 10))) {
            const auto img = apply_fermionic(h0, PartitionVector::basis(l));
            c.add(img == PartitionVector::basis(l, ParamScalar(free_fermion_energy(l))) ? "" : l.to_string());
        }
        rep.checks.push_back(c.done());
    }
    const int kb = std::min(w, 6);
    {
        Check c("fermionization", "mode_words");
        const std::vector<std::vector<int>> words{{1}, {-1}, {2}, {-2}, {3}, {-3}, {1, -1}, {-1, 1}, {2, -1}, {-2, 1}, {1, -2}, {-1, -1}};
        for (const auto& word : words)
            for (int k = 0; k <= kb; ++k) {
                int shift = 0;
                for (int n : word) shift += n;
                if (k - shift < 0 || k - shift > kb) continue;
                c.add(bosonic_word_matrix(word, k) == fermionic_word_matrix(word, k)
                          ? ""
                          : "word of length " + std::to_string(word.size()) + " at level " + std::to_string(k));
            }
        rep.checks.push_back(c.done());
    }
    for (Model m : {Model::cs, Model::laughlin}) {
        Check c("fermionization", std::string("hamiltonian_") + model_name(m));
        for (int k = 1; k <= kb; ++k) {
            const auto f = hamiltonian_matrix(m, k).entries;
            const auto b = schur_basis_matrix(operator_matrix(bosonic_hamiltonian(m), k)).entries;
            c.add(f == b ? "" : "level " + std::to_string(k));
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("fermionization", "five_cases");
        const auto ht = build_fermionic(FermionKind::Ht), cases = build_fermionic(FermionKind::Ht_cases);
        for (int k = 1; k <= std::min(w, 8); ++k)
            c.add(fermionic_matrix(ht, k).entries == fermionic_matrix(cases, k).entries ? "" : "level " + std::to_string(k));
        rep.checks.push_back(c.done());
    }
}

void squeeze(int w, VerifyReport& rep) {
    const auto ht = build_fermionic(FermionKind::Ht);
    Check s("squeeze", "strictly_below");
    Check n("squeeze", "nilpotent");
    for (int k = 1; k <= std::min(w, 8); ++k) {
        const auto m = fermionic_matrix(ht, k);
        for (std::size_t j = 0; j < m.col_basis.size(); ++j) {
            std::string bad;
            for (std::size_t i = 0; i < m.row_basis.size(); ++i)
                if (!m.entries(i, j).is_zero() && dominance_compare(m.row_basis[i], m.col_basis[j]) != Dominance::less)
                    bad = m.col_basis[j].to_string() + " -> " + m.row_basis[i].to_string();
            s.add(bad);
        }
        ScalarMatrix p = m.entries;
        const int c = longest_dominance_chain(k);
        for (int e = 1; e < c; ++e) p = matmul(p, m.entries);
        bool zero = true;
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) zero = zero && p(i, j).is_zero();
        n.add(zero ? "" : "level " + std::to_string(k));
    }
    rep.checks.push_back(s.done());
    rep.checks.push_back(n.done());
}

void oracle(int w, VerifyReport& rep) {
    for (Model m : {Model::cs, Model::laughlin}) {
        Check e("oracle", std::string("eigen_relation_") + model_name(m));
        Check o("oracle", std::string("nullspace_") + model_name(m));
        const OperatorSpec h = bosonic_hamiltonian(m);
        for (int k = 1; k <= std::min(w, 6); ++k) {
            const auto schur = schur_basis_matrix(operator_matrix(h, k));
            for (const auto& l : enumerate_level(k)) {
                const Spectrum s = eigenstate(m, l);
                const PartitionVector bv = bosonic_vector(s);
                e.add((apply_operator(h, bv) - bv.scaled(s.energy)).is_zero() ? "" : l.to_string());
                const auto ns = nullspace_eigenvector_below(schur, s.energy, l);
                o.add(ns.status == NullspaceStatus::simple && proportional(ns.basis[0], s.vector) ? "" : l.to_string());
            }
        }
        rep.checks.push_back(e.done());
        rep.checks.push_back(o.done());
    }
    Check d("oracle", "differential_N3");
    const ParamScalar beta = ParamScalar::symbol(Symbol::b).pow(2);
    for (int k = 1; k <= std::min(w, 4); ++k)
        for (const auto& l : enumerate_level(k)) {
            if (l.length() > 3) continue;
            const Spectrum s = eigenstate(Model::cs, l);
            const VarPolynomial f = expand_in_variables(to_polynomial(s), 3);
            const ParamScalar e = s.energy + beta * ParamScalar(3L * k);
            d.add((apply_cs_differential(f, beta) - f.scaled(e)).is_zero() ? "" : l.to_string());
        }
    rep.checks.push_back(d.done());
}

}  // namespace

ScalarMatrix bosonic_word_matrix(const std::vector<int>& word, int k) {
    int shift = 0;
    for (int n : word) shift += n;
    const OperatorSpec op = mode_word(word);
    return columns(enumerate_level(k), enumerate_level(k - shift), [&](const Partition& l) {
        return powersum_to_schur(apply_operator(op, schur_to_powersum(PartitionVector::basis(l), k)), k - shift);
    });
}

ScalarMatrix fermionic_word_matrix(const std::vector<int>& word, int k) {
    int shift = 0;
    for (int n : word) shift += n;
    return columns(enumerate_level(k), enumerate_level(k - shift), [&](const Partition& l) {
        PartitionVector v = PartitionVector::basis(l);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            v = apply_fermionic(build_fermionic(FermionKind::boson_mode, *it), v);
        return v;
    });
}

VerifyReport run_verification(Suite suite, int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("max weight must be nonnegative");
    VerifyReport rep;
    const bool all = suite == Suite::all;
    if (all || suite == Suite::identities) identities(max_weight, rep);
    if (all || suite == Suite::fermionization) fermionization(max_weight, rep);
    if (all || suite == Suite::squeeze) squeeze(max_weight, rep);
    if (all || suite == Suite::oracle) oracle(max_weight, rep);
    return rep;
}

}  // namespace jackfock
