#include "jackfock/oracle.hpp"
#include "jackfock/spectral_solver.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace jackfock;

namespace {

const ParamScalar b = ParamScalar::symbol(Symbol::b);
const ParamScalar b2 = b * b;

std::vector<Partition> up_to(int k) {
    std::vector<Partition> out;
    for (int n = 1; n <= k; ++n)
        for (const auto& p : enumerate_level(n)) out.push_back(p);
    return out;
}

Binding beta(const mpq_class& x) { return {x, BindMode::square}; }

// Monomial expansion of the specialized eigenstate, scaled so m_lambda has coefficient 1.
std::map<Partition, mpq_class> monomial_expansion(const Partition& l, const mpq_class& x) {
    const Spectrum s = eigenstate_at(Model::cs, l, beta(x));
    const auto f = to_polynomial(s, SymBasis::monomial);
    const ParamScalar lead = f.coeffs.coefficient(l);
    std::map<Partition, mpq_class> out;
    for (const auto& [mu, c] : f.coeffs) out[mu] = (c / lead).constant_value();
    return out;
}

}  // namespace

TEST_SUITE("spectral_solver") {
    TEST_CASE("energies") {
        CHECK(energy(Model::cs, Partition{1, 1}) == 2 - b2 * 4);
        CHECK(energy(Model::cs, Partition{2}) == 4 - b2 * 2);
        CHECK(energy(Model::cs, Partition{}) == 0);
        CHECK(energy(Model::laughlin, Partition{2}) == 4 - b2);
        CHECK(interaction_coupling(Model::laughlin) == 1 - b2.scaled(mpq_class(1, 2)));
        CHECK(specialize(energy(Model::cs, Partition{2}), {{Symbol::b, beta(mpq_class(1, 3))}}) == mpq_class(10, 3));
        for (const auto& l : up_to(8)) {
            const ParamScalar e = energy(Model::laughlin, l);
            CHECK(e == ParamScalar(row_square_sum(l)) - b2.scaled(mpq_class(1, 2)) * ParamScalar(hd_energy(l)));
        }
    }

    TEST_CASE("level-2 eigenstates") {
        const Spectrum s = eigenstate(Model::cs, Partition{2});
        PartitionVector expected;
        expected.add(Partition{2}, 1);
        expected.add(Partition{1, 1}, (b2 - 1) / (b2 + 1));
        CHECK(s.vector == expected);
        CHECK(s.gaps_used == std::vector<Partition>{Partition{1, 1}});
        CHECK(eigenstate(Model::cs, Partition{1, 1}).vector == PartitionVector::basis(Partition{1, 1}));
    }

    TEST_CASE("eigenstates are monic, triangular and satisfy the eigen-relation") {
        for (Model m : {Model::cs, Model::laughlin}) {
            const OperatorSpec h = bosonic_hamiltonian(m);
            for (const auto& l : up_to(6)) {
                const Spectrum s = eigenstate(m, l);
                CHECK(s.vector.coefficient(l).is_one());
                for (const auto& [mu, c] : s.vector) {
                    const auto d = dominance_compare(mu, l);
                    CHECK((d == Dominance::less || d == Dominance::equal));
                }
                const PartitionVector v = bosonic_vector(s);
                CHECK((apply_operator(h, v) - v.scaled(s.energy)).is_zero());
            }
        }
    }

    TEST_CASE("fermionic Hamiltonian has the same eigenvectors") {
        for (Model m : {Model::cs, Model::laughlin})
            for (int k = 1; k <= 5; ++k) {
                const auto h = hamiltonian_matrix(m, k);
                for (const auto& l : enumerate_level(k)) {
                    const Spectrum s = eigenstate(m, l);
                    for (std::size_t i = 0; i < h.row_basis.size(); ++i) {
                        ParamScalar row;
                        for (std::size_t j = 0; j < h.col_basis.size(); ++j)
                            row += h.entries(i, j) * s.vector.coefficient(h.col_basis[j]);
                        CHECK(row == s.energy * s.vector.coefficient(h.row_basis[i]));
                    }
                }
            }
    }

    TEST_CASE("energies of dominance-comparable states are distinct") {
        for (int k = 1; k <= 8; ++k) {
            const auto ps = enumerate_level(k);
            for (const auto& l : ps)
                for (const auto& mu : ps)
                    if (dominance_compare(mu, l) == Dominance::less)
                        CHECK(energy(Model::cs, mu) != energy(Model::cs, l));
        }
        // Incomparable pairs may coincide.
        CHECK(energy(Model::cs, Partition{4, 1, 1}) == energy(Model::cs, Partition{3, 3}));
        CHECK(energy(Model::cs, Partition{3, 1, 1, 1}) == energy(Model::cs, Partition{2, 2, 2}));
    }

    TEST_CASE("formally degenerate pair keeps separate eigenvectors") {
        const Spectrum a = eigenstate(Model::cs, Partition{4, 1, 1});
        const Spectrum c = eigenstate(Model::cs, Partition{3, 3});
        CHECK(a.energy == c.energy);
        CHECK(a.vector.coefficient(Partition{3, 3}).is_zero());
        CHECK(c.vector.coefficient(Partition{4, 1, 1}).is_zero());
    }

    TEST_CASE("Jack oracle agreement") {
        for (const mpq_class& x : {mpq_class(1, 3), mpq_class(2), mpq_class(5, 2)})
            for (const auto& l : up_to(5)) {
                const auto lib = monomial_expansion(l, x);
                const auto ref = oracles::jack_monomial(l, x);
                CHECK_MESSAGE(lib == ref, l.to_string(), " at beta ", x.get_str());
            }
    }

    TEST_CASE("frozen Jack coefficients") {
        using M = std::map<Partition, mpq_class>;
        CHECK(monomial_expansion(Partition{2, 1}, mpq_class(1, 3)) ==
              M{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, mpq_class(6, 5)}});
        CHECK(monomial_expansion(Partition{3, 1}, mpq_class(2, 5)) ==
              M{{Partition{3, 1}, 1},
                {Partition{2, 2}, mpq_class(4, 7)},
                {Partition{2, 1, 1}, mpq_class(50, 49)},
                {Partition{1, 1, 1, 1}, mpq_class(48, 49)}});
        CHECK(monomial_expansion(Partition{2, 2}, mpq_class(3)) ==
              M{{Partition{2, 2}, 1}, {Partition{2, 1, 1}, mpq_class(3, 2)}, {Partition{1, 1, 1, 1}, mpq_class(27, 7)}});
        CHECK(monomial_expansion(Partition{2, 2, 1}, mpq_class(-2, 7)) ==
              M{{Partition{2, 2, 1}, 1}, {Partition{2, 1, 1, 1}, -4}, {Partition{1, 1, 1, 1, 1}, 80}});
    }

    TEST_CASE("free limits") {
        for (const auto& l : up_to(6)) {
            CHECK(eigenstate_at(Model::cs, l, {1, BindMode::value}).vector == PartitionVector::basis(l));
            CHECK(eigenstate_at(Model::laughlin, l, beta(2)).vector == PartitionVector::basis(l));
        }
    }

    TEST_CASE("Laughlin is CS at half coupling") {
        for (const auto& l : up_to(6))
            CHECK(eigenstate(Model::laughlin, l).vector == halve_coupling(eigenstate(Model::cs, l).vector));
    }

    TEST_CASE("normalization") {
        CHECK(normalization_from_name("paper_onek") == Normalization::paper_onek);
        for (Model m : {Model::cs, Model::laughlin})
            for (const auto& l : up_to(5)) {
                const Spectrum s = eigenstate(m, l);
                CHECK(normalize(s, Normalization::monic_schur).vector == s.vector);
                const Spectrum p = normalize(s, Normalization::paper_onek);
                CHECK(proportional(p.vector, s.vector));
                const int k = l.weight();
                CHECK(raw_vector(p).coefficient(Partition(std::vector<int>(static_cast<std::size_t>(k), 1))) ==
                      b.pow(-k));
            }
    }

    TEST_CASE("Jack polynomial normalization at the b = 1 point") {
        // At beta = 1 the polynomial is s_lambda.
        for (const auto& l : up_to(5)) {
            const auto f = to_polynomial(eigenstate_at(Model::cs, l, {1, BindMode::value}), SymBasis::schur);
            CHECK(f.coeffs == PartitionVector::basis(l));
        }
    }

    TEST_CASE("resonance and degeneracy") {
        CHECK_THROWS_AS(eigenstate_at(Model::cs, Partition{2}, beta(-1)), ResonanceError);
        try {
            eigenstate_at(Model::cs, Partition{2}, beta(-1));
        } catch (const DegenerateSpectrumError&) {
            FAIL("expected a resonance, not a degeneracy");
        } catch (const ResonanceError& e) {
            CHECK(std::string(e.what()).find("2+2*beta") != std::string::npos);
        }
        CHECK_THROWS_AS(eigenstate_at(Model::cs, Partition{1, 1}, beta(-1)), DegenerateSpectrumError);
        CHECK_NOTHROW(eigenstate_at(Model::cs, Partition{2}, beta(mpq_class(1, 3))));
    }

    TEST_CASE("model names") {
        CHECK(model_from_name("laughlin") == Model::laughlin);
        CHECK(std::string(model_name(Model::cs)) == "cs");
        CHECK_THROWS_AS(model_from_name("x"), std::invalid_argument);
    }
}
