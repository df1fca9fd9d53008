#include "jackfock/halperin.hpp"

#include <doctest.h>

using namespace jackfock;

namespace {

const ParamScalar u = ParamScalar::symbol(Symbol::u);
const ParamScalar v = ParamScalar::symbol(Symbol::v);
const ParamScalar r = ParamScalar::symbol(Symbol::r);

BiVector bi(std::initializer_list<std::pair<BiPartition, ParamScalar>> list) {
    BiVector out;
    for (const auto& [p, c] : list) out.add(p, c);
    return out;
}

BiVector set_r_zero(const BiVector& x) {
    return x.map_coefficients([](const BiPartition&, const ParamScalar& c) {
        return substitute(c, {{Symbol::r, {0, BindMode::value}}});
    });
}

}  // namespace

TEST_SUITE("halperin") {
    TEST_CASE("bases") {
        CHECK(bilevel_basis(1, 1) == std::vector<BiPartition>{{Partition{1}, Partition{1}}});
        CHECK(bilevel_basis(2, 0).size() == 2);
        const auto t = total_level_basis(2);
        REQUIRE(t.size() == 5);
        CHECK(t.front() == BiPartition{Partition{}, Partition{2}});
        CHECK(t.back() == BiPartition{Partition{1, 1}, Partition{}});
        const std::vector<std::size_t> counts{1, 2, 5, 10, 20, 36};
        for (std::size_t k = 0; k < counts.size(); ++k) CHECK(total_level_basis(static_cast<int>(k)).size() == counts[k]);
    }

    TEST_CASE("energies") {
        CHECK(halperin_energy(Partition{}, Partition{1}) == 1 - v * v / 2);
        CHECK(halperin_energy(Partition{2, 2, 1, 1}, Partition{}) == 10 - u * u * 10);
        CHECK(halperin_energy(Partition{}, Partition{}) == 0);
    }

    TEST_CASE("interaction on low states") {
        const auto hint = build_halperin_interaction();
        CHECK(apply_operator(hint, BiVector::basis({Partition{}, Partition{1}})).is_zero());
        CHECK(apply_operator(hint, BiVector::basis({Partition{1}, Partition{}})).is_zero());
        CHECK(apply_operator(hint, BiVector::basis({Partition{}, Partition{2}})) ==
              bi({{{Partition{1}, Partition{1}}, -r * 4 / u}, {{Partition{1, 1}, Partition{}}, r * 4 / v}}));
        CHECK(apply_operator(build_halperin_interaction(0, 2), BiVector::basis({Partition{}, Partition{2}})) ==
              bi({{{Partition{1}, Partition{1}}, -r * 4 / u}}));
        // a^1_0 acts as u N1.
        CHECK(apply_operator(build_halperin_interaction(3), BiVector::basis({Partition{}, Partition{1}})) ==
              bi({{{Partition{1}, Partition{}}, r * u * 12 / v}}));
        CHECK_THROWS_AS(build_halperin_interaction(0, 3), std::invalid_argument);
    }

    TEST_CASE("level conservation and triangularity of the interaction") {
        const auto h = build_halperin();
        const auto hint = build_halperin_interaction();
        for (int k = 0; k <= 5; ++k) {
            CHECK_NOTHROW(bosonic_bimatrix(h, k));
            const auto m = bosonic_bimatrix(hint, k);
            for (std::size_t j = 0; j < m.col_basis.size(); ++j)
                for (std::size_t i = 0; i < m.row_basis.size(); ++i)
                    if (!m.entries(i, j).is_zero()) CHECK(m.row_basis[i].layer2.weight() < m.col_basis[j].layer2.weight());
        }
    }

    TEST_CASE("bi-Jack states diagonalize the free part") {
        const auto free = build_halperin_free();
        for (int k = 0; k <= 4; ++k)
            for (const auto& bp : total_level_basis(k)) {
                const BiVector s = bijack_state(bp.layer1, bp.layer2);
                CHECK((apply_operator(free, s) - s.scaled(halperin_energy(bp.layer1, bp.layer2))).is_zero());
                CHECK(bijack_decompose(s) == BiVector::basis(bp));
            }
    }

    TEST_CASE("eigen-relation") {
        for (long n1 : {0L, 2L}) {
            const auto h = build_halperin(n1);
            for (int k = 0; k <= 3; ++k)
                for (const auto& bp : total_level_basis(k)) {
                    const auto st = omega_eigenstate(bp.layer1, bp.layer2, n1);
                    CHECK(st.label == bp);
                    CHECK(st.energy == halperin_energy(bp.layer1, bp.layer2));
                    CHECK_MESSAGE((apply_operator(h, st.vector) - st.vector.scaled(st.energy)).is_zero(),
                                  bp.layer1.to_string(), " ", bp.layer2.to_string(), " N1=", n1);
                }
        }
    }

    TEST_CASE("no interlayer coupling gives a product of Jack states") {
        for (int k = 0; k <= 4; ++k)
            for (const auto& bp : total_level_basis(k))
                CHECK(set_r_zero(omega_eigenstate(bp.layer1, bp.layer2).vector) == bijack_state(bp.layer1, bp.layer2));
    }

    TEST_CASE("eigenstate leading term") {
        const auto st = omega_eigenstate(Partition{}, Partition{2});
        const auto dec = bijack_decompose(st.vector);
        CHECK(dec.coefficient({Partition{}, Partition{2}}).is_one());
        for (const auto& [bp, c] : dec)
            if (!(bp == BiPartition{Partition{}, Partition{2}})) CHECK(bp.layer2.weight() < 2);
        CHECK_FALSE(st.gaps_used.empty());
    }

    TEST_CASE("layerwise similarity map") {
        const auto d = build_dhal();
        const auto di = build_dhal(true);
        const BiVector x = BiVector::basis({Partition{2, 1}, Partition{1}});
        CHECK(apply_operator(d, x) == x.scaled((u / 2).pow(-2) * (v / 2).pow(-1)));
        for (int k = 0; k <= 3; ++k)
            for (const auto& bp : total_level_basis(k)) {
                const BiVector s = bijack_state(bp.layer1, bp.layer2);
                CHECK(apply_operator(d, apply_operator(di, s)) == s);
            }
    }

    TEST_CASE("fermionic interaction") {
        const auto derived = build_halperin_fermionic_interaction();
        const auto printed = build_halperin_fermionic_interaction_as_printed();
        for (int k = 1; k <= 3; ++k) {
            const auto b1 = bosonic_bimatrix_schur(build_halperin_interaction(0, 1), k).entries;
            const auto b2 = bosonic_bimatrix_schur(build_halperin_interaction(0, 2), k).entries;
            CHECK(fermionic_bimatrix(derived.first, k).entries == b1);
            CHECK(fermionic_bimatrix(derived.second, k).entries == b2);
        }
        const bool printed_matches = fermionic_bimatrix(printed.first, 1).entries ==
                                         bosonic_bimatrix_schur(build_halperin_interaction(0, 1), 1).entries &&
                                     fermionic_bimatrix(printed.second, 1).entries ==
                                         bosonic_bimatrix_schur(build_halperin_interaction(0, 2), 1).entries;
        CHECK_FALSE(printed_matches);
    }

    TEST_CASE("schur layers") {
        const BiVector x = bi({{{Partition{1, 1}, Partition{}}, 1}});
        CHECK(to_schur_layers(x) == bi({{{Partition{2}, Partition{}}, 1}, {{Partition{1, 1}, Partition{}}, 1}}));
    }
}
