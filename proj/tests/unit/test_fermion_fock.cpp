#include "jackfock/fermion_fock.hpp"

#include <doctest.h>

using namespace jackfock;

namespace {

PartitionVector state(const Partition& p) { return PartitionVector::basis(p); }

PartitionVector terms(std::initializer_list<std::pair<Partition, ParamScalar>> list) {
    PartitionVector v;
    for (const auto& [p, c] : list) v.add(p, c);
    return v;
}

std::vector<Partition> up_to(int k) {
    std::vector<Partition> out;
    for (int n = 0; n <= k; ++n)
        for (const auto& p : enumerate_level(n)) out.push_back(p);
    return out;
}

using Raw = FockVector<FermionState>;

Raw raw(const Partition& p) { return Raw::basis(fermion_state(p)); }

Raw apply(const FermionOperator& op, const Raw& v) { return apply_fermionic(op, v); }

}  // namespace

TEST_SUITE("fermion_fock") {
    TEST_CASE("Maya states") {
        const auto m = maya_from_partition(Partition{2, 2, 1, 1});
        CHECK(m.sign == -1);
        CHECK(maya_sign(Partition{2, 2, 1, 1}) == -1);
        CHECK(maya_sign(Partition{}) == 1);
        CHECK(m.psi == std::vector<int>{3, 1});
        CHECK(m.psi_star == std::vector<int>{7, 1});
        CHECK(partition_from_maya(m) == Partition{2, 2, 1, 1});
        MayaState bad = m;
        bad.sign = 1;
        CHECK_THROWS_AS(partition_from_maya(bad), std::invalid_argument);
        for (const auto& p : up_to(9)) {
            CHECK(partition_from_maya(maya_from_partition(p)) == p);
            CHECK(charge(fermion_state(p)) == 0);
            CHECK(partition_of(fermion_state(p)) == p);
        }
    }

    TEST_CASE("diagonal operators") {
        const auto h0 = build_fermionic(FermionKind::H0);
        const auto hd = build_fermionic(FermionKind::Hd);
        CHECK(apply_fermionic(h0, state(Partition{2})) == terms({{Partition{2}, 2}}));
        CHECK(apply_fermionic(hd, state(Partition{2, 2, 1, 1})) == terms({{Partition{2, 2, 1, 1}, 20}}));
        for (const auto& p : up_to(7)) {
            CHECK(apply_fermionic(h0, state(p)) == state(p).scaled(ParamScalar(free_fermion_energy(p))));
            CHECK(apply_fermionic(hd, state(p)) == state(p).scaled(ParamScalar(hd_energy(p))));
        }
    }

    TEST_CASE("transfer operator") {
        const auto ht = build_fermionic(FermionKind::Ht);
        CHECK(apply_fermionic(ht, state(Partition{1, 1})).is_zero());
        CHECK(apply_fermionic(ht, state(Partition{1})).is_zero());
        const auto img = apply_fermionic(ht, state(Partition{2}));
        REQUIRE(img.size() == 1);
        CHECK(img.begin()->first == Partition{1, 1});
    }

    TEST_CASE("transfer operator variants") {
        const auto ht = build_fermionic(FermionKind::Ht);
        const auto printed = build_fermionic(FermionKind::Ht_as_printed);
        const auto cases = build_fermionic(FermionKind::Ht_cases);
        const auto cases_printed = build_fermionic(FermionKind::Ht_cases_as_printed);
        bool printed_differs = false;
        int first_cases_difference = 0;
        for (int k = 1; k <= 6; ++k) {
            const auto a = fermionic_matrix(ht, k).entries;
            printed_differs = printed_differs || !(fermionic_matrix(printed, k).entries == a);
            CHECK(fermionic_matrix(cases, k).entries == a);
            if (first_cases_difference == 0 && !(fermionic_matrix(cases_printed, k).entries == a))
                first_cases_difference = k;
        }
        CHECK(printed_differs);
        CHECK(first_cases_difference == 6);
        // The extra s = -k terms are diagonal and carry the quartic part of Hd.
        for (int k = 1; k <= 5; ++k) {
            const auto d = fermionic_matrix(printed, k).entries;
            const auto a = fermionic_matrix(ht, k).entries;
            for (std::size_t i = 0; i < d.rows(); ++i)
                for (std::size_t j = 0; j < d.cols(); ++j)
                    if (i != j) CHECK(d(i, j) == a(i, j));
        }
    }

    TEST_CASE("boson modes act as power sums on Schur functions") {
        const auto am1 = build_fermionic(FermionKind::boson_mode, -1);
        const auto am2 = build_fermionic(FermionKind::boson_mode, -2);
        const auto a1 = build_fermionic(FermionKind::boson_mode, 1);
        CHECK(apply_fermionic(am1, state(Partition{})) == terms({{Partition{1}, 1}}));
        CHECK(apply_fermionic(am1, state(Partition{1})) == terms({{Partition{2}, 1}, {Partition{1, 1}, 1}}));
        CHECK(apply_fermionic(am2, state(Partition{})) == terms({{Partition{2}, 1}, {Partition{1, 1}, -1}}));
        CHECK(apply_fermionic(a1, state(Partition{2, 1})) == terms({{Partition{2}, 1}, {Partition{1, 1}, 1}}));
        CHECK(apply_fermionic(a1, state(Partition{})).is_zero());
    }

    TEST_CASE("boson modes satisfy the Heisenberg relations") {
        for (int n = 1; n <= 3; ++n)
            for (int m = -3; m <= 3; ++m) {
                if (m == 0) continue;
                const auto an = build_fermionic(FermionKind::boson_mode, n);
                const auto am = build_fermionic(FermionKind::boson_mode, m);
                for (const auto& p : up_to(4)) {
                    const auto v = state(p);
                    const auto c = apply_fermionic(an, apply_fermionic(am, v)) - apply_fermionic(am, apply_fermionic(an, v));
                    CHECK(c == (n + m == 0 ? v.scaled(n) : PartitionVector{}));
                }
            }
    }

    TEST_CASE("canonical anticommutators") {
        for (int r = -5; r <= 5; r += 2)
            for (int s = -5; s <= 5; s += 2)
                for (const auto& p : up_to(3)) {
                    const Raw v = raw(p);
                    const auto psi_r = fermion_mode(false, r), psi_s = fermion_mode(false, s);
                    const auto star_s = fermion_mode(true, s);
                    const Raw mixed = apply(psi_r, apply(star_s, v)) + apply(star_s, apply(psi_r, v));
                    CHECK(mixed == (r + s == 0 ? v : Raw{}));
                    const Raw same = apply(psi_r, apply(psi_s, v)) + apply(psi_s, apply(psi_r, v));
                    CHECK(same.is_zero());
                }
    }

    TEST_CASE("Virasoro zero mode is the level") {
        const auto l0 = build_fermionic(FermionKind::virasoro, 0);
        for (const auto& p : up_to(5)) CHECK(apply_fermionic(l0, state(p)) == state(p).scaled(p.weight()));
    }

    TEST_CASE("two layers act as a tensor product") {
        const auto am1 = build_fermionic(FermionKind::boson_mode, -1);
        FermionOperator second = am1;
        second.layers = 2;
        for (auto& t : second.templates)
            for (auto& f : t.factors) f.layer = 1;
        const BiVector v = BiVector::basis({Partition{1, 1}, Partition{1}});
        BiVector expected;
        expected.add({Partition{1, 1}, Partition{2}}, 1);
        expected.add({Partition{1, 1}, Partition{1, 1}}, 1);
        CHECK(apply_fermionic(second, v) == expected);
    }

    TEST_CASE("names") {
        CHECK(fermion_kind_from_name("Ht_cases_as_printed") == FermionKind::Ht_cases_as_printed);
        CHECK_THROWS_AS(fermion_kind_from_name("Hx"), std::invalid_argument);
    }
}
