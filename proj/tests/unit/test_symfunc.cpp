#include "jackfock/symfunc.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace jackfock;

namespace {

SymmetricPolynomial single(int k, SymBasis basis, const Partition& p, ParamScalar c = ParamScalar(1)) {
    return {k, basis, PartitionVector::basis(p, std::move(c))};
}

PartitionVector terms(std::initializer_list<std::pair<Partition, mpq_class>> list) {
    PartitionVector v;
    for (const auto& [p, c] : list) v.add(p, ParamScalar(c));
    return v;
}

}  // namespace

TEST_SUITE("symfunc") {
    TEST_CASE("convert examples") {
        CHECK(convert(single(2, SymBasis::powersum, Partition{1, 1}), SymBasis::schur).coeffs ==
              terms({{Partition{2}, 1}, {Partition{1, 1}, 1}}));
        CHECK(convert(single(2, SymBasis::schur, Partition{1, 1}), SymBasis::powersum).coeffs ==
              terms({{Partition{1, 1}, mpq_class(1, 2)}, {Partition{2}, mpq_class(-1, 2)}}));
        const auto c = single(0, SymBasis::schur, Partition{}, ParamScalar(7));
        for (auto t : {SymBasis::powersum, SymBasis::monomial, SymBasis::schur})
            CHECK(convert(c, t).coeffs == c.coeffs);
    }

    TEST_CASE("schur to monomial matches Kostka numbers from tableau counting") {
        for (int k = 1; k <= 8; ++k)
            for (const auto& l : enumerate_level(k)) {
                const auto m = convert(single(k, SymBasis::schur, l), SymBasis::monomial).coeffs;
                for (const auto& mu : enumerate_level(k))
                    CHECK(m.coefficient(mu) == ParamScalar(oracles::kostka(l, mu)));
            }
    }

    TEST_CASE("powersum to monomial matches explicit expansion") {
        for (int k = 1; k <= 6; ++k)
            for (const auto& rho : enumerate_level(k)) {
                const auto m = convert(single(k, SymBasis::powersum, rho), SymBasis::monomial).coeffs;
                const auto poly = oracles::power_sum_product(rho, k);
                for (const auto& mu : enumerate_level(k))
                    CHECK(m.coefficient(mu) == ParamScalar(oracles::coefficient(poly, mu, k)));
            }
    }

    TEST_CASE("characters") {
        CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
        CHECK(character(Partition{2, 1}, Partition{3}) == -1);
        CHECK(character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
        CHECK(centralizer_order(Partition{2, 1, 1}) == 4);
    }

    TEST_CASE("round trips up to degree 8") {
        const ParamScalar b = ParamScalar::symbol(Symbol::b);
        for (int k = 1; k <= 8; ++k) {
            PartitionVector v;
            int i = 1;
            for (const auto& p : enumerate_level(k)) {
                v.add(p, b.pow(i % 3) * ParamScalar(i));
                ++i;
            }
            const SymmetricPolynomial f{k, SymBasis::powersum, v};
            for (auto t : {SymBasis::monomial, SymBasis::schur})
                CHECK(convert(convert(f, t), SymBasis::powersum) == f);
        }
    }

    TEST_CASE("coherent map") {
        PartitionVector v;
        v.add(Partition{2, 1}, ParamScalar(1));
        const auto f = coherent_map(v);
        CHECK(f.basis == SymBasis::powersum);
        CHECK(f.coeffs == v);
        CHECK(coherent_map(PartitionVector{}).coeffs.is_zero());
    }

    TEST_CASE("evaluate") {
        CHECK(evaluate(single(2, SymBasis::powersum, Partition{2}), 2, {1, 2}) == ParamScalar(5));
        const auto e2 = single(2, SymBasis::schur, Partition{1, 1});
        CHECK(expand_in_variables(e2, 2).terms().size() == 1);
        CHECK(evaluate(e2, 2, {3, 4}) == ParamScalar(12));
        CHECK(evaluate(single(2, SymBasis::monomial, Partition{1, 1}), 1, {5}) == ParamScalar(0));
    }

    TEST_CASE("evaluation agrees across bases") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        for (int k = 1; k <= 6; ++k)
            for (const auto& l : enumerate_level(k)) {
                const auto s = single(k, SymBasis::schur, l, ParamScalar(mpq_class(num(rng), den(rng))));
                const int n = 3;
                std::vector<mpq_class> z;
                for (int i = 0; i < n; ++i) z.emplace_back(num(rng), den(rng));
                const ParamScalar x = evaluate(s, n, z);
                CHECK(evaluate(convert(s, SymBasis::powersum), n, z) == x);
                CHECK(evaluate(convert(s, SymBasis::monomial), n, z) == x);
            }
    }
}
