#include "jackfock/json_io.hpp"

#include <doctest.h>

using namespace jackfock;

namespace {

const ParamScalar b = ParamScalar::symbol(Symbol::b);

template <class T, class F>
void round_trip(const T& x, F&& parse) {
    const Json j = to_json(x);
    CHECK(parse(Json::parse(j.dump())) == x);
}

}  // namespace

TEST_SUITE("json") {
    TEST_CASE("numbers") {
        CHECK(to_json(mpz_class(5)) == Json(5));
        const mpz_class big("123456789012345678901234567890");
        CHECK(to_json(big) == Json("123456789012345678901234567890"));
        CHECK(mpz_from_json(to_json(big)) == big);
        CHECK(to_json(mpq_class(-3, 4)) == Json("-3/4"));
        CHECK(mpq_from_json(Json("6/8")) == mpq_class(3, 4));
        CHECK(mpq_from_json(Json(7)) == 7);
    }

    TEST_CASE("scalars and polynomials") {
        const ParamScalar x = (1 - b * b * ParamScalar(4)) / (b + ParamScalar::symbol(Symbol::r));
        round_trip(x, scalar_from_json);
        round_trip(x.num(), polynomial_from_json);
        const Json unreduced{{"num", Json::parse("[[2,{}]]")}, {"den", Json::parse("[[4,{}]]")}};
        CHECK(scalar_from_json(unreduced) == ParamScalar(mpq_class(1, 2)));
    }

    TEST_CASE("partitions and vectors") {
        round_trip(Partition{3, 1, 1}, partition_from_json);
        round_trip(Partition{}, partition_from_json);
        CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
        PartitionVector v;
        v.add(Partition{2}, b);
        v.add(Partition{1, 1}, ParamScalar(mpq_class(-1, 3)));
        round_trip(v, partition_vector_from_json);
        round_trip(SymmetricPolynomial{2, SymBasis::schur, v}, symmetric_from_json);
        CHECK_THROWS_AS(symmetric_from_json(Json{{"degree", 3}, {"basis", "schur"}, {"terms", to_json(v)}}),
                        std::invalid_argument);
    }

    TEST_CASE("Maya states") {
        const MayaState m = maya_from_partition(Partition{2, 2, 1, 1});
        const Json j = to_json(m);
        CHECK(j["modes"]["psi"] == Json::parse("[-3,-1]"));
        CHECK(j["sign"] == -1);
        const MayaState back = maya_from_json(j);
        CHECK(back.partition == m.partition);
        CHECK(back.sign == m.sign);
        CHECK(back.psi == m.psi);
        CHECK(back.psi_star == m.psi_star);
        Json bad = j;
        bad["sign"] = 1;
        CHECK_THROWS_AS(maya_from_json(bad), std::invalid_argument);
    }

    TEST_CASE("spectra") {
        const Spectrum s = eigenstate(Model::cs, Partition{2, 1});
        const Json j = to_json(s);
        CHECK(j["model"] == "cs");
        CHECK(j["vector_basis"] == "schur");
        const Spectrum back = spectrum_from_json(Json::parse(j.dump()));
        CHECK(back.lambda == s.lambda);
        CHECK(back.energy == s.energy);
        CHECK(back.vector == s.vector);
        CHECK(to_json(s, SymBasis::monomial, mpq_class(1, 3))["beta"] == "1/3");
        CHECK_THROWS_AS(spectrum_from_json(to_json(s, SymBasis::powersum)), std::invalid_argument);
    }

    TEST_CASE("Halperin states") {
        const HalperinState s = omega_eigenstate(Partition{1}, Partition{1});
        const Json j = to_json(s);
        CHECK(j["symbols"] == Json::parse(R"(["u","v","r"])"));
        const HalperinState back = halperin_from_json(Json::parse(j.dump()));
        CHECK(back.label == s.label);
        CHECK(back.energy == s.energy);
        CHECK(back.vector == s.vector);
    }

    TEST_CASE("matrices") {
        const auto m = hamiltonian_matrix(Model::cs, 3);
        const auto back = matrix_from_json(Json::parse(to_json(m).dump()));
        CHECK(back.row_basis == m.row_basis);
        CHECK(back.col_basis == m.col_basis);
        CHECK(back.entries == m.entries);
        Json broken = to_json(m);
        broken["rows"] = 2;
        CHECK_THROWS_AS(matrix_from_json(broken), std::invalid_argument);
    }

    TEST_CASE("output is deterministic") {
        for (int k = 1; k <= 4; ++k)
            for (const auto& l : enumerate_level(k)) {
                const std::string a = to_json(eigenstate(Model::laughlin, l), SymBasis::monomial).dump();
                const std::string c = to_json(eigenstate(Model::laughlin, l), SymBasis::monomial).dump();
                CHECK(a == c);
            }
    }

    TEST_CASE("latex") {
        CHECK(to_latex(1 - b * b) == "1 - \\beta");
        const Spectrum p = normalize(eigenstate(Model::cs, Partition{2}), Normalization::paper_onek);
        CHECK(to_latex(to_polynomial(p)) == "\\left(\\frac{1}{\\beta}\\right) p_{(2)} + p_{(1,1)}");
        CHECK(to_latex(SymmetricPolynomial{}) == "0");
    }
}
