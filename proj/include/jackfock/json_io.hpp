#pragma once

#include "jackfock/fermion_fock.hpp"
#include "jackfock/halperin.hpp"
#include "jackfock/spectral_solver.hpp"
#include "jackfock/symfunc.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace jackfock {

// Keys keep insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);
// Rationals are "p/q" strings (or integers).
Json to_json(const mpq_class& q);
mpq_class mpq_from_json(const Json& j);

// [[coef, {"b": e, ...}], ...] in the polynomial's term order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"num": ..., "den": ...}; parsing canonicalizes.
Json to_json(const ParamScalar& x);
ParamScalar scalar_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// [{"index": [...], "coef": ...}, ...] in descending partition order.
Json to_json(const PartitionVector& v);
PartitionVector partition_vector_from_json(const Json& j);

Json to_json(const SymmetricPolynomial& f);
SymmetricPolynomial symmetric_from_json(const Json& j);

// Modes as signed doubled indices: -3 stands for psi_{-3/2}.
Json to_json(const MayaState& m);
MayaState maya_from_json(const Json& j);

Json to_json(const BiPartition& b);
BiPartition bipartition_from_json(const Json& j);

// `coupling` records a specialized b^2 when present.
Json to_json(const Spectrum& s, SymBasis basis = SymBasis::schur, const std::optional<mpq_class>& coupling = {});
// Reads the schur-basis form written above.
Spectrum spectrum_from_json(const Json& j);

Json to_json(const HalperinState& s, long N1 = 0);
HalperinState halperin_from_json(const Json& j);

// {"basis": [...], "rows": n, "cols": m, "entries": [row-major scalars]}.
Json to_json(const LabeledMatrix<Partition>& m);
LabeledMatrix<Partition> matrix_from_json(const Json& j);

// LaTeX in p_mu / m_mu / s_lambda notation with beta written for b^2 when possible.
std::string to_latex(const ParamScalar& x);
std::string to_latex(const SymmetricPolynomial& f);

}  // namespace jackfock
