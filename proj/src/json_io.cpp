#include "jackfock/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace jackfock {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

Json vector_terms(const PartitionVector& v, bool with_text) {
    Json out = Json::array();
    for (const auto& [p, c] : v) {
        Json t{{"index", to_json(p)}, {"coef", to_json(c)}};
        if (with_text) t["text"] = c.to_string();
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class mpz_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) bad("malformed integer string");
        return z;
    }
    bad("expected an integer");
}

Json to_json(const mpq_class& q) {
    if (q.get_den() == 1) return to_json(q.get_num());
    return Json(q.get_str());
}

mpq_class mpq_from_json(const Json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) bad("expected a rational");
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) bad("malformed rational string");
    q.canonicalize();
    return q;
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json mono = Json::object();
        for (int i = 0; i < kNumSymbols; ++i)
            if (unsigned e = it->mono.exponent(i)) mono[symbol_name(static_cast<Symbol>(i))] = e;
        out.push_back(Json::array({to_json(it->coef), std::move(mono)}));
    }
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) bad("polynomial must be an array of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_object()) bad("term must be [coef, {symbol: exponent}]");
        std::array<unsigned, kNumSymbols> e{};
        for (const auto& [name, ex] : t[1].items()) {
            if (!ex.is_number_unsigned() && !(ex.is_number_integer() && ex.get<long>() >= 0))
                bad("exponent must be a nonnegative integer");
            const long x = ex.get<long>();
            if (x > 0xFFFF) bad("exponent too large");
            try {
                e[static_cast<std::size_t>(symbol_from_name(name))] += static_cast<unsigned>(x);
            } catch (const std::invalid_argument&) {
                bad("unknown symbol '" + name + "'");
            }
        }
        terms.push_back({Monomial::from_exponents(e), mpz_from_json(t[0])});
    }
    return Polynomial::from_terms(std::move(terms));
}

Json to_json(const ParamScalar& x) { return Json{{"num", to_json(x.num())}, {"den", to_json(x.den())}}; }

ParamScalar scalar_from_json(const Json& j) {
    Polynomial den = polynomial_from_json(field(j, "den"));
    if (den.is_zero()) bad("zero denominator");
    return ParamScalar(polynomial_from_json(field(j, "num")), std::move(den));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) bad("partition must be an array");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad("partition parts must be integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

Json to_json(const PartitionVector& v) { return vector_terms(v, false); }

PartitionVector partition_vector_from_json(const Json& j) {
    if (!j.is_array()) bad("vector must be an array");
    PartitionVector v;
    for (const auto& t : j) v.add(partition_from_json(field(t, "index")), scalar_from_json(field(t, "coef")));
    return v;
}

Json to_json(const SymmetricPolynomial& f) {
    return Json{{"degree", f.degree}, {"basis", basis_name(f.basis)}, {"terms", vector_terms(f.coeffs, false)}};
}

SymmetricPolynomial symmetric_from_json(const Json& j) {
    SymmetricPolynomial f;
    f.degree = field(j, "degree").get<int>();
    f.basis = basis_from_name(field(j, "basis").get<std::string>());
    f.coeffs = partition_vector_from_json(field(j, "terms"));
    for (const auto& [p, c] : f.coeffs)
        if (p.weight() != f.degree) bad("term index weight differs from degree");
    return f;
}

Json to_json(const MayaState& m) {
    Json psi = Json::array(), psis = Json::array();
    for (int x : m.psi) psi.push_back(-x);
    for (int x : m.psi_star) psis.push_back(-x);
    return Json{{"partition", to_json(m.partition)},
                {"sign", m.sign},
                {"modes", Json{{"psi", std::move(psi)}, {"psi_star", std::move(psis)}}}};
}

MayaState maya_from_json(const Json& j) {
    MayaState m;
    m.partition = partition_from_json(field(j, "partition"));
    m.sign = field(j, "sign").get<int>();
    if (m.sign != 1 && m.sign != -1) bad("sign must be +1 or -1");
    const Json& modes = field(j, "modes");
    for (const auto& x : field(modes, "psi")) m.psi.push_back(-x.get<int>());
    for (const auto& x : field(modes, "psi_star")) m.psi_star.push_back(-x.get<int>());
    partition_from_maya(m);
    return m;
}

Json to_json(const BiPartition& b) { return Json{{"layer1", to_json(b.layer1)}, {"layer2", to_json(b.layer2)}}; }

BiPartition bipartition_from_json(const Json& j) {
    return {partition_from_json(field(j, "layer1")), partition_from_json(field(j, "layer2"))};
}

Json to_json(const Spectrum& s, SymBasis basis, const std::optional<mpq_class>& coupling) {
    Json out{{"model", model_name(s.model)}, {"lambda", to_json(s.lambda)}};
    if (coupling) out["beta"] = to_json(*coupling);
    out["energy"] = to_json(s.energy);
    out["energy_text"] = s.energy.to_string();
    out["vector_basis"] = basis_name(basis);
    const PartitionVector v = basis == SymBasis::schur ? s.vector : to_polynomial(s, basis).coeffs;
    out["vector"] = vector_terms(v, true);
    return out;
}

Spectrum spectrum_from_json(const Json& j) {
    Spectrum s;
    s.model = model_from_name(field(j, "model").get<std::string>());
    s.lambda = partition_from_json(field(j, "lambda"));
    s.energy = scalar_from_json(field(j, "energy"));
    if (field(j, "vector_basis").get<std::string>() != "schur") bad("only schur-basis spectra can be read back");
    s.vector = partition_vector_from_json(field(j, "vector"));
    return s;
}

Json to_json(const HalperinState& s, long N1) {
    Json vec = Json::array();
    for (const auto& [b, c] : s.vector)
        vec.push_back(Json{{"layer1", to_json(b.layer1)},
                           {"layer2", to_json(b.layer2)},
                           {"coef", to_json(c)},
                           {"text", c.to_string()}});
    return Json{{"model", "halperin"},
                {"lambda", to_json(s.label.layer1)},
                {"mu", to_json(s.label.layer2)},
                {"N1", N1},
                {"symbols", Json::array({"u", "v", "r"})},
                {"energy", to_json(s.energy)},
                {"energy_text", s.energy.to_string()},
                {"vector_basis", "powersum"},
                {"vector", std::move(vec)}};
}

HalperinState halperin_from_json(const Json& j) {
    HalperinState s;
    s.label = {partition_from_json(field(j, "lambda")), partition_from_json(field(j, "mu"))};
    s.energy = scalar_from_json(field(j, "energy"));
    for (const auto& t : field(j, "vector")) s.vector.add(bipartition_from_json(t), scalar_from_json(field(t, "coef")));
    return s;
}

Json to_json(const LabeledMatrix<Partition>& m) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& p : m.row_basis) rows.push_back(to_json(p));
    for (const auto& p : m.col_basis) cols.push_back(to_json(p));
    for (std::size_t i = 0; i < m.entries.rows(); ++i)
        for (std::size_t k = 0; k < m.entries.cols(); ++k) entries.push_back(to_json(m.entries(i, k)));
    return Json{{"row_basis", std::move(rows)},
                {"col_basis", std::move(cols)},
                {"rows", m.entries.rows()},
                {"cols", m.entries.cols()},
                {"entries", std::move(entries)}};
}

LabeledMatrix<Partition> matrix_from_json(const Json& j) {
    LabeledMatrix<Partition> m;
    for (const auto& p : field(j, "row_basis")) m.row_basis.push_back(partition_from_json(p));
    for (const auto& p : field(j, "col_basis")) m.col_basis.push_back(partition_from_json(p));
    const auto r = field(j, "rows").get<std::size_t>(), c = field(j, "cols").get<std::size_t>();
    const Json& e = field(j, "entries");
    if (r != m.row_basis.size() || c != m.col_basis.size() || e.size() != r * c) bad("matrix shape mismatch");
    m.entries = ScalarMatrix(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < c; ++k) m.entries(i, k) = scalar_from_json(e[i * c + k]);
    return m;
}

namespace {

std::string latex_poly(const Polynomial& p) {
    const bool square = [&] {
        for (const auto& t : p.terms())
            if (t.mono.exponent(Symbol::b) % 2) return false;
        return true;
    }();
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const bool neg = sgn(it->coef) < 0;
        const mpz_class a = abs(it->coef);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (a != 1 || it->mono.is_one()) os << a.get_str();
        for (int i = 0; i < kNumSymbols; ++i) {
            unsigned e = it->mono.exponent(i);
            if (e == 0) continue;
            const auto s = static_cast<Symbol>(i);
            if (s == Symbol::b && square) {
                os << "\\beta";
                e /= 2;
            } else {
                os << symbol_name(s);
            }
            if (e > 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

}  // namespace

std::string to_latex(const ParamScalar& x) {
    if (x.den().is_one()) return latex_poly(x.num());
    return "\\frac{" + latex_poly(x.num()) + "}{" + latex_poly(x.den()) + "}";
}

std::string to_latex(const SymmetricPolynomial& f) {
    if (f.coeffs.is_zero()) return "0";
    const char* letter = f.basis == SymBasis::powersum ? "p" : f.basis == SymBasis::schur ? "s" : "m";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : f.coeffs) {
        if (!first) os << " + ";
        first = false;
        std::string sub;
        for (int x : p.parts()) sub += (sub.empty() ? "" : ",") + std::to_string(x);
        const std::string coef = to_latex(c);
        if (!c.is_one()) os << "\\left(" << coef << "\\right) ";
        os << letter << "_{(" << sub << ")}";
    }
    return os.str();
}

}  // namespace jackfock
