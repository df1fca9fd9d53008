#include "jackfock/halperin.hpp"
#include "jackfock/json_io.hpp"
#include "jackfock/spectral_solver.hpp"
#include "jackfock/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace jackfock;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes it.
std::string dump(const Json& j) { return j.dump(); }

// Rejects unsorted or nonpositive parts instead of sorting them.
Partition part(const std::vector<int>& parts) { return Partition(parts); }

std::optional<mpq_class> parse_beta(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    mpq_class q;
    if (q.set_str(*s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("bad rational '" + *s + "'");
    q.canonicalize();
    return q;
}

Spectrum solve(const std::string& model, const std::vector<int>& lambda, const std::optional<mpq_class>& beta,
               const std::string& norm) {
    const Model m = model_from_name(model);
    const Partition l = part(lambda);
    Spectrum s = beta ? eigenstate_at(m, l, {*beta, BindMode::square}) : eigenstate(m, l);
    return normalize(s, normalization_from_name(norm));
}

}  // namespace

PYBIND11_MODULE(_jackfock, mod) {
    mod.doc() = "Exact Jack, Laughlin and Halperin eigenstates";

    py::register_exception<ResonanceError>(mod, "ResonanceError", PyExc_ArithmeticError);

    mod.def("partitions", [](int k) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_level(k)) out.push_back(p.parts());
        return out;
    });
    mod.def("dominance", [](const std::vector<int>& mu, const std::vector<int>& lambda) {
        return std::string(dominance_name(dominance_compare(part(mu), part(lambda))));
    });
    mod.def("hd_energy", [](const std::vector<int>& l) { return hd_energy(part(l)); });
    mod.def("energy", [](const std::string& model, const std::vector<int>& l) {
        return energy(model_from_name(model), part(l)).to_string();
    });
    mod.def(
        "eigenstate_json",
        [](const std::string& model, const std::vector<int>& l, const std::string& basis,
           const std::optional<std::string>& beta, const std::string& norm) {
            const auto b = parse_beta(beta);
            return dump(to_json(solve(model, l, b, norm), basis_from_name(basis), b));
        },
        py::arg("model"), py::arg("lam"), py::arg("basis") = "schur", py::arg("beta") = py::none(),
        py::arg("normalize") = "monic");
    mod.def(
        "latex",
        [](const std::string& model, const std::vector<int>& l, const std::string& basis,
           const std::optional<std::string>& beta, const std::string& norm) {
            return to_latex(to_polynomial(solve(model, l, parse_beta(beta), norm), basis_from_name(basis)));
        },
        py::arg("model"), py::arg("lam"), py::arg("basis") = "powersum", py::arg("beta") = py::none(),
        py::arg("normalize") = "monic");
    mod.def(
        "halperin_json",
        [](const std::vector<int>& l, const std::vector<int>& mu, long n1) {
            return dump(to_json(omega_eigenstate(part(l), part(mu), n1), n1));
        },
        py::arg("lam"), py::arg("mu"), py::arg("N1") = 0);
    mod.def("maya_json", [](const std::vector<int>& l) { return dump(to_json(maya_from_partition(part(l)))); });
    mod.def(
        "verify",
        [](const std::string& suite, int max_weight) {
            std::vector<py::dict> out;
            for (const auto& c : run_verification(suite_from_name(suite), max_weight).checks) {
                py::dict d;
                d["suite"] = c.suite;
                d["name"] = c.name;
                d["passed"] = c.passed;
                d["cases"] = c.cases;
                d["detail"] = c.detail;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("max_weight") = 6);
}
