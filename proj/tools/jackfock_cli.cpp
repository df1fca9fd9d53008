#include "jackfock/halperin.hpp"
#include "jackfock/json_io.hpp"
#include "jackfock/spectral_solver.hpp"
#include "jackfock/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace jackfock;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResonance = 3 };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "2,2,1,1"; "", "0" and "()" mean the empty partition.
Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "0" || s == "()" || s == "[]") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int x = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            parts.push_back(x);
        } catch (const std::exception&) {
            throw UsageError("bad partition '" + s + "'");
        }
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw UsageError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

struct Coupling {
    std::string beta;
    std::string num;
    std::string den = "1";

    void attach(CLI::App* app) {
        app->add_option("--beta", beta, "Value of b^2 (integer or p/q)");
        auto* n = app->add_option("--beta-num", num, "Numerator of b^2");
        app->add_option("--beta-den", den, "Denominator of b^2")->needs(n);
    }

    std::optional<mpq_class> value() const {
        if (!beta.empty() && !num.empty()) throw UsageError("give either --beta or --beta-num/--beta-den");
        if (!beta.empty()) return parse_rational(beta);
        if (!num.empty()) return parse_rational(num + "/" + den);
        return std::nullopt;
    }
};

Spectrum solve(Model m, const Partition& l, const std::optional<mpq_class>& beta, Normalization n) {
    Spectrum s = beta ? eigenstate_at(m, l, Binding{*beta, BindMode::square}) : eigenstate(m, l);
    return normalize(s, n);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jack, Laughlin and Halperin eigenstates in Fock space"};
    app.require_subcommand(1);

    std::string model = "cs", lambda, mu, basis = "schur", norm = "monic", suite = "all", format = "json";
    int level = 0, max_weight = 6;
    long n1 = 0;
    Coupling jack_c, spec_c, export_c;

    auto* jack = app.add_subcommand("jack", "Eigenstate for one partition");
    jack->add_option("--model", model)->check(CLI::IsMember({"cs", "laughlin"}));
    jack->add_option("--lambda", lambda, "Partition, e.g. 2,2,1,1")->required();
    jack->add_option("--basis", basis)->check(CLI::IsMember({"schur", "powersum", "monomial"}));
    jack->add_option("--normalize", norm)->check(CLI::IsMember({"monic", "paper"}));
    jack_c.attach(jack);

    auto* spectrum = app.add_subcommand("spectrum", "All eigenstates at one level");
    spectrum->add_option("--model", model)->check(CLI::IsMember({"cs", "laughlin"}));
    spectrum->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
    spectrum->add_option("--basis", basis)->check(CLI::IsMember({"schur", "powersum", "monomial"}));
    spectrum->add_option("--normalize", norm)->check(CLI::IsMember({"monic", "paper"}));
    spec_c.attach(spectrum);

    auto* halperin = app.add_subcommand("halperin", "Bi-Jack eigenstate of the two-layer Hamiltonian");
    halperin->add_option("--lambda", lambda, "Layer-1 partition (empty allowed)");
    halperin->add_option("--mu", mu, "Layer-2 partition (empty allowed)");
    halperin->add_option("--N1", n1, "Layer-1 particle number for the zero mode");

    auto* verify = app.add_subcommand("verify", "Run exact verification suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"identities", "fermionization", "oracle", "squeeze", "all"}));
    verify->add_option("--max-weight", max_weight)->check(CLI::NonNegativeNumber);

    auto* exp = app.add_subcommand("export", "Jack polynomial as JSON or LaTeX");
    exp->add_option("--format", format)->check(CLI::IsMember({"json", "latex"}));
    exp->add_option("--model", model)->check(CLI::IsMember({"cs", "laughlin"}));
    exp->add_option("--lambda", lambda)->required();
    exp->add_option("--basis", basis)->check(CLI::IsMember({"schur", "powersum", "monomial"}));
    exp->add_option("--normalize", norm)->check(CLI::IsMember({"monic", "paper"}));
    export_c.attach(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const Model m = model_from_name(model);
        const SymBasis b = basis_from_name(basis);
        const Normalization n = normalization_from_name(norm);
        if (*jack) {
            const auto beta = jack_c.value();
            print(to_json(solve(m, parse_partition(lambda), beta, n), b, beta));
        } else if (*spectrum) {
            const auto beta = spec_c.value();
            Json states = Json::array();
            for (const auto& l : enumerate_level(level)) states.push_back(to_json(solve(m, l, beta, n), b, beta));
            Json out{{"model", model}, {"level", level}};
            if (beta) out["beta"] = to_json(*beta);
            out["states"] = std::move(states);
            print(out);
        } else if (*halperin) {
            print(to_json(omega_eigenstate(parse_partition(lambda), parse_partition(mu), n1), n1));
        } else if (*verify) {
            const VerifyReport rep = run_verification(suite_from_name(suite), max_weight);
            for (const auto& c : rep.checks)
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << "/" << c.name << ": " << c.detail << "\n";
            std::cout << (rep.passed() ? "all checks passed" : "verification failed") << "\n";
            return rep.passed() ? kOk : kVerifyFailed;
        } else if (*exp) {
            const auto beta = export_c.value();
            const Spectrum s = solve(m, parse_partition(lambda), beta, n);
            const SymmetricPolynomial f = to_polynomial(s, b);
            if (format == "latex") std::cout << to_latex(f) << "\n";
            else print(to_json(f));
        }
    } catch (const ResonanceError& e) {
        std::cerr << e.what() << "\n";
        return kResonance;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kOk;
}
