#pragma once

#include "jackfock/fock_vector.hpp"

#include <string>
#include <vector>

namespace jackfock {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;  // first failure, or a short summary
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

enum class Suite { identities, fermionization, oracle, squeeze, all };
Suite suite_from_name(const std::string& name);
const char* suite_name(Suite s);

// Each suite caps the levels it visits at the bound where its check is
// practical: fermionization 6 (Hd diagonality 10, five cases 8), squeeze 8,
// oracle 6 (differential oracle 4).
VerifyReport run_verification(Suite suite, int max_weight);

// Schur-basis matrix of a bosonic a~-mode word from level k to level k - sum(word).
ScalarMatrix bosonic_word_matrix(const std::vector<int>& word, int k);
// The same word built from fermionic bilinears, in the Maya basis.
ScalarMatrix fermionic_word_matrix(const std::vector<int>& word, int k);

}  // namespace jackfock
