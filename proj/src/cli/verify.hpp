#pragma once

#include <optional>
#include <string>
#include <vector>

namespace eqsteenrod::cli {

struct VerifyOptions {
    int max_n = 4;
    std::optional<int> cutoff;  ///< overrides each check's default, clamped to its cap
};

struct CheckResult {
    std::string name;
    std::string params;
    bool passed = false;
    std::string detail;
};

/// orbits, tensor, basis, koszul, relation, gfp, tau, collapse, e2series
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

CheckResult run_check(const std::string& name, const VerifyOptions& options);
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const VerifyOptions& options);

/// Associativity and commutativity of the carry product over every monomial
/// with tau indices in [floor, max_index] and a_sigma exponent <= max_asigma.
bool tau_algebra_check(int index_floor, int max_index, int max_asigma);

}  // namespace eqsteenrod::cli
