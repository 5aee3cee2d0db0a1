#pragma once

#include <string>
#include <vector>

#include "dynstab/context.hpp"

namespace dynstab {

struct CheckResult {
    std::string id;
    bool pass = false;
    double ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    std::vector<CheckResult> checks;

    bool pass() const;
    double total_ms() const;
    std::string summary() const;  // one line per check plus a footer
};

struct SuiteOptions {
    int jobs = 1;
    int trunc = 0;  // Laurent truncation order; 0 means n + 2
};

// recursion, orthogonality, interpolation, ybe, inversion, braid,
// stab-inverse, r-coincide, rll, determinant, eigen, offdiag,
// gz-cohomology, submodule, properties, all
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Cost guard: largest n a suite accepts without the unsafe override.
int suite_default_max_n(const std::string& name);

SuiteReport run_suite(const std::string& name, int n, const SuiteOptions& opts = {});

}  // namespace dynstab
