#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace domseq {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;  // expected/actual and witnesses on failure; notes otherwise
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    int failed = 0;
    double seconds = 0.0;
    bool pass() const { return failed == 0; }
};

struct SuiteOptions {
    std::uint64_t seed = 9181;
    int samples = 0;           // 0 = per-suite default
    int n_max = 0;             // 0 = per-suite default
    bool small_budget = false; // trims the largest cells for quick smoke runs
};

// Suites runnable by name: duality, products, sierpinski, lattice, factor2,
// alpha-beta, reduction, ptime, kz.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

SuiteResult suite_duality(const SuiteOptions& opt = {});
SuiteResult suite_products_grundy(const SuiteOptions& opt = {});   // z-grundy product formulas
SuiteResult suite_products_forcing(const SuiteOptions& opt = {});  // strong/lex forcing formulas
SuiteResult suite_sierpinski(const SuiteOptions& opt = {});
SuiteResult suite_lattice(const SuiteOptions& opt = {});
SuiteResult suite_factor2(const SuiteOptions& opt = {});
SuiteResult suite_alpha_beta(const SuiteOptions& opt = {});
SuiteResult suite_reduction(const SuiteOptions& opt = {});
SuiteResult suite_ptime(const SuiteOptions& opt = {});
SuiteResult suite_kz(const SuiteOptions& opt = {});

}  // namespace domseq
