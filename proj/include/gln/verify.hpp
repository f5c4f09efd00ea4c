#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gln::verify {

struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string detail;  // first counterexample or summary notes
};

struct Options {
    int catalog_n = 12;      // unitary catalog bound
    int dims_n = 30;         // dimension-formula sweep
    int induction_lm = 10;   // induction law bound on l, m
    int dimmu_n = 15;        // (mu, d) sweep bound on n = |mu| + d
    int padic_word_size = 8;   // derivative-word sweep
    int padic_dc_size = 10;    // depth-composition sweep
    int hom_pairs = 500;       // homomorphism-law sample count
    int oracle_n = 7;          // matrix oracle sweep
    int geo_n = 5;             // projection harness partition bound
    long long geo_trials = 200;
    std::uint64_t seed = 20260808;
};

CheckResult check_dc_equals_ap(const Options& opt);
CheckResult check_dimension_formulas(const Options& opt);
CheckResult check_induction_law(const Options& opt);
CheckResult check_dimmu_tightness(const Options& opt);
CheckResult check_avder_equality(const Options& opt);
CheckResult check_casselman_osborne(const Options& opt);
CheckResult check_apsi_search(const Options& opt);
CheckResult check_padic_wavefront(const Options& opt);
CheckResult check_derivative_homomorphism(const Options& opt);
CheckResult check_matrix_oracle(const Options& opt);
CheckResult check_geo_harness(const Options& opt);
CheckResult check_rank_structure(const Options& opt);

// All twelve checks in acceptance order.
std::vector<CheckResult> run_all(const Options& opt);

// Named subsets for the CLI: per-check names plus per-module suites and
// "all". Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const Options& opt);
std::vector<std::string> suite_names();

}  // namespace gln::verify
