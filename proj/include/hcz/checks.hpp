#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hcz {

// Pinned tolerances (relative).
inline constexpr double kCanonTol = 1e-9;    // canonicalization preserves values
inline constexpr double kLambdaTol = 1e-8;   // Lambda against its tan closed form
inline constexpr double kQuadTol = 1e-6;     // quadrature against the Gamma formula
inline constexpr double kAnchorTol = 1e-8;   // closed-form anchor integrals
inline constexpr double kLanczosTol = 1e-12; // Lanczos against std::tgamma

// Outcome of one batch of invariant checks.
struct CheckResult {
    std::string name;
    bool ok = true;
    long cases = 0;
    long failures = 0;
    double max_rel_err = -1;  // negative when the check is exact
    std::string detail;       // first failure, or a summary

    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    void fail(const std::string& what) {
        ++failures;
        if (ok) detail = what;
        ok = false;
    }
    void expect(bool cond, const std::string& what) {
        ++cases;
        if (!cond) fail(what);
    }
    void rel(double computed, double expected, double tol, const std::string& what);
};

CheckResult check_gamma_algebra(unsigned seed = 2024);
CheckResult check_ratfun_ring(unsigned seed = 7);

CheckResult check_gl2_composite(unsigned seed = 3);
CheckResult check_pole_sets();
CheckResult check_exact_sequences();
CheckResult check_h1();
CheckResult check_gl2_brackets(unsigned seed = 11);
CheckResult check_compare_constants();

CheckResult check_combinatorics();
CheckResult check_spectral(unsigned seed = 17);

// Prefactor product over maximal parabolics with N <= max_N and n*n' even.
struct PiPowerStats {
    long cases = 0;              // (parabolic, lambda, w) triples run literally
    long literal_ok = 0;         // finite, nonzero, pi^{d_U/2}, even_h_count = d_U/2
    long zero_at_origin = 0;     // stripped product vanishes at z = 0
    long other_failures = 0;
    long transfer_ok = 0;        // transfer mode: pi^{d_U/2} with nonzero rational
    long leading_ok = 0;         // leading Laurent coefficient carries pi^{d_U/2}, order = #m_even
    long lambda_zero_ok = 0, lambda_zero_cases = 0;
    std::vector<std::string> excluded;  // parabolics outside the one-even-one-odd hypothesis
    std::string first_failure;
    double seconds = 0;
};
PiPowerStats pi_power_sweep(int max_N, int random_lambdas, unsigned seed = 8);

CheckResult check_pi_power_literal_frozen();
CheckResult check_pi_power_transfer(int random_lambdas = 10, unsigned seed = 8);
CheckResult check_n3_chain();
CheckResult check_report_round_trip();

CheckResult check_numeric_oracle();
CheckResult check_lanczos(unsigned seed = 1);

std::vector<std::string> suite_names();
// Throws Error("UnknownSuite") for names outside suite_names() and "all".
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace hcz
