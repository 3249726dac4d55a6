#pragma once

#include <string>
#include <vector>

#include "futaki/futaki.hpp"

namespace futaki::selfcheck {

// Outcome of one identity suite: how many instances were checked, how many
// failed, and a few human-readable descriptions of the first failures.
struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> samples;  // first few failure descriptions

    bool passed() const { return failures == 0; }
    void record_failure(const std::string& what);
};

// Absorption identities: brute development of S1, S2, S3 against their
// closed binomial forms, for f, q in 1..4 and k in 0..30 (1488 instances).
// flip_s2_sign deliberately negates the closed S2 (mutation sensitivity).
SuiteResult check_absorption_identities(bool flip_s2_sign = false);

// Trace oracle: the assembled trace polynomial against direct summation of
// -i * dim W_{-i} over all weight spaces, for f, q <= 3, degrees in [-5, 5],
// k in 0..12, g in {0, 1, 2, 5}.
SuiteResult check_trace_oracle();

// Koszul alternating sums on monomials k^n, n <= 8, with r <= 3 section
// degrees m_i in 1..4: exact degree and leading coefficient
// C(n,r) r! prod(m) for the plain sum, -C(n,r-1) r! prod(m) for the
// weighted sum (zero polynomial when the binomial vanishes).
SuiteResult check_koszul_leading_terms();

// Shared fibration grid for the two coefficient suites:
// e <= 6, 1 <= r <= 3, r < f < e, |deg E| <= 6, |deg F| <= 6, m_i in {2,3}.
// Extracted b0 and a0 against their closed forms.
SuiteResult check_closed_form_coefficients();

// Bookkeeping for the simplified single-difference formula
//   (prod m)^2 (mu^r(E) - mu^r(F)) / ((e-r)! (e-r+1)!),
// which omits the positive factor (e-r)(f-r) carried by the exact
// derivative. The suite proper asserts the exact law; these counters
// report how often the simplified form happens to coincide with it.
struct DerivativeLawStats {
    long long literal_agree = 0;
    long long literal_differ = 0;
};

// Derivative law over the shared grid: dF/dg obtained by exact finite
// difference F(1) - F(0) through the full Koszul/weights stack must equal
//   (prod m)^2 ((f-r) e mu(E) - (e-r) f mu(F)) / ((e-r)! (e-r+1)!)
//   = (prod m)^2 (e-r)(f-r) (mu^r(E) - mu^r(F)) / ((e-r)! (e-r+1)!),
// must match the genus-linear part of the expansion, and must carry the
// sign of mu^r(E) - mu^r(F).
SuiteResult check_derivative_law(DerivativeLawStats* stats = nullptr);

// All suites in order; flip_s2_sign is forwarded to the absorption suite.
std::vector<SuiteResult> run_all(bool flip_s2_sign = false);

}  // namespace futaki::selfcheck
