#pragma once

// Donaldson-Futaki data of the test configuration degenerating a
// complete intersection X in P(E) along a subbundle F: the expansion
// coefficients of h^0_X(k) and Tr_X(k), the invariant
// F(g) = a0 b1 - a1 b0 as an exact affine function of the genus, the
// destabilization threshold, and the verdict.

#include <optional>

#include "futaki/bundle.hpp"
#include "futaki/koszul.hpp"
#include "futaki/weights.hpp"

namespace futaki {

struct FibrationSpec {
    SplitPair pair;   // E with subbundle F
    MultiDegree m;    // multidegrees m_1..m_r, r = codimension
    // Global generation of O_P(E)(1) underlies the geometric reading of
    // the invariants but has no certificate computable from
    // (rank, degree) alone; the flag only records the caller's claim.
    bool globally_generated_asserted = false;

    FibrationSpec(SplitPair pair_, MultiDegree m_, bool globally_generated = false)
        : pair(std::move(pair_)), m(std::move(m_)), globally_generated_asserted(globally_generated) {
        int e = pair.total.rank, f = pair.sub.rank, r = m.codim();
        if (f <= r)
            throw std::domain_error("FibrationSpec: need rk(F) > r");
        if (e - r < 1)
            throw std::domain_error("FibrationSpec: need dim X = rk(E) - r >= 1");
    }
};

// h^0_X(k) = K0(h^0_P)(k): exact, degree e - r in k.
GAffinePoly h0_x(const FibrationSpec& spec);

// Tr_X(k) = K0(Tr_P)(k) - K1(h^0_P)(k): exact, degree <= e - r + 1.
GAffinePoly trace_x(const FibrationSpec& spec);

// The four expansion coefficients of
//   h^0_X(k) = b0 k^{e-r}   + b1 k^{e-r-1} + ...
//   Tr_X(k)  = a0 k^{e-r+1} + a1 k^{e-r}   + ...
// b0 and a0 carry no genus dependence; b1, a1 are affine in g.
struct ExpansionCoeffs {
    Rational b0;
    GAffine b1;
    Rational a0;
    GAffine a1;
};

ExpansionCoeffs expansion_coeffs(const FibrationSpec& spec);

// Closed forms for the expansion data, independent of the Koszul /
// weight-space pipeline.  Used as internal cross-checks and by the
// verification suites.
namespace closed_form {
Rational b0(const FibrationSpec& spec);     // -prod(m) e mu(E) / (e-r)!
Rational a0(const FibrationSpec& spec);     // prod(m) (f mu(F) + e(f-r) mu(E)) / (e+1-r)!
Rational dg_b1(const FibrationSpec& spec);  // -prod(m) / (e-1-r)!
Rational dg_a1(const FibrationSpec& spec);  // prod(m) (f-r) / (e-r)!
// dF/dg = prod(m)^2 ((f-r) e mu(E) - (e-r) f mu(F)) / ((e-r)! (e-r+1)!)
//       = prod(m)^2 (e-r)(f-r) (mu^r(E) - mu^r(F)) / ((e-r)! (e-r+1)!)
Rational dg_futaki(const FibrationSpec& spec);
}  // namespace closed_form

// F(g) = F0 + g F1, exact.  F1 is recomputed from the closed form and
// asserted equal to the pipeline value; affineness is cross-checked by
// finite differences at g in {0, 7}.  A mismatch is an implementation
// bug and throws std::logic_error.
GAffine futaki_affine(const FibrationSpec& spec);

// When F1 < 0: the exact root g* = -F0/F1, with F(g) < 0 for every
// g > g* (open-interval semantics).  Absent when F1 >= 0.
std::optional<Rational> genus_threshold(const FibrationSpec& spec);

enum class Verdict {
    DestabilizesForLargeGenus,  // mu^r(F) > mu^r(E): F(g) < 0 for all g past the threshold
    DestabilizesAtGenus,        // genus supplied and F(g) < 0
    NoConclusion,               // F(g) >= 0: this configuration proves nothing
    Indeterminate,              // mu^r(F) = mu^r(E), no genus supplied
};

const char* to_string(Verdict v);

// With a genus: DestabilizesAtGenus iff F(g) < 0, else NoConclusion.
// Without: the sign of mu^r(F) - mu^r(E) decides between
// DestabilizesForLargeGenus, Indeterminate and NoConclusion.
Verdict verdict(const FibrationSpec& spec, std::optional<long long> genus);

struct FutakiReport {
    Rational b0;
    GAffine b1;
    Rational a0;
    GAffine a1;
    GAffine futaki;  // F(g) = const_part + g * g_part
    Rational mu_r_E;
    Rational mu_r_F;
    std::optional<Rational> threshold;
    Verdict verdict = Verdict::Indeterminate;
    std::optional<long long> genus;          // evaluation point, when supplied
    std::optional<Rational> futaki_at_genus; // F(genus)
    bool globally_generated_asserted = false;
};

FutakiReport analyze(const FibrationSpec& spec, std::optional<long long> genus = std::nullopt);

}  // namespace futaki
