#pragma once

// Euler characteristics and C*-weight data on the projective bundle
// P(E) -> C.  Everything is exact and available by two independent
// routes: closed-form binomial identities and term-by-term summation.

#include "futaki/bundle.hpp"
#include "futaki/poly.hpp"

namespace futaki {

// h^0(O_P(E)(k)) = C(e-1+k, e-1) * (-k*mu(E) + 1 - g) as an exact
// polynomial in k, affine in g.  Degree e in k when mu(E) != 0; the
// g-part is -C(e-1+k, e-1).
GAffinePoly h0_proj(const BundleOnCurve& E);

// dim W_{-i} = C(f-1+i, f-1) * C(q-1+k-i, q-1) * (-i mu(F) - (k-i) mu(Q) + 1 - g)
// for the weight decomposition H^0(O_{P(F+Q)}(k)) = sum_i W_{-i}.
// Requires 0 <= i <= k.
GAffine dim_weight_space(const SplitPair& pair, long long k, long long i);

enum class AbsorptionSum { S1, S2, S3 };

struct AbsorptionValues {
    Rational s1;  // sum_i i   * C(f-1+i, f-1) C(q-1+k-i, q-1)
    Rational s2;  // sum_i i^2 * ...
    Rational s3;  // sum_i i(k-i) * ...
};

// Closed forms (with e = f + q):
//   S1 = f C(e+k-1, e)
//   S2 = f(f+1) C(e+k-1, e+1) + f C(e+k-1, e)
//   S3 = f q C(e+k-1, e+1)
AbsorptionValues absorption_closed(int f, int q, long long k);

// The same sums evaluated term by term; the independent oracle.
Rational absorption_brute(int f, int q, long long k, AbsorptionSum which);

// S1, S2, S3 as exact polynomials in k (shifted binomial polynomials,
// not interpolation).
Poly absorption_poly(int f, int q, AbsorptionSum which);

// Tr H^0(O_P(E)(k)) = -sum_i i dim W_{-i}
//                   = mu(F) S2(k) + mu(Q) S3(k) - (1-g) S1(k),
// exact polynomial of degree e+1 in k (when the leading coefficient
// f((f+1)mu(F)+q mu(Q))/(e+1)! is nonzero), affine in g with g-part S1.
GAffinePoly trace_proj(const SplitPair& pair);

// -sum_{i=0}^k i dim W_{-i} summed verbatim; the oracle for trace_proj.
Rational trace_proj_brute(const SplitPair& pair, long long k, long long g);

}  // namespace futaki
