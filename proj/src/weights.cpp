#include "futaki/weights.hpp"

namespace futaki {

GAffinePoly h0_proj(const BundleOnCurve& E) {
    int e = E.rank;
    Poly b = binom_poly(e - 1);  // C(k+e-1, e-1)
    Poly affine(std::vector<Rational>{Rational(1), -E.slope()});  // -k*mu(E) + 1
    return GAffinePoly{b * affine, -b};
}

GAffine dim_weight_space(const SplitPair& pair, long long k, long long i) {
    if (k < 0 || i < 0 || i > k)
        throw std::domain_error("dim_weight_space: need 0 <= i <= k");
    BundleOnCurve F = pair.sub, Q = pair.quotient();
    Rational binprod = binomial(static_cast<unsigned long>(F.rank - 1 + i), static_cast<unsigned long>(F.rank - 1)) *
                       binomial(static_cast<unsigned long>(Q.rank - 1 + k - i), static_cast<unsigned long>(Q.rank - 1));
    Rational weight_term = -Rational(i) * F.slope() - Rational(k - i) * Q.slope() + Rational(1);
    return GAffine{binprod * weight_term, -binprod};
}

AbsorptionValues absorption_closed(int f, int q, long long k) {
    if (f < 1 || q < 1 || k < 0)
        throw std::domain_error("absorption_closed: need f,q >= 1 and k >= 0");
    unsigned long e = static_cast<unsigned long>(f + q);
    unsigned long n = static_cast<unsigned long>(e + k - 1);
    Rational c_e = binomial(n, e);
    Rational c_e1 = binomial(n, e + 1);
    AbsorptionValues v;
    v.s1 = Rational(f) * c_e;
    v.s2 = Rational(f) * Rational(f + 1) * c_e1 + Rational(f) * c_e;
    v.s3 = Rational(f) * Rational(q) * c_e1;
    return v;
}

Rational absorption_brute(int f, int q, long long k, AbsorptionSum which) {
    if (f < 1 || q < 1 || k < 0)
        throw std::domain_error("absorption_brute: need f,q >= 1 and k >= 0");
    Rational total(0);
    for (long long i = 0; i <= k; ++i) {
        Rational binprod =
            binomial(static_cast<unsigned long>(f - 1 + i), static_cast<unsigned long>(f - 1)) *
            binomial(static_cast<unsigned long>(q - 1 + k - i), static_cast<unsigned long>(q - 1));
        switch (which) {
            case AbsorptionSum::S1: total += Rational(i) * binprod; break;
            case AbsorptionSum::S2: total += Rational(i) * Rational(i) * binprod; break;
            case AbsorptionSum::S3: total += Rational(i) * Rational(k - i) * binprod; break;
        }
    }
    return total;
}

Poly absorption_poly(int f, int q, AbsorptionSum which) {
    if (f < 1 || q < 1)
        throw std::domain_error("absorption_poly: need f,q >= 1");
    int e = f + q;
    // C(e+k-1, e) = binom_poly(e) at k-1, C(e+k-1, e+1) = binom_poly(e+1) at k-2
    Poly c_e = shift(binom_poly(e), Rational(1));
    Poly c_e1 = shift(binom_poly(e + 1), Rational(2));
    switch (which) {
        case AbsorptionSum::S1: return Rational(f) * c_e;
        case AbsorptionSum::S2: return Rational(f) * Rational(f + 1) * c_e1 + Rational(f) * c_e;
        case AbsorptionSum::S3: return Rational(f) * Rational(q) * c_e1;
    }
    throw std::logic_error("absorption_poly: unreachable");
}

GAffinePoly trace_proj(const SplitPair& pair) {
    BundleOnCurve F = pair.sub, Q = pair.quotient();
    int f = F.rank, q = Q.rank;
    Poly s1 = absorption_poly(f, q, AbsorptionSum::S1);
    Poly s2 = absorption_poly(f, q, AbsorptionSum::S2);
    Poly s3 = absorption_poly(f, q, AbsorptionSum::S3);
    // -(1-g) S1 contributes -S1 to the constant part and +S1 to the g-part.
    return GAffinePoly{F.slope() * s2 + Q.slope() * s3 - s1, s1};
}

Rational trace_proj_brute(const SplitPair& pair, long long k, long long g) {
    if (k < 0) throw std::domain_error("trace_proj_brute: need k >= 0");
    Rational total(0);
    for (long long i = 0; i <= k; ++i)
        total += Rational(i) * dim_weight_space(pair, k, i).at_genus(Rational(g));
    return -total;
}

}  // namespace futaki
