#pragma once

#include <optional>

#include "futaki/futaki.hpp"

namespace futaki {

// Parameters for the conic-bundle family: a surface
//   S  in  P(O + O(-H) + O(-D))
// over a genus-g curve, cut out by one section of O_P(2), where H is a
// globally generated divisor of degree deg_h (default 2, the hyperelliptic
// divisor) and D a divisor of degree deg_d > deg_h.
struct ConicParams {
    long long genus;
    long long deg_d;
    long long deg_h = 2;
    bool deg_h_explicit = false;

    ConicParams(long long g, long long d, std::optional<long long> h = std::nullopt)
        : genus(g), deg_d(d), deg_h(h.value_or(2)), deg_h_explicit(h.has_value()) {
        if (genus < 2)
            throw std::domain_error("ConicParams: genus must be >= 2");
        if (deg_h_explicit) {
            // Explicit H must be a low-degree globally generated divisor:
            // 1 <= deg H < (genus + 2) / 3.
            if (deg_h < 1 || 3 * deg_h >= genus + 2)
                throw std::domain_error(
                    "ConicParams: explicit deg H must satisfy 1 <= deg H < (genus + 2)/3");
        }
        if (deg_d <= deg_h)
            throw std::domain_error("ConicParams: deg D must exceed deg H");
    }
};

// Numerical invariants of the conic-bundle surface S.
struct ConicSurfaceInvariants {
    long long chi;              // chi(O_S) = 1 - g
    long long K_squared;        // K_S^2 = 8(1 - g) - 2(deg D + deg H)
    long long euler_number;     // e(S) = 12 chi - K^2 (Noether)
    long long singular_fibres;  // nodal fibres = e(S) - 2 e(C) = 2(deg D + deg H)
};

ConicSurfaceInvariants surface_invariants(const ConicParams& p);

// The fibration instance behind the example: E = O + O(-H) + O(-D),
// F = O + O(-H), complete intersection of multidegree (2), r = 1.
FibrationSpec conic_fibration(const ConicParams& p);

// Full destabilization report for F = O + O(-H), evaluated at p.genus.
FutakiReport conic_destab(const ConicParams& p);

}  // namespace futaki
