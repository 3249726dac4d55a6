#include "futaki/conic.hpp"

namespace futaki {

ConicSurfaceInvariants surface_invariants(const ConicParams& p) {
    ConicSurfaceInvariants inv;
    inv.chi = 1 - p.genus;
    inv.K_squared = 8 * (1 - p.genus) - 2 * (p.deg_d + p.deg_h);
    inv.euler_number = 12 * inv.chi - inv.K_squared;
    inv.singular_fibres = inv.euler_number - 2 * (2 - 2 * p.genus);
    return inv;
}

FibrationSpec conic_fibration(const ConicParams& p) {
    BundleOnCurve total{3, -p.deg_h - p.deg_d};
    BundleOnCurve sub{2, -p.deg_h};
    // O_P(2) is globally generated for this splitting (the construction
    // provides the sections cutting out S), so the instance records it.
    return FibrationSpec{SplitPair{total, sub}, MultiDegree{{2}}, true};
}

FutakiReport conic_destab(const ConicParams& p) {
    return analyze(conic_fibration(p), p.genus);
}

}  // namespace futaki
