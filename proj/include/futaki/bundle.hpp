#pragma once

// Locally free sheaves on the base curve, reduced to the only data the
// computation sees: rank and degree.

#include <stdexcept>

#include "futaki/rational.hpp"

namespace futaki {

struct BundleOnCurve {
    int rank = 1;
    long long degree = 0;

    BundleOnCurve() = default;
    BundleOnCurve(int rank_, long long degree_) : rank(rank_), degree(degree_) {
        if (rank < 1) throw std::domain_error("BundleOnCurve: rank must be >= 1");
    }

    // mu = deg / rk
    Rational slope() const { return Rational(degree) / Rational(rank); }
};

// mu^r = deg / (rk - r); defined only when rk > r.
Rational modified_slope(const BundleOnCurve& b, int r);

// A bundle E together with a proper subbundle F; the quotient Q = E/F
// has rank e - f >= 1 and degree deg E - deg F.
struct SplitPair {
    BundleOnCurve total;  // E
    BundleOnCurve sub;    // F

    SplitPair(BundleOnCurve E, BundleOnCurve F) : total(E), sub(F) {
        if (sub.rank >= total.rank)
            throw std::domain_error("SplitPair: rk(F) must be < rk(E)");
    }

    BundleOnCurve quotient() const {
        return BundleOnCurve(total.rank - sub.rank, total.degree - sub.degree);
    }
};

}  // namespace futaki
