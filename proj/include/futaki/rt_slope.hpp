#pragma once

#include <optional>
#include <stdexcept>

#include "futaki/poly.hpp"

namespace futaki {

// Slope test data for a polarized variety (X, L) with respect to a subscheme:
// alpha0 and alpha1 are the top two Hilbert coefficients of the blow-up
// polarization L - xE, as polynomials in x, and c is the upper integration
// limit (to be meaningful it should not exceed the Seshadri constant of the
// subscheme; the caller records that promise in seshadri_bound_asserted).
struct SlopeInput {
    Poly alpha0;
    Poly alpha1;
    Rational c;
    bool seshadri_bound_asserted = false;

    SlopeInput(Poly a0, Poly a1, Rational c_, bool seshadri_asserted = false)
        : alpha0(std::move(a0)), alpha1(std::move(a1)), c(std::move(c_)),
          seshadri_bound_asserted(seshadri_asserted) {
        if (alpha0.degree() < 0)
            throw std::domain_error("SlopeInput: alpha0 must be nonzero");
        if (alpha0.coeff(0).is_zero())
            throw std::domain_error("SlopeInput: alpha0(0) must be nonzero");
        if (c.sign() <= 0)
            throw std::domain_error("SlopeInput: c must be positive");
    }
};

// Global slope mu(X, L) = alpha1(0) / alpha0(0).
Rational mu_global(const SlopeInput& input);

// Slope of the subscheme:
//   mu_c = \int_0^c (alpha1(x) + alpha0'(x)/2) dx  /  \int_0^c alpha0(x) dx.
// Throws std::domain_error when the denominator integral vanishes.
Rational mu_c(const SlopeInput& input);

// Strict test: the subscheme destabilizes iff mu_c > mu(X, L).
bool slope_destabilizes(const SlopeInput& input);

}  // namespace futaki
