#include "futaki/rt_slope.hpp"

namespace futaki {

Rational mu_global(const SlopeInput& input) {
    return input.alpha1.coeff(0) / input.alpha0.coeff(0);
}

Rational mu_c(const SlopeInput& input) {
    Poly numerand = input.alpha1 + input.alpha0.derivative() * Rational(1, 2);
    Rational num = integrate(numerand, Rational(0), input.c);
    Rational den = integrate(input.alpha0, Rational(0), input.c);
    if (den.is_zero())
        throw std::domain_error("mu_c: the integral of alpha0 over [0, c] vanishes");
    return num / den;
}

bool slope_destabilizes(const SlopeInput& input) {
    return mu_c(input) > mu_global(input);
}

}  // namespace futaki
