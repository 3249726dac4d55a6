#pragma once

// Dense univariate polynomials over Rational, plus the affine-in-genus
// pair used to carry exact genus dependence through every computation.
// Canonical form is enforced on construction: no trailing zero
// coefficients, the zero polynomial has an empty coefficient list.

#include <vector>

#include "futaki/rational.hpp"

namespace futaki {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rational v);
    // coeff * x^degree
    static Poly monomial(int degree, Rational coeff = Rational(1));

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^d; 0 when d exceeds the degree.
    Rational coeff(int d) const;
    // Leading coefficient; 0 for the zero polynomial.
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    // Antiderivative with zero constant term.
    Poly antiderivative() const;

    // Human-readable form like "5/6*k^3 + 3*k^2 + 1"; "0" for zero.
    std::string str(const char* var = "k") const;

private:
    void trim();

    std::vector<Rational> c_;
};

// The polynomial k -> C(k+d, d) = (k+1)(k+2)...(k+d)/d!, degree d,
// leading coefficient 1/d!.
Poly binom_poly(int d);

// q with q(k) = p(k - s); degree preserved.
Poly shift(const Poly& p, const Rational& s);

// Exact definite integral over [lower, upper].
Rational integrate(const Poly& p, const Rational& lower, const Rational& upper);

// A pair (const_part, g_part) representing const_part + g * g_part.
// Closed under addition, scalar and Poly multiplication; the genus
// never enters any product, so the affine form is preserved exactly.
struct GAffinePoly {
    Poly const_part;
    Poly g_part;

    Poly at_genus(const Rational& g) const { return const_part + g * g_part; }
    Rational eval(const Rational& k, const Rational& g) const {
        return const_part(k) + g * g_part(k);
    }

    GAffinePoly operator-() const { return {-const_part, -g_part}; }
    GAffinePoly& operator+=(const GAffinePoly& o) {
        const_part += o.const_part;
        g_part += o.g_part;
        return *this;
    }
    GAffinePoly& operator-=(const GAffinePoly& o) {
        const_part -= o.const_part;
        g_part -= o.g_part;
        return *this;
    }
    friend GAffinePoly operator+(GAffinePoly a, const GAffinePoly& b) { return a += b; }
    friend GAffinePoly operator-(GAffinePoly a, const GAffinePoly& b) { return a -= b; }
    friend GAffinePoly operator*(const Poly& p, const GAffinePoly& a) {
        return {p * a.const_part, p * a.g_part};
    }
    friend GAffinePoly operator*(const Rational& s, const GAffinePoly& a) {
        return {s * a.const_part, s * a.g_part};
    }
    friend bool operator==(const GAffinePoly& a, const GAffinePoly& b) {
        return a.const_part == b.const_part && a.g_part == b.g_part;
    }
};

// Scalar affine in the genus: const_part + g * g_part.
struct GAffine {
    Rational const_part;
    Rational g_part;

    Rational at_genus(const Rational& g) const { return const_part + g * g_part; }

    friend bool operator==(const GAffine& a, const GAffine& b) {
        return a.const_part == b.const_part && a.g_part == b.g_part;
    }

    // e.g. "2 - 2*g", "-7/3", "g"
    std::string str() const;
};

}  // namespace futaki
