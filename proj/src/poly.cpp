#include "futaki/poly.hpp"

#include <sstream>

namespace futaki {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(int degree, Rational coeff) {
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

Rational Poly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(d)];
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    Poly r = p;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> out(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
    if (c_.empty()) return Poly();
    std::vector<Rational> out(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        out[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
    return Poly(std::move(out));
}

std::string Poly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coeff(d);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (d == 0) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << a.str() << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

Poly binom_poly(int d) {
    Poly p = Poly::constant(Rational(1));
    for (int i = 1; i <= d; ++i)
        p = p * Poly(std::vector<Rational>{Rational(i), Rational(1)});
    return (Rational(1) / factorial(static_cast<unsigned long>(d))) * p;
}

Poly shift(const Poly& p, const Rational& s) {
    // Horner in (x - s): result = (...(c_n*(x-s) + c_{n-1})*(x-s) + ...)
    Poly xs(std::vector<Rational>{-s, Rational(1)});
    Poly acc;
    for (int d = p.degree(); d >= 0; --d) acc = acc * xs + Poly::constant(p.coeff(d));
    return acc;
}

Rational integrate(const Poly& p, const Rational& lower, const Rational& upper) {
    Poly anti = p.antiderivative();
    return anti(upper) - anti(lower);
}

std::string GAffine::str() const {
    if (g_part.is_zero()) return const_part.str();
    std::ostringstream os;
    if (!const_part.is_zero()) os << const_part.str() << " ";
    Rational a = abs(g_part);
    if (const_part.is_zero()) {
        if (g_part.sign() < 0) os << "-";
    } else {
        os << (g_part.sign() < 0 ? "- " : "+ ");
    }
    if (a != Rational(1)) os << a.str() << "*";
    os << "g";
    return os.str();
}

}  // namespace futaki
