#include "futaki/rational.hpp"

#include <cctype>
#include <ostream>

namespace futaki {

void Rational::set_ll(long long n) {
    if (n >= 0) {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
        v_ = mpq_class(z);
    } else {
        unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1ull;
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        v_ = mpq_class(-z);
    }
}

static bool valid_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// mpz_class rejects a leading '+', which we accept; drop it before parsing.
static std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0)
        throw std::invalid_argument("Rational: zero denominator in literal '" + std::string(s) + "'");
    return Rational(n, d);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace futaki
