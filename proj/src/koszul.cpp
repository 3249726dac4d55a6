#include "futaki/koszul.hpp"

#include <stdexcept>

namespace futaki {

MultiDegree::MultiDegree(std::vector<int> m) : m_(std::move(m)) {
    if (m_.empty()) throw std::domain_error("MultiDegree: need at least one degree");
    if (m_.size() > 20)
        throw std::domain_error("MultiDegree: at most 20 degrees supported (2^r subsets)");
    for (int v : m_)
        if (v < 1) throw std::domain_error("MultiDegree: every m_i must be >= 1");
}

long long MultiDegree::product() const {
    long long p = 1;
    for (int v : m_) p *= v;
    return p;
}

bool MultiDegree::has_unit_degree() const {
    for (int v : m_)
        if (v == 1) return true;
    return false;
}

namespace detail {

// Enumerate subsets by bitmask; popcount parity gives the sign.
Poly alternating_sum(const Poly& p, std::span<const int> m) {
    const int r = static_cast<int>(m.size());
    Poly acc;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        long long s = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) s += m[static_cast<size_t>(i)];
        Poly term = shift(p, Rational(s));
        if (__builtin_popcount(mask) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Poly alternating_weighted_sum(const Poly& p, std::span<const int> m) {
    const int r = static_cast<int>(m.size());
    Poly acc;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        long long s = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) s += m[static_cast<size_t>(i)];
        Poly term = Rational(s) * shift(p, Rational(s));
        if (__builtin_popcount(mask) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace detail

Poly koszul_k0(const Poly& p, const MultiDegree& m) {
    return detail::alternating_sum(p, m.values());
}

Poly koszul_k1(const Poly& p, const MultiDegree& m) {
    return detail::alternating_weighted_sum(p, m.values());
}

GAffinePoly koszul_k0(const GAffinePoly& p, const MultiDegree& m) {
    return {koszul_k0(p.const_part, m), koszul_k0(p.g_part, m)};
}

GAffinePoly koszul_k1(const GAffinePoly& p, const MultiDegree& m) {
    return {koszul_k1(p.const_part, m), koszul_k1(p.g_part, m)};
}

}  // namespace futaki
