#pragma once

// Alternating subset sums from the Koszul resolution of a complete
// intersection: the operators taking P(E)-level polynomials in k to
// X-level polynomials.  Exact enumeration of all 2^r subsets.

#include <span>
#include <vector>

#include "futaki/poly.hpp"

namespace futaki {

// Multidegrees (m_1, ..., m_r) of the defining divisors, all >= 1.
// The geometric regime has every m_i >= 2; values of 1 are accepted
// but flagged.
class MultiDegree {
public:
    explicit MultiDegree(std::vector<int> m);

    int codim() const { return static_cast<int>(m_.size()); }  // r
    const std::vector<int>& values() const { return m_; }
    long long product() const;
    bool has_unit_degree() const;  // any m_i == 1

private:
    std::vector<int> m_;
};

namespace detail {
// sum_{s=0}^{r} (-1)^s sum_{i_1<...<i_s} p(k - m_{i_1} - ... - m_{i_s});
// r = 0 acts as the identity.
Poly alternating_sum(const Poly& p, std::span<const int> m);
// Same with each subset weighted by (m_{i_1}+...+m_{i_s}); the empty
// subset contributes 0, so r = 0 gives the zero polynomial.
Poly alternating_weighted_sum(const Poly& p, std::span<const int> m);
}  // namespace detail

// For p of degree n with leading coefficient a, the result has degree
// n - r with leading coefficient C(n,r) r! a prod(m_i); when r exceeds
// the degree the zero polynomial is returned.
Poly koszul_k0(const Poly& p, const MultiDegree& m);
GAffinePoly koszul_k0(const GAffinePoly& p, const MultiDegree& m);

// Weighted variant; degree n - r + 1 with leading coefficient
// -C(n, r-1) r! a prod(m_i).
Poly koszul_k1(const Poly& p, const MultiDegree& m);
GAffinePoly koszul_k1(const GAffinePoly& p, const MultiDegree& m);

}  // namespace futaki
