#include "futaki/futaki.hpp"

namespace futaki {

Rational modified_slope(const BundleOnCurve& b, int r) {
    if (b.rank <= r)
        throw std::domain_error("modified_slope: mu^r undefined for rk <= r");
    return Rational(b.degree) / Rational(b.rank - r);
}

GAffinePoly h0_x(const FibrationSpec& spec) {
    return koszul_k0(h0_proj(spec.pair.total), spec.m);
}

GAffinePoly trace_x(const FibrationSpec& spec) {
    return koszul_k0(trace_proj(spec.pair), spec.m) - koszul_k1(h0_proj(spec.pair.total), spec.m);
}

namespace {

ExpansionCoeffs extract_coeffs(const FibrationSpec& spec, const GAffinePoly& h0,
                               const GAffinePoly& tr) {
    const int n = spec.pair.total.rank - spec.m.codim();  // dim X
    if (!h0.g_part.coeff(n).is_zero() || !tr.g_part.coeff(n + 1).is_zero())
        throw std::logic_error("expansion_coeffs: top coefficients acquired genus dependence");
    ExpansionCoeffs ec;
    ec.b0 = h0.const_part.coeff(n);
    ec.b1 = GAffine{h0.const_part.coeff(n - 1), h0.g_part.coeff(n - 1)};
    ec.a0 = tr.const_part.coeff(n + 1);
    ec.a1 = GAffine{tr.const_part.coeff(n), tr.g_part.coeff(n)};
    return ec;
}

// Builds F from the extracted coefficients and cross-checks it two ways:
// against the closed-form derivative, and against a numeric route that
// specializes the full expansion at integer genera before extracting
// coefficients (which would expose any non-affine genus dependence).
GAffine futaki_from(const FibrationSpec& spec, const GAffinePoly& h0, const GAffinePoly& tr,
                    const ExpansionCoeffs& ec) {
    GAffine F{ec.a0 * ec.b1.const_part - ec.a1.const_part * ec.b0,
              ec.a0 * ec.b1.g_part - ec.a1.g_part * ec.b0};
    if (F.g_part != closed_form::dg_futaki(spec))
        throw std::logic_error("futaki_affine: pipeline dF/dg disagrees with the closed form");
    const int n = spec.pair.total.rank - spec.m.codim();
    auto at = [&](long long g) {
        Poly h = h0.at_genus(Rational(g));
        Poly t = tr.at_genus(Rational(g));
        return t.coeff(n + 1) * h.coeff(n - 1) - t.coeff(n) * h.coeff(n);
    };
    if (at(0) != F.const_part || at(1) - at(0) != F.g_part || at(8) - at(7) != F.g_part)
        throw std::logic_error("futaki_affine: finite differences break affineness");
    return F;
}

}  // namespace

ExpansionCoeffs expansion_coeffs(const FibrationSpec& spec) {
    return extract_coeffs(spec, h0_x(spec), trace_x(spec));
}

namespace closed_form {

Rational b0(const FibrationSpec& spec) {
    int e = spec.pair.total.rank, r = spec.m.codim();
    return -Rational(spec.m.product()) * Rational(e) * spec.pair.total.slope() /
           factorial(static_cast<unsigned long>(e - r));
}

Rational a0(const FibrationSpec& spec) {
    int e = spec.pair.total.rank, f = spec.pair.sub.rank, r = spec.m.codim();
    Rational num = Rational(f) * spec.pair.sub.slope() +
                   Rational(e) * Rational(f - r) * spec.pair.total.slope();
    return Rational(spec.m.product()) * num / factorial(static_cast<unsigned long>(e + 1 - r));
}

Rational dg_b1(const FibrationSpec& spec) {
    int e = spec.pair.total.rank, r = spec.m.codim();
    return -Rational(spec.m.product()) / factorial(static_cast<unsigned long>(e - 1 - r));
}

Rational dg_a1(const FibrationSpec& spec) {
    int e = spec.pair.total.rank, f = spec.pair.sub.rank, r = spec.m.codim();
    return Rational(spec.m.product()) * Rational(f - r) / factorial(static_cast<unsigned long>(e - r));
}

Rational dg_futaki(const FibrationSpec& spec) {
    int e = spec.pair.total.rank, f = spec.pair.sub.rank, r = spec.m.codim();
    Rational pm(spec.m.product());
    Rational num = Rational(f - r) * Rational(e) * spec.pair.total.slope() -
                   Rational(e - r) * Rational(f) * spec.pair.sub.slope();
    return pm * pm * num /
           (factorial(static_cast<unsigned long>(e - r)) * factorial(static_cast<unsigned long>(e - r + 1)));
}

}  // namespace closed_form

GAffine futaki_affine(const FibrationSpec& spec) {
    GAffinePoly h0 = h0_x(spec);
    GAffinePoly tr = trace_x(spec);
    return futaki_from(spec, h0, tr, extract_coeffs(spec, h0, tr));
}

std::optional<Rational> genus_threshold(const FibrationSpec& spec) {
    GAffine F = futaki_affine(spec);
    if (F.g_part.sign() >= 0) return std::nullopt;
    return -F.const_part / F.g_part;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::DestabilizesForLargeGenus: return "DestabilizesForLargeGenus";
        case Verdict::DestabilizesAtGenus: return "DestabilizesAtGenus";
        case Verdict::NoConclusion: return "NoConclusion";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

Verdict verdict(const FibrationSpec& spec, std::optional<long long> genus) {
    int r = spec.m.codim();
    if (genus) {
        if (*genus < 0) throw std::domain_error("verdict: genus must be >= 0");
        GAffine F = futaki_affine(spec);
        return F.at_genus(Rational(*genus)).sign() < 0 ? Verdict::DestabilizesAtGenus
                                                       : Verdict::NoConclusion;
    }
    Rational muE = modified_slope(spec.pair.total, r);
    Rational muF = modified_slope(spec.pair.sub, r);
    if (muF > muE) return Verdict::DestabilizesForLargeGenus;
    if (muF == muE) return Verdict::Indeterminate;
    return Verdict::NoConclusion;
}

FutakiReport analyze(const FibrationSpec& spec, std::optional<long long> genus) {
    if (genus && *genus < 0) throw std::domain_error("analyze: genus must be >= 0");
    const int r = spec.m.codim();
    const GAffinePoly h0 = h0_x(spec);
    const GAffinePoly tr = trace_x(spec);
    const ExpansionCoeffs ec = extract_coeffs(spec, h0, tr);
    FutakiReport rep;
    rep.b0 = ec.b0;
    rep.b1 = ec.b1;
    rep.a0 = ec.a0;
    rep.a1 = ec.a1;
    rep.futaki = futaki_from(spec, h0, tr, ec);
    rep.mu_r_E = modified_slope(spec.pair.total, r);
    rep.mu_r_F = modified_slope(spec.pair.sub, r);
    if (rep.futaki.g_part.sign() < 0)
        rep.threshold = -rep.futaki.const_part / rep.futaki.g_part;
    rep.genus = genus;
    if (genus) {
        rep.futaki_at_genus = rep.futaki.at_genus(Rational(*genus));
        rep.verdict = rep.futaki_at_genus->sign() < 0 ? Verdict::DestabilizesAtGenus
                                                      : Verdict::NoConclusion;
    } else if (rep.mu_r_F > rep.mu_r_E) {
        rep.verdict = Verdict::DestabilizesForLargeGenus;
    } else if (rep.mu_r_F == rep.mu_r_E) {
        rep.verdict = Verdict::Indeterminate;
    } else {
        rep.verdict = Verdict::NoConclusion;
    }
    rep.globally_generated_asserted = spec.globally_generated_asserted;
    return rep;
}

}  // namespace futaki
