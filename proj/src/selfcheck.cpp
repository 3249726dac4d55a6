#include "futaki/selfcheck.hpp"

#include <sstream>

namespace futaki::selfcheck {

void SuiteResult::record_failure(const std::string& what) {
    ++failures;
    if (samples.size() < 5) samples.push_back(what);
}

namespace {

// e <= 6, 1 <= r <= 3, r < f < e, |deg E| <= 6, |deg F| <= 6, m_i in {2, 3}.
template <typename Fn>
void for_each_grid_spec(Fn&& fn) {
    for (int e = 3; e <= 6; ++e)
        for (int r = 1; r <= 3; ++r)
            for (int f = r + 1; f < e; ++f)
                for (long long degE = -6; degE <= 6; ++degE)
                    for (long long degF = -6; degF <= 6; ++degF)
                        for (unsigned mask = 0; mask < (1u << r); ++mask) {
                            std::vector<int> m(static_cast<size_t>(r));
                            for (int i = 0; i < r; ++i)
                                m[static_cast<size_t>(i)] = 2 + ((mask >> i) & 1u);
                            fn(FibrationSpec{
                                SplitPair{BundleOnCurve(e, degE), BundleOnCurve(f, degF)},
                                MultiDegree{std::move(m)}});
                        }
}

std::string describe_m(const MultiDegree& md) {
    std::ostringstream os;
    os << "m=";
    const auto& vals = md.values();
    for (size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
    return os.str();
}

std::string describe_spec(const FibrationSpec& spec) {
    std::ostringstream os;
    os << "e=" << spec.pair.total.rank << " degE=" << spec.pair.total.degree
       << " f=" << spec.pair.sub.rank << " degF=" << spec.pair.sub.degree << " "
       << describe_m(spec.m);
    return os.str();
}

}  // namespace

SuiteResult check_absorption_identities(bool flip_s2_sign) {
    SuiteResult res;
    res.name = "absorption";
    for (int f = 1; f <= 4; ++f)
        for (int q = 1; q <= 4; ++q)
            for (long long k = 0; k <= 30; ++k) {
                AbsorptionValues closed = absorption_closed(f, q, k);
                if (flip_s2_sign) closed.s2 = -closed.s2;
                auto check = [&](AbsorptionSum which, const char* label,
                                 const Rational& closed_value) {
                    ++res.checks;
                    Rational brute = absorption_brute(f, q, k, which);
                    if (brute != closed_value) {
                        std::ostringstream os;
                        os << label << " f=" << f << " q=" << q << " k=" << k
                           << ": brute=" << brute.str() << " closed=" << closed_value.str();
                        res.record_failure(os.str());
                    }
                };
                check(AbsorptionSum::S1, "S1", closed.s1);
                check(AbsorptionSum::S2, "S2", closed.s2);
                check(AbsorptionSum::S3, "S3", closed.s3);
            }
    return res;
}

SuiteResult check_trace_oracle() {
    SuiteResult res;
    res.name = "trace-oracle";
    const long long genera[] = {0, 1, 2, 5};
    for (int f = 1; f <= 3; ++f)
        for (int q = 1; q <= 3; ++q)
            for (long long degF = -5; degF <= 5; ++degF)
                for (long long degQ = -5; degQ <= 5; ++degQ) {
                    SplitPair pair{BundleOnCurve(f + q, degF + degQ), BundleOnCurve(f, degF)};
                    GAffinePoly tr = trace_proj(pair);
                    for (long long k = 0; k <= 12; ++k)
                        for (long long g : genera) {
                            ++res.checks;
                            Rational want = trace_proj_brute(pair, k, g);
                            Rational got = tr.eval(Rational(k), Rational(g));
                            if (got != want) {
                                std::ostringstream os;
                                os << "trace f=" << f << " q=" << q << " degF=" << degF
                                   << " degQ=" << degQ << " k=" << k << " g=" << g
                                   << ": poly=" << got.str() << " brute=" << want.str();
                                res.record_failure(os.str());
                            }
                        }
                }
    return res;
}

SuiteResult check_koszul_leading_terms() {
    SuiteResult res;
    res.name = "koszul-leading";
    for (int r = 1; r <= 3; ++r) {
        std::vector<int> m(static_cast<size_t>(r), 1);
        while (true) {
            MultiDegree md{m};
            Rational rfact = factorial(static_cast<unsigned long>(r));
            Rational prodm{md.product()};
            for (int n = 0; n <= 8; ++n) {
                Poly p = Poly::monomial(n);
                Poly k0 = koszul_k0(p, md);
                Poly k1 = koszul_k1(p, md);

                ++res.checks;
                bool ok0 = (n >= r)
                               ? (k0.degree() == n - r &&
                                  k0.leading() == binomial(static_cast<unsigned long>(n),
                                                           static_cast<unsigned long>(r)) *
                                                      rfact * prodm)
                               : k0.is_zero();
                if (!ok0) {
                    std::ostringstream os;
                    os << "K0 n=" << n << " " << describe_m(md)
                       << ": got " << k0.str();
                    res.record_failure(os.str());
                }

                ++res.checks;
                bool ok1 = (n >= r - 1)
                               ? (k1.degree() == n - r + 1 &&
                                  k1.leading() == -(binomial(static_cast<unsigned long>(n),
                                                             static_cast<unsigned long>(r - 1)) *
                                                    rfact * prodm))
                               : k1.is_zero();
                if (!ok1) {
                    std::ostringstream os;
                    os << "K1 n=" << n << " " << describe_m(md)
                       << ": got " << k1.str();
                    res.record_failure(os.str());
                }
            }
            // odometer over m_i in 1..4
            size_t pos = 0;
            while (pos < m.size() && m[pos] == 4) m[pos++] = 1;
            if (pos == m.size()) break;
            ++m[pos];
        }
    }
    return res;
}

SuiteResult check_closed_form_coefficients() {
    SuiteResult res;
    res.name = "closed-form-b0-a0";
    for_each_grid_spec([&](const FibrationSpec& spec) {
        ExpansionCoeffs ec = expansion_coeffs(spec);
        ++res.checks;
        Rational b0_want = closed_form::b0(spec);
        if (ec.b0 != b0_want)
            res.record_failure("b0 " + describe_spec(spec) + ": pipeline=" + ec.b0.str() +
                               " closed=" + b0_want.str());
        ++res.checks;
        Rational a0_want = closed_form::a0(spec);
        if (ec.a0 != a0_want)
            res.record_failure("a0 " + describe_spec(spec) + ": pipeline=" + ec.a0.str() +
                               " closed=" + a0_want.str());
    });
    return res;
}

SuiteResult check_derivative_law(DerivativeLawStats* stats) {
    SuiteResult res;
    res.name = "derivative-law";
    for_each_grid_spec([&](const FibrationSpec& spec) {
        const int e = spec.pair.total.rank;
        const int f = spec.pair.sub.rank;
        const int r = spec.m.codim();
        const int n = e - r;

        GAffinePoly h0 = h0_x(spec);
        GAffinePoly tr = trace_x(spec);
        auto futaki_at = [&](long long g) {
            Poly h0g = h0.at_genus(Rational(g));
            Poly trg = tr.at_genus(Rational(g));
            return trg.coeff(n + 1) * h0g.coeff(n - 1) - trg.coeff(n) * h0g.coeff(n);
        };
        Rational f1_fd = futaki_at(1) - futaki_at(0);

        ++res.checks;
        Rational want = closed_form::dg_futaki(spec);
        if (f1_fd != want)
            res.record_failure("dF/dg " + describe_spec(spec) + ": finite-diff=" + f1_fd.str() +
                               " closed=" + want.str());

        // Symbolic route: the genus-linear parts of the same expansion.
        ++res.checks;
        Rational f1_sym = tr.const_part.coeff(n + 1) * h0.g_part.coeff(n - 1) -
                          tr.g_part.coeff(n) * h0.const_part.coeff(n);
        if (f1_sym != f1_fd)
            res.record_failure("dF/dg " + describe_spec(spec) + ": g-part=" + f1_sym.str() +
                               " finite-diff=" + f1_fd.str());

        Rational muE = modified_slope(spec.pair.total, r);
        Rational muF = modified_slope(spec.pair.sub, r);
        ++res.checks;
        if (f1_fd.sign() != (muE - muF).sign())
            res.record_failure("sign law " + describe_spec(spec) + ": dF/dg=" + f1_fd.str() +
                               " mu^r(E)-mu^r(F)=" + (muE - muF).str());

        // Simplified single-difference formula and the exact positive
        // factor (e-r)(f-r) separating it from the true derivative.
        Rational pm{spec.m.product()};
        Rational literal = pm * pm * (muE - muF) /
                           (factorial(static_cast<unsigned long>(e - r)) *
                            factorial(static_cast<unsigned long>(e - r + 1)));
        ++res.checks;
        if (f1_fd != Rational((e - r) * (f - r)) * literal)
            res.record_failure("factor law " + describe_spec(spec) + ": dF/dg=" + f1_fd.str() +
                               " (e-r)(f-r)*simplified=" +
                               (Rational((e - r) * (f - r)) * literal).str());
        if (stats) {
            if (f1_fd == literal)
                ++stats->literal_agree;
            else
                ++stats->literal_differ;
        }
    });
    return res;
}

std::vector<SuiteResult> run_all(bool flip_s2_sign) {
    std::vector<SuiteResult> all;
    all.push_back(check_absorption_identities(flip_s2_sign));
    all.push_back(check_trace_oracle());
    all.push_back(check_koszul_leading_terms());
    all.push_back(check_closed_form_coefficients());
    all.push_back(check_derivative_law());
    return all;
}

}  // namespace futaki::selfcheck
