#include "padspher/spherical.hpp"

namespace padspher {

SphericalCase::SphericalCase(CaseTag tag_, int n_) : tag(tag_), n(n_) {
    if (n < 1) throw std::invalid_argument("SphericalCase: n >= 1");
}

Laurent SphericalCase::hl_parameter(int nvars) const {
    switch (tag) {
        case CaseTag::alternating: return Laurent::q(nvars, -2);
        case CaseTag::hermitian_unramified: return Laurent::q(nvars, -1).scaled(-1);
        case CaseTag::symmetric_oracle_only:
            throw NoClosedForm("no closed form for the symmetric case");
    }
    throw std::logic_error("bad tag");
}

namespace {

void require_closed_form(const SphericalCase& c, const char* op) {
    if (!c.has_closed_form())
        throw NoClosedForm(std::string(op) + ": the symmetric case is oracle-only");
}

// Rank-one factor g(x_a, x_b) of the prefactor as a num/den pair.
std::pair<Laurent, Laurent> pair_factor(const SphericalCase& c, int a, int b) {
    const int nv = c.n;
    Exp ratio(nv + 1, 0);
    ratio[a] = 1;
    ratio[b] = -1;
    Laurent one = Laurent::constant(nv, 1);
    Exp num_e = ratio;
    num_e[0] = -1;
    Laurent num = one - Laurent::monomial(nv, num_e, 1);
    Laurent den;
    if (c.tag == CaseTag::alternating) {
        Exp den_e = ratio;
        den_e[0] = 1;
        den = one - Laurent::monomial(nv, den_e, 1);
    } else {
        den = one + Laurent::monomial(nv, ratio, 1);
    }
    return {num, den};
}

} // namespace

RatFunc prefactor(const SphericalCase& c) {
    require_closed_form(c, "prefactor");
    Laurent num = Laurent::constant(c.n, 1), den = num;
    for (int i = 1; i <= c.n; ++i) {
        for (int j = i + 1; j <= c.n; ++j) {
            auto [fn, fd] = pair_factor(c, i, j);
            num *= fn;
            den *= fd;
        }
    }
    return RatFunc(num, den);
}

RatFunc spherical_closed_form(const SphericalCase& c, const Partition& lambda) {
    require_closed_form(c, "spherical_closed_form");
    if (lambda.length() != c.n) throw BadLength("spherical_closed_form: len(lambda) != n");
    Laurent p = hl_polynomial(lambda, c.n, c.hl_parameter(c.n));
    return prefactor(c) * RatFunc(p);
}

RatFunc psi_normalized(const SphericalCase& c, const Partition& lambda) {
    require_closed_form(c, "psi_normalized");
    if (lambda.length() != c.n) throw BadLength("psi_normalized: len(lambda) != n");
    RatFunc p(hl_polynomial(lambda, c.n, c.hl_parameter(c.n)));
    Partition zero(std::vector<int>(c.n, 0));
    RatFunc quotient = spherical_closed_form(c, lambda) / spherical_closed_form(c, zero);
    if (quotient != p)
        throw std::logic_error("psi_normalized: prefactor failed to cancel");
    return p;
}

RatFunc feq_factor(const SphericalCase& c, const WeylElement& sigma) {
    require_closed_form(c, "feq_factor");
    if (sigma.rank() != c.n) throw BadLength("feq_factor: sigma rank != n");
    // Orientation-preserved pairs cancel between prefactor(z) and
    // prefactor(sigma z); each inversion (i<j, sigma(i)>sigma(j)) leaves
    // g(x_a,x_b)/g(x_b,x_a) with a = sigma(j) < b = sigma(i).
    Laurent num = Laurent::constant(c.n, 1), den = num;
    for (int i = 1; i <= c.n; ++i) {
        for (int j = i + 1; j <= c.n; ++j) {
            if (sigma(i) <= sigma(j)) continue;
            int a = sigma(j), b = sigma(i);
            auto [fn, fd] = pair_factor(c, a, b);
            auto [gn, gd] = pair_factor(c, b, a);
            num *= fn * gd;
            den *= fd * gn;
        }
    }
    return RatFunc(num, den);
}

ReconstructResult casselman_reconstruct(const SphericalCase& c, const Partition& lambda) {
    require_closed_form(c, "casselman_reconstruct");
    if (lambda.length() != c.n) throw BadLength("casselman_reconstruct: len(lambda) != n");
    const int nv = c.n;
    const Laurent t = c.hl_parameter(nv);

    // gamma * x^lambda = x^lambda prod_{i<j}(x_i - t x_j) / prod_{i<j}(x_i - x_j),
    // and sigma permutes the Vandermonde up to sign, so the Weyl sum is an
    // antisymmetrization over a single denominator with one exact division.
    Laurent core(nv);
    {
        Exp mono(nv + 1, 0);
        for (int i = 1; i <= nv; ++i) mono[i] = lambda.part(i - 1);
        core = Laurent::monomial(nv, mono, 1);
        for (int i = 1; i <= nv; ++i)
            for (int j = i + 1; j <= nv; ++j)
                core *= Laurent::x(nv, i) - t * Laurent::x(nv, j);
    }
    Laurent num(nv);
    for (const auto& sigma : WeylElement::all(c.n))
        num += weyl_act(sigma, core).scaled(sigma.sign());
    Laurent vand = Laurent::constant(nv, 1);
    for (int i = 1; i <= nv; ++i)
        for (int j = i + 1; j <= nv; ++j) vand *= Laurent::x(nv, i) - Laurent::x(nv, j);

    ReconstructResult r{RatFunc(Laurent::exact_div(num, vand)), RatFunc(nv), false};

    Laurent one_minus_t_n = (Laurent::constant(nv, 1) - t).pow(c.n);
    Laurent factor = Laurent::exact_div(hl_weight(lambda, t), one_minus_t_n);
    r.predicted = RatFunc(factor * hl_polynomial(lambda, c.n, t));
    r.match = r.sum == r.predicted;
    return r;
}

std::map<int, std::pair<Exp, Rational>> oracle_substitution(const SphericalCase& c) {
    require_closed_form(c, "oracle_substitution");
    std::map<int, std::pair<Exp, Rational>> bind;
    for (int i = 1; i <= c.n; ++i) {
        Exp e(c.n + 1, 0);
        for (int j = i; j <= c.n; ++j) e[j] = 1;
        Rational coef = 1;
        if (c.tag == CaseTag::alternating) {
            e[0] = 2 * i - c.n - 1;
        } else {
            e[0] = -(c.n - i);
            if ((c.n - i + 1) % 2 != 0) coef = -1;
        }
        bind[i] = {e, coef};
    }
    return bind;
}

} // namespace padspher
