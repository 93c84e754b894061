#include "padspher/zeta.hpp"

namespace padspher {

namespace {

// Shell decomposition of the window: (valuation v, average of phi there)
// for v in [-L, m), plus the residual ball value at v = m.
struct ShellData {
    std::vector<std::pair<int, CycVec>> shells;  // shells -L..m-1
    CycVec ball;                                 // value on pi^m O
};

ShellData shell_averages(const StepFunction& phi) {
    ShellData out;
    std::uint64_t n = phi.values.size();
    std::uint64_t pl = 1;
    for (int i = 0; i < phi.L; ++i) pl *= (std::uint64_t)phi.p;
    for (int v = -phi.L; v < phi.m; ++v) {
        // Cosets whose representative has valuation exactly v: c = p^{v+L} t
        // with t a unit mod p^{m-v}.
        CycVec acc(phi.p, 1);
        long count = 0;
        std::uint64_t step = 1;
        for (int i = 0; i < v + phi.L; ++i) step *= (std::uint64_t)phi.p;
        for (std::uint64_t c = step; c < n; c += step) {
            if ((c / step) % (std::uint64_t)phi.p == 0) continue;
            acc = acc + phi.values[c];
            ++count;
        }
        out.shells.emplace_back(v, acc.scaled(Rational(1, count)));
    }
    out.ball = phi.values[0];
    return out;
}

Laurent one1() { return Laurent::constant(1, 1); }
Laurent q1(int e = 1) { return Laurent::q(1, e); }
Laurent u1(int e = 1) { return Laurent::x(1, 1, e); }

// zeta(phi, s) = int phi |x|^{s-1} dx as a RatFunc in (q, u):
//   sum_v avg_v (1 - q^-1) u^v  +  ball (1 - q^-1) u^m / (1 - u).
RatFunc zeta_mult(const StepFunction& phi) {
    ShellData sd = shell_averages(phi);
    Laurent omq = one1() - q1(-1);
    Laurent num(1);
    for (const auto& [v, avg] : sd.shells) {
        if (!avg.is_rational())
            throw std::invalid_argument("zeta: non-rational shell average");
        num += u1(v).scaled(avg.rational_value()) * omq * (one1() - u1(1));
    }
    if (!sd.ball.is_rational())
        throw std::invalid_argument("zeta: non-rational ball value");
    num += u1(phi.m).scaled(sd.ball.rational_value()) * omq;
    return RatFunc(num, one1() - u1(1));
}

} // namespace

ZetaResult zeta_step(const StepFunction& phi) {
    ZetaResult out;
    ShellData sd = shell_averages(phi);
    bool rational = sd.ball.is_rational();
    for (const auto& [v, avg] : sd.shells) rational = rational && avg.is_rational();
    if (!rational) {
        out.closed = false;
        out.shells = sd.shells;
        out.shells.emplace_back(phi.m, sd.ball);
        return out;
    }
    // Z(phi; s) = sum_v avg_v (1-q^-1) q^-v u^v + ball (1-q^-1) q^-m u^m/(1-q^-1 u)
    Laurent omq = one1() - q1(-1);
    Laurent den = one1() - q1(-1) * u1(1);
    Laurent num(1);
    for (const auto& [v, avg] : sd.shells) {
        Laurent mono = q1(-v) * u1(v);
        num += mono.scaled(avg.rational_value()) * omq * den;
    }
    num += (q1(-phi.m) * u1(phi.m)).scaled(sd.ball.rational_value()) * omq;
    out.closed = true;
    out.value = RatFunc(num, den);
    return out;
}

RatFunc zeta_line(const StepFunction& phi) {
    ZetaResult z = zeta_step(phi);
    if (!z.closed) throw std::invalid_argument("zeta_line: no closed form");
    return z.value;
}

RatFunc gamma_extract(const StepFunction& phi) {
    RatFunc denom = zeta_mult(phi);
    if (denom.is_zero()) throw ZeroZeta("gamma_extract: zeta(phi, s) vanishes");
    RatFunc zhat = zeta_mult(fourier_finite(phi));
    // s -> 1 - s is u -> q^{-1} u^{-1}.
    std::map<int, std::pair<Exp, Rational>> reflect{{1, {Exp{-1, -1}, Rational(1)}}};
    RatFunc numer = substitute_monomials(zhat, reflect);
    RatFunc gamma = numer / denom;
    // The kernel sums carry the residue cardinality numerically, so the
    // exact statement specializes q to the prime of the window.
    std::map<int, std::pair<Exp, Rational>> at_p{{0, {Exp{0, 0}, Rational(phi.p)}}};
    return substitute_monomials(gamma, at_p);
}

RatFunc tate_gamma_reference(long p) {
    RatFunc num(one1() - u1(1));
    RatFunc den(one1() - q1(-1) * u1(-1));
    RatFunc gamma = num / den;
    if (p == 0) return gamma;
    std::map<int, std::pair<Exp, Rational>> at_p{{0, {Exp{0, 0}, Rational(p)}}};
    return substitute_monomials(gamma, at_p);
}

namespace {

// int_{pi^a O} |x|^s dx = (1 - q^-1) q^{-a} u^a / (1 - q^-1 u), in the slot
// u_i of an nvars-variable ring.
RatFunc line_ball_integral(int nvars, int slot, int a) {
    Laurent one = Laurent::constant(nvars, 1);
    Laurent num = (Laurent::q(nvars, -a) * Laurent::x(nvars, slot, a)) * (one - Laurent::q(nvars, -1));
    Laurent den = one - Laurent::q(nvars, -1) * Laurent::x(nvars, slot);
    return RatFunc(num, den);
}

// Plain volume of pi^a O.
RatFunc ball_volume(int nvars, int a) {
    return RatFunc(Laurent::q(nvars, -a));
}

} // namespace

ScalingReport scaling_check(const PVContext& ctx, int m) {
    if (ctx.d != 1) throw UnsupportedCase("scaling_check: only d = 1 integrals are implemented");
    ScalingReport rep;
    const auto& e = ctx.degrees;
    int nvars = (int)e.size();

    auto box_integral = [&](int a) -> RatFunc {
        if (e == std::vector<int>{1}) {
            // f = v1 on k^2.
            return line_ball_integral(nvars, 1, a) * ball_volume(nvars, a);
        }
        if (e == std::vector<int>{2}) {
            // f = v1 v2: |f|^s splits into two line factors in the same u.
            return line_ball_integral(nvars, 1, a) * line_ball_integral(nvars, 1, a);
        }
        if (e == std::vector<int>{1, 1}) {
            // (f1, f2) = (v1, v2).
            return line_ball_integral(nvars, 1, a) * line_ball_integral(nvars, 2, a);
        }
        throw UnsupportedCase("scaling_check: unsupported invariant degrees");
    };

    rep.lhs = box_integral(m);
    // q^{-m(2d + sum e_i s_i)} = q^{-2dm} prod u_i^{m e_i}.
    Exp mono(nvars + 1, 0);
    mono[0] = -2 * ctx.d * m;
    for (int i = 0; i < nvars; ++i) mono[i + 1] = m * e[i];
    rep.rhs = RatFunc(Laurent::monomial(nvars, mono, 1)) * box_integral(0);
    rep.pass = rep.lhs == rep.rhs;
    rep.detail = rep.pass ? "scaling identity holds" : "scaling identity failed";
    return rep;
}

RatFunc conductor_correction(int ell, const PVContext& ctx) {
    int nvars = (int)ctx.degrees.size();
    Exp mono(nvars + 1, 0);
    mono[0] = ell * ctx.d;
    for (int i = 0; i < nvars; ++i) mono[i + 1] = -ell * ctx.degrees[i];
    return RatFunc(Laurent::monomial(nvars, mono, 1));
}

} // namespace padspher
