#pragma once

#include "padspher/ratfunc.hpp"
#include "padspher/step_function.hpp"

namespace padspher {

/// Data of one small prehomogeneous setting: extension degree d of k'/k,
/// the v-homogeneity degrees of the invariants and the index denominator e
/// used for fractional q-powers (handled by declaring rescaled variables,
/// never by fractional exponents).
struct PVContext {
    int d = 1;
    std::vector<int> degrees{1};
    int e = 1;
};

/// Z(phi; s) = int phi(x) |x|^s dx with the additive measure vol(O) = 1,
/// as a canonical RatFunc in q (slot 0) and u = q^{-s} (slot 1).  Requires
/// rational shell averages; a Fourier transform of a rational function
/// qualifies whenever its averages collapse, otherwise the per-shell
/// averages are reported instead of a closed form.
struct ZetaResult {
    bool closed = false;
    RatFunc value{1};
    /// (valuation, average) pairs when no closed form exists.
    std::vector<std::pair<int, CycVec>> shells;
};
ZetaResult zeta_step(const StepFunction& phi);

/// Closed form or throws ZeroZeta/std::invalid_argument when unavailable.
RatFunc zeta_line(const StepFunction& phi);

/// Tate gamma factor gamma(s) = zeta(F(phi), 1-s) / zeta(phi, s) in the
/// multiplicative normalization zeta(phi, s) = int phi(x)|x|^{s-1} dx,
/// with q specialized to the window's residue cardinality (the finite
/// kernel sums are numeric in p).  Independent of phi; throws ZeroZeta
/// when zeta(phi, s) vanishes.
RatFunc gamma_extract(const StepFunction& phi);

/// The unramified gamma factor (1 - q^{-s})/(1 - q^{s-1}); formal in q
/// when p = 0, otherwise specialized at q = p.
RatFunc tate_gamma_reference(long p = 0);

struct ScalingReport {
    bool pass = false;
    RatFunc lhs{1}, rhs{1};
    std::string detail;
};

/// Checks int_{V(pi^m O)} prod |f_i|^{s_i} dv =
///        q^{-m(2d + sum e_i s_i)} * int_{V(O)} prod |f_i|^{s_i} dv
/// exactly, for V = k^2 with the product invariants selected by degrees:
/// {1} is f = v1, {2} is f = v1 v2, {1,1} is (f1, f2) = (v1, v2).
ScalingReport scaling_check(const PVContext& ctx, int m);

/// Character-conductor renormalization q^{ell (d + sum e_i s_i)} as a
/// monomial in q and the u_i; the library pins the conductor to zero, so
/// this factor is exposed as a formula only.
RatFunc conductor_correction(int ell, const PVContext& ctx);

} // namespace padspher
