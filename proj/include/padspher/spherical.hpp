#pragma once

#include "padspher/hall_littlewood.hpp"
#include "padspher/weyl.hpp"

#include <optional>

namespace padspher {

/// One homogeneous-space case.  The tag determines the Hall-Littlewood
/// parameter, the prefactor shape and the coordinate maps; the symmetric
/// case is oracle-only and owns no closed form.
struct SphericalCase {
    CaseTag tag;
    int n;

    SphericalCase(CaseTag tag_, int n_);

    bool has_closed_form() const { return tag != CaseTag::symmetric_oracle_only; }
    /// q^{-2} for alternating, -q^{-1} for hermitian.
    Laurent hl_parameter(int nvars) const;
    std::string name() const { return case_name(tag); }
};

/// Scalar normalization for one lambda, fitted from the integration oracle
/// (the closed forms are printed only up to this constant).
struct NormalizationConstant {
    enum class Provenance { unset, fitted_from_oracle };
    std::optional<Rational> value;
    Provenance provenance = Provenance::unset;
};

/// The product over pairs i<j of the case's rank-one factor
///   alternating: (1 - q^{-1} x_i/x_j) / (1 - q x_i/x_j)
///   hermitian:   (1 - q^{-1} x_i/x_j) / (1 + x_i/x_j)
/// Throws NoClosedForm for the symmetric case.
RatFunc prefactor(const SphericalCase& c);

/// prefactor * P_lambda(x; t_case); the closed form of the spherical
/// function at the lambda-th orbit representative, up to the scalar
/// NormalizationConstant which the caller applies when fitted.
RatFunc spherical_closed_form(const SphericalCase& c, const Partition& lambda);

/// Spherical function normalized at lambda = 0.  The prefactor cancels
/// exactly, leaving P_lambda(x; t_case) times the symbolic scalar
/// c_lambda/c_0; the cancellation itself is asserted.
RatFunc psi_normalized(const SphericalCase& c, const Partition& lambda);

/// Scalar factor b_sigma with omega(z) = b_sigma(z) * omega(sigma z), where
/// (sigma z) permutes the slots via weyl_act.  Computed as the prefactor
/// ratio with the pairs that keep their orientation cancelled symbolically;
/// for the hermitian case this is the printed product
///   prod_{i<j, sigma(i)>sigma(j)}
///     (q^{z_sigma(i)} - q^{z_sigma(j)-1}) / (q^{z_sigma(j)} - q^{z_sigma(i)-1}).
RatFunc feq_factor(const SphericalCase& c, const WeylElement& sigma);

struct ReconstructResult {
    RatFunc sum;        ///< (1/1) * sum_sigma weyl_act(sigma, gamma * x^lambda)
    RatFunc predicted;  ///< (w_lambda(t)/(1-t)^n) * P_lambda(x; t)
    bool match;
};

/// Weyl-sum reconstruction of the spherical function from the gamma factor
/// and the functional equations, checked against the closed form.
ReconstructResult casselman_reconstruct(const SphericalCase& c, const Partition& lambda);

/// Per-variable substitution realizing the closed form in the oracle's
/// series variables u_i = q^{-s_i}: slot i of the closed form becomes
/// coefficient * u_i u_{i+1} ... u_n.  The case's epsilon-shift lives in
/// these coefficients; a global scalar (constant on each homogeneous
/// closed form) is dropped and absorbed by the fitted constant.
std::map<int, std::pair<Exp, Rational>> oracle_substitution(const SphericalCase& c);

} // namespace padspher
