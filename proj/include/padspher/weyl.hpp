#pragma once

#include "padspher/ratfunc.hpp"

#include <vector>

namespace padspher {

/// Element of the symmetric group S_n, stored as 1-based images:
/// sigma(i) = image(i).  Composition is (s*t)(i) = s(t(i)).
class WeylElement {
public:
    explicit WeylElement(int n);
    static WeylElement identity(int n) { return WeylElement(n); }
    static WeylElement from_images(std::vector<int> images);
    static WeylElement transposition(int n, int a, int b);
    static WeylElement longest(int n);
    static std::vector<WeylElement> all(int n);

    int rank() const { return (int)img_.size(); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    /// Number of inversions ell(sigma) = #{ i<j : sigma(i) > sigma(j) }.
    int length() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    bool is_identity() const;

    WeylElement inverse() const;
    WeylElement operator*(const WeylElement& o) const;
    bool operator==(const WeylElement& o) const { return img_ == o.img_; }

    std::string to_string() const;

private:
    std::vector<int> img_;
};

/// Variable permutation action x_i -> x_{sigma(i)} on the first rank()
/// x-slots.  Left action: weyl_act(s, weyl_act(t, e)) = weyl_act(s*t, e).
Laurent weyl_act(const WeylElement& sigma, const Laurent& e);
RatFunc weyl_act(const WeylElement& sigma, const RatFunc& e);

/// Length generating polynomial sum_{sigma in S_n} t^{ell(sigma)}, the
/// Poincare sum of the Iwahori indices [U sigma U : U] = q^{ell(sigma)} at
/// t = q^{-1} for a split group.
Laurent poincare_sum(int n, const Laurent& t);

/// Split c-factor (1 - t*X)/(1 - X); throws SpecializationPole when X == 1.
RatFunc c_factor(const Laurent& t, const RatFunc& X);

/// gamma(n, t) = prod_{1<=i<j<=n} (1 - t x_j/x_i)/(1 - x_j/x_i).
RatFunc gamma_product(int n, const Laurent& t);

/// Partial product of c-factors over the inversion pairs of sigma.
RatFunc c_sigma(const WeylElement& sigma, int n, const Laurent& t);

enum class CaseTag { alternating, hermitian_unramified, symmetric_oracle_only };

std::string case_name(CaseTag tag);
CaseTag case_from_name(const std::string& name);

enum class MapDirection { s_to_z, z_to_s };

/// Affine change of coordinates between the s- and z-parameters of a case:
///   alternating:  s_i = -z_i + z_{i+1} - 2 (i < n),  s_n = -z_n + n - 1
///   hermitian:    s_i = -z_i + z_{i+1}     (i < n),  s_n = -z_n
/// Exact over rationals; round trips are the identity.  Throws BadLength on
/// a wrong-size vector and UnsupportedCase for the oracle-only case.
std::vector<Rational> variable_map(CaseTag tag, int n, MapDirection dir,
                                   const std::vector<Rational>& v);

} // namespace padspher
