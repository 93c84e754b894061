#pragma once

#include "padspher/errors.hpp"
#include "padspher/rational.hpp"

#include <vector>

namespace padspher {

/// Element of the cyclotomic field Q(zeta) with zeta a primitive p^M-th
/// root of unity, stored as an exact rational vector over the powers
/// zeta^0..zeta^{p^M - 1} and kept reduced against the p^M-th cyclotomic
/// relation (support below (p-1) p^{M-1}).
class CycVec {
public:
    CycVec() = default;
    CycVec(long p, int M);
    static CycVec rational(long p, int M, const Rational& c);
    /// zeta^k
    static CycVec root(long p, int M, long k);

    long p() const { return p_; }
    int order_exp() const { return M_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CycVec operator+(const CycVec& o) const;
    CycVec operator-(const CycVec& o) const;
    CycVec scaled(const Rational& c) const;
    /// Multiplication by zeta^k (an index rotation).
    CycVec rotated(long k) const;
    /// In-place *this += zeta^k * x for x of order dividing ours; defers
    /// the cyclotomic reduction, call reduce() after a batch.
    void add_rotated(const CycVec& x, long k);
    void reduce();
    bool operator==(const CycVec& o) const;

    /// Re-embeds into Q(zeta_{p^M'}) for M' >= M.
    CycVec lifted(int M2) const;

    const std::vector<Rational>& coords() const { return a_; }

private:
    long p_ = 0;
    int M_ = 0;
    std::vector<Rational> a_;
};

/// Finite-level Schwartz-Bruhat function on one p-adic line: supported in
/// pi^{-L} O, constant on cosets of pi^m O, with CycVec values.  The coset
/// c = sum_{j=-L}^{m-1} c_j pi^j is indexed by the integer
/// sum c_j p^{j+L} in [0, p^{L+m}).
struct StepFunction {
    long p = 3;
    int L = 0;  // support window pi^{-L} O
    int m = 1;  // locally constant modulo pi^m O
    std::vector<CycVec> values;

    StepFunction() = default;
    StepFunction(long p_, int L_, int m_);

    std::size_t cosets() const { return values.size(); }

    static StepFunction indicator_ball(long p, int L, int m, int valuation_at_least);
    static StepFunction indicator_units(long p, int L, int m);

    /// Value at the coset of a rational with p-valuation >= -L (exact).
    const CycVec& value_at(const Rational& x) const;

    /// The same function on a finer grid (larger window, finer cosets).
    StepFunction refined(int L2, int m2) const;

    /// phi(-x).
    StepFunction reflected() const;

    bool operator==(const StepFunction& o) const;
};

/// Self-dual finite Fourier transform with a conductor-zero character:
///   F(phi)(v) = sum over cosets of eta(v c) phi(c) q^{-m},
/// supported in pi^{-m} O and constant mod pi^L O.  Output cyclotomic order
/// is p^{L+m}.  Throws WindowOverflow if the input window cannot represent
/// the kernel exactly.
StepFunction fourier_finite(const StepFunction& phi);

/// Two-variable step function as a product phi1(v1) phi2(v2); enough for
/// the rank-one prehomogeneous integrals used here.
struct StepFunction2D {
    StepFunction f1, f2;
};

/// F(phi)(v) = int eta(v1 w2 - v2 w1) phi(w) dw on the product window.
StepFunction2D fourier_finite_2d(const StepFunction2D& phi);

} // namespace padspher
