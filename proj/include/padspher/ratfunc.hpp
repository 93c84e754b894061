#pragma once

#include "padspher/laurent.hpp"

#include <map>

namespace padspher {

/// Rational function num/den over the Laurent ring, kept in canonical form:
///   - num and den are genuine polynomials (all exponents >= 0),
///   - for every variable, at least one of num/den has a term free of it,
///   - poly_gcd(num, den) is a unit,
///   - den has coprime integer coefficients and positive lex-leading one.
/// Two canonical RatFuncs are equal iff they are syntactically equal, which
/// agrees with the cross-multiplication test (see equivalent()).
class RatFunc {
public:
    explicit RatFunc(int nvars = 0)
        : num_(Laurent(nvars)), den_(Laurent::constant(nvars, 1)) {}
    explicit RatFunc(const Laurent& num);
    RatFunc(const Laurent& num, const Laurent& den);

    static RatFunc one(int nvars) { return RatFunc(Laurent::constant(nvars, 1)); }
    static RatFunc constant(int nvars, const Rational& c) {
        return RatFunc(Laurent::constant(nvars, c));
    }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Cross-multiplication equality num1*den2 == num2*den1; the test every
    /// identity check reduces to.  Agrees with operator== on canonical
    /// values but never computes a gcd.
    static bool equivalent(const RatFunc& a, const RatFunc& b);

    RatFunc inverse() const;
    RatFunc permuted(const std::vector<int>& image, int rank) const;
    RatFunc extended(int new_nvars) const;

private:
    void canonicalize();

    Laurent num_, den_;
};

/// Exact substitution of rational-function values for variables (slot ->
/// value); unbound slots stay formal.  Throws SpecializationPole when the
/// denominator specializes to zero.
RatFunc substitute(const RatFunc& e, const std::map<int, RatFunc>& bindings);

/// Fast path for single-term bindings (slot -> coefficient * monomial).
RatFunc substitute_monomials(const RatFunc& e,
                             const std::map<int, std::pair<Exp, Rational>>& bindings);

} // namespace padspher
