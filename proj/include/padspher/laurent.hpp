#pragma once

#include "padspher/errors.hpp"
#include "padspher/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace padspher {

// Exponent vector.  Slot 0 belongs to the formal variable q, slots 1..nvars
// to x_1..x_n.  Exponents may be negative (Laurent ring).
using Exp = std::vector<int>;

// Lexicographic order on exponent vectors, slot 0 most significant.
struct ExpLex {
    bool operator()(const Exp& a, const Exp& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

/// Multivariate Laurent polynomial in q, x_1..x_n over the rationals.
/// Stored coefficients are never zero; all exponent vectors have length
/// nvars()+1.  Values are immutable in spirit: every operation returns a
/// fresh value and never mutates shared state.
class Laurent {
public:
    using TermMap = std::map<Exp, Rational, ExpLex>;

    explicit Laurent(int nvars = 0) : nvars_(nvars) {}

    static Laurent constant(int nvars, const Rational& c);
    static Laurent monomial(int nvars, const Exp& e, const Rational& c);
    /// slot 0 = q, slots 1..nvars = x_i.
    static Laurent variable(int nvars, int slot, int power = 1);
    static Laurent q(int nvars, int power = 1) { return variable(nvars, 0, power); }
    static Laurent x(int nvars, int i, int power = 1) { return variable(nvars, i, power); }

    int nvars() const { return nvars_; }
    int width() const { return nvars_ + 1; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Constant term value (the coefficient of the zero exponent vector).
    Rational constant_value() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    Laurent scaled(const Rational& c) const;
    /// k >= 0 for general operands; any k for a single-term operand.
    Laurent pow(long k) const;

    bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Componentwise min / max of exponent vectors over all terms.
    Exp min_exponents() const;
    Exp max_exponents() const;
    /// Multiplies by the monomial with exponent vector delta.
    Laurent shifted(const Exp& delta) const;
    /// Lex-leading (maximal) term.
    std::pair<Exp, Rational> leading_term() const;

    /// True if every exponent is >= 0 (a genuine polynomial).
    bool is_polynomial() const;

    /// Exact quotient f/g in the Laurent ring; throws InexactDivision if g
    /// does not divide f, DivisionByZero if g == 0.
    static Laurent exact_div(const Laurent& f, const Laurent& g);

    /// Gcd of a and b as polynomials (monomial factors included), normalized
    /// to integer-primitive with positive lex-leading coefficient.
    static Laurent poly_gcd(const Laurent& a, const Laurent& b);

    /// Content: the rational c with the sign of the lex-leading coefficient
    /// such that (*this)/c has coprime integer coefficients.
    Rational content() const;

    /// Variable permutation x_i -> x_{image[i-1]} on slots 1..rank
    /// (1-based images); q and slots above rank are fixed.
    Laurent permuted(const std::vector<int>& image, int rank) const;

    /// Embeds into a ring with more x-variables (new slots unused).
    Laurent extended(int new_nvars) const;

    /// Substitutes single-term values for variables: slot -> (exponent
    /// vector, coefficient) in the same ring.  Negative powers are fine
    /// because the replacement is a monomial.  Slots not bound are fixed.
    Laurent substitute_monomials(const std::map<int, std::pair<Exp, Rational>>& bindings) const;

    /// Sum of the terms selected by pred on the exponent vector.
    template <typename Pred>
    Laurent filter(Pred pred) const {
        Laurent r(nvars_);
        for (const auto& [e, c] : terms_)
            if (pred(e)) r.terms_.emplace(e, c);
        return r;
    }

    void add_term(const Exp& e, const Rational& c);

private:
    void check_compatible(const Laurent& o) const;

    int nvars_;
    TermMap terms_;
};

} // namespace padspher
