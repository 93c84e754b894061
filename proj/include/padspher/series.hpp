#pragma once

#include "padspher/ratfunc.hpp"

namespace padspher {

/// Truncated formal power series: all monomials of grading weight <= order,
/// with exact rational coefficients.  The grading assigns a nonnegative
/// integer weight to each variable slot (slot 0 = q).
struct Series {
    std::vector<int> weights;
    long order = 0;
    std::map<Exp, Rational, ExpLex> coeffs;

    long weight_of(const Exp& e) const {
        long w = 0;
        for (size_t i = 0; i < e.size(); ++i) w += (long)weights[i] * e[i];
        return w;
    }

    Rational coefficient(const Exp& e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    bool operator==(const Series& o) const {
        return weights == o.weights && order == o.order && coeffs == o.coeffs;
    }
};

/// Expansion of e as a power series in the graded variables, truncated at
/// the given order.  Requires the weight-zero part of the denominator to be
/// a single invertible term; throws NoUnitConstantTerm otherwise.
Series series_expand(const RatFunc& e, const std::vector<int>& weights, long order);

Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);

} // namespace padspher
