#pragma once

#include "padspher/laurent.hpp"
#include "padspher/partition.hpp"

namespace padspher {

/// The normalization product w_lambda(t): for each distinct part value with
/// multiplicity m it contributes (1-t)(1-t^2)...(1-t^m).  Zero and negative
/// part values group like any other.
Laurent hl_weight(const Partition& lambda, const Laurent& t);

/// Hall-Littlewood polynomial P_lambda(x_1..x_n; t) via symmetrization over
/// S_n with one exact division at the end.  t is any expression in the same
/// variable ring (a monomial in q, or an extra formal slot); the result is a
/// symmetric Laurent polynomial in x_1..x_n.  Negative parts reduce to the
/// nonnegative case through translation covariance
///   P_{lambda+(c..c)} = (x_1...x_n)^c P_lambda.
Laurent hl_polynomial(const Partition& lambda, int n, const Laurent& t);

/// Monomial symmetric Laurent polynomial: sum of x^mu over the distinct
/// permutations mu of lambda.
Laurent monomial_sym(const Partition& lambda, int n, int nvars);

/// Expansion of a symmetric Laurent polynomial in the monomial basis.
/// Coefficients live in the non-x slots (q and any extra formal slot).
/// Throws std::invalid_argument if the input is not symmetric in x_1..x_n.
std::vector<std::pair<Partition, Laurent>> monomial_expansion(const Laurent& f, int n);

} // namespace padspher
