#pragma once

#include "padspher/oracle.hpp"

#include <string>
#include <vector>

namespace padspher {

/// Default variable names q, x1..xn; extra slots fall back to t, then v#.
std::vector<std::string> default_names(int nvars, int rank_hint = -1);
/// Oracle coordinates q, u1..un.
std::vector<std::string> u_names(int nvars);

/// Stable text form "coef*q^a*x1^b1*...*xn^bn +- ...", terms in descending
/// lex order of their exponent vectors (ascending when requested, which
/// reads better for series-style coefficients).
std::string render_laurent(const Laurent& e, const std::vector<std::string>& names,
                           bool ascending = false);

/// Grouped form for symmetric polynomials: terms bucketed by their
/// x_1..x_n monomial (shape-major order), non-x slots parenthesized as the
/// coefficient, e.g. "x1^2 + x2^2 + (1 - t)*x1*x2".
std::string render_grouped(const Laurent& e, int n, const std::vector<std::string>& names);

/// "num / den", parenthesized as needed; bare num when den = 1.
std::string render_ratfunc(const RatFunc& e, const std::vector<std::string>& names);

} // namespace padspher
