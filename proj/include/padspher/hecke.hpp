#pragma once

#include "padspher/oracle.hpp"

namespace padspher {

enum class HeckeCase { toy_rank1, hermitian_rank1, symmetric_rank2 };

std::string hecke_case_name(HeckeCase which);
HeckeCase hecke_case_from_name(const std::string& name);

struct HeckeReport {
    bool pass = false;
    int compared = 0;         // coefficients exact on both sides
    int matched_nonzero = 0;
    /// lambda_s(phi) as (coefficient, u-exponent vector) pairs.
    std::vector<std::pair<Rational, std::vector<int>>> eigenvalue;
    std::string detail;
};

/// Convolution eigen-relation check for the basic Hecke operator: the
/// double coset of diag(pi, 1, ..) decomposed into left cosets with
/// lower-triangular representatives (their count and pairwise distinctness
/// verified by enumeration, not assumed), the convolution side evaluated by
/// finite-level integration at the translated points, and the eigenvalue
/// side from the representatives' triangular parts.  Exact comparison on
/// every coefficient both sides determine.  Throws
/// CosetDecompositionFailure if the representative verification fails.
HeckeReport hecke_eigen_check(HeckeCase which, const Partition& lambda, const PAdicConfig& cfg);

} // namespace padspher
