#pragma once

#include "padspher/residue_ring.hpp"
#include "padspher/series.hpp"
#include "padspher/spherical.hpp"

#include <limits>
#include <optional>

namespace padspher {

/// Valuation slot marker for "at least m, undetermined at this level".
constexpr int kBot = std::numeric_limits<int>::min();

/// Finite-level integration configuration.
struct PAdicConfig {
    long p = 3;
    int m = 1;

    PAdicConfig(long p_, int m_) : p(p_), m(m_) {
        (void)RingCtx::base(p, m);  // validates
    }
};

/// The concrete matrix model of one case: matrix size, ring, group action
/// and the basic relative invariants (corner minors or pfaffians).
struct CaseRealization {
    CaseTag tag;
    int n;  // rank = number of invariants

    explicit CaseRealization(CaseTag tag_, int n_);

    int matrix_size() const;
    bool quadratic_extension() const { return tag == CaseTag::hermitian_unramified; }
    RingCtx ring(const PAdicConfig& cfg) const;

    /// Reduction of the orbit representative pi^lambda; lambda_n >= 0.
    Mat representative(const Partition& lambda, const RingCtx& R) const;
    /// k . x (k x k^T for bilinear cases, k x k^* for hermitian).
    Mat act(const RingCtx& R, const Mat& k, const Mat& x) const;
    /// Values of f_1..f_n in the base ring (the a-component).
    std::vector<std::uint64_t> invariants(const RingCtx& R, const Mat& x) const;
};

/// Exact counts of invariant-valuation vectors over K_m = GL(O/p^m).
/// Entries may carry kBot in a slot: mass whose valuation there is >= m.
struct ValuationHistogram {
    CaseTag tag{};
    int n = 0;
    long p = 3;
    int m = 1;
    Integer total = 0;  // |K_m|
    std::map<std::vector<int>, Integer> counts;

    Integer undetermined_mass() const;
    Integer determined_mass() const;
};

/// Haar integration over K_m by full traversal of the K_m-orbit of x with
/// the uniform pushforward weight |Stab| = |K_m| / |orbit|.
ValuationHistogram valuation_histogram(const CaseRealization& c, const Partition& lambda,
                                       const PAdicConfig& cfg);
/// Same, for an arbitrary starting matrix over the case's ring.
ValuationHistogram valuation_histogram_at(const CaseRealization& c, const Mat& x,
                                          const PAdicConfig& cfg);
/// Literal enumeration of the whole group (budgeted); cross-check path.
ValuationHistogram valuation_histogram_direct(const CaseRealization& c, const Mat& x,
                                              const PAdicConfig& cfg);

/// Pushes a histogram at level m down to level m-1: every slot value that
/// level m-1 cannot resolve (>= m-1, or already kBot) collapses to kBot and
/// the cells merge.
ValuationHistogram collapse_level(const ValuationHistogram& h);

/// Truncated series with exact determined coefficients and explicit
/// footprints for the undetermined mass.
struct OracleSeries {
    int n = 0;
    std::map<std::vector<int>, Rational> coeffs;
    struct BotPattern {
        std::vector<int> value;   // exact value, or lower bound where !exact
        std::vector<bool> exact;
    };
    std::vector<BotPattern> patterns;
    Rational tail = 0;

    /// Exact coefficient of u^w, or nullopt when undetermined mass could
    /// land on w.
    std::optional<Rational> coefficient(const std::vector<int>& w) const;

    OracleSeries shifted(const std::vector<int>& delta) const;
    OracleSeries scaled(const Rational& c) const;
    static OracleSeries sum(const std::vector<OracleSeries>& parts);
};

/// Series realization of a histogram: coefficient of u^v is count(v)/total;
/// the tail reports the undetermined fraction.
OracleSeries histogram_series(const ValuationHistogram& h);

struct OracleMatchReport {
    bool pass = false;
    Rational fitted_constant = 0;
    bool constant_was_supplied = false;
    int compared = 0;          // coefficients checked (both sides exact)
    int matched_nonzero = 0;   // agreements with a nonzero value
    Rational tail = 0;
    std::string detail;
};

/// Compares the case's closed form against the finite-level integration:
/// substitutes the case's u-coordinates and q := residue cardinality into
/// prefactor * P_lambda, expands, fits the scalar on the lowest nonzero
/// coefficient (unless supplied) and then requires every coefficient of
/// u^v, v in [0,m)^n, to agree exactly.  Throws MismatchBeyondTail on a
/// disagreement in the determined range.
OracleMatchReport oracle_match(const SphericalCase& sc, const Partition& lambda,
                               const PAdicConfig& cfg,
                               std::optional<Rational> fitted = std::nullopt,
                               long residue_q = 0 /* 0: use cfg.p */);

/// Open-orbit class label of one invariant value.
struct SignatureComponent {
    int valuation = 0;
    int parity = 0;      // valuation mod 2
    int character = 0;   // square class of the unit part (symmetric case); 0 if unused
};

/// Signatures of f_1..f_n at x: square classes for symmetric forms, norm
/// classes (valuation parity) for unramified hermitian forms; the
/// alternating open orbit is a single class.  Throws NotInOpenOrbit when an
/// invariant vanishes mod p^m.
std::vector<SignatureComponent> orbit_signature(const CaseRealization& c, const Mat& x,
                                                const PAdicConfig& cfg);

} // namespace padspher
