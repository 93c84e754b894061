#include "padspher/hecke.hpp"

#include <sstream>

namespace padspher {

std::string hecke_case_name(HeckeCase which) {
    switch (which) {
        case HeckeCase::toy_rank1: return "toy";
        case HeckeCase::hermitian_rank1: return "hermitian1";
        case HeckeCase::symmetric_rank2: return "symmetric2";
    }
    return "?";
}

HeckeCase hecke_case_from_name(const std::string& name) {
    if (name == "toy") return HeckeCase::toy_rank1;
    if (name == "hermitian1") return HeckeCase::hermitian_rank1;
    if (name == "symmetric2") return HeckeCase::symmetric_rank2;
    throw std::invalid_argument("unknown hecke case: " + name);
}

namespace {

// Exact rational 2x2 matrices for the coset-representative bookkeeping.
struct QMat {
    Rational e[2][2];
};

QMat qmat_mul(const QMat& A, const QMat& B) {
    QMat C;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            C.e[i][j] = A.e[i][0] * B.e[0][j] + A.e[i][1] * B.e[1][j];
    return C;
}

QMat qmat_inv(const QMat& A) {
    Rational det = A.e[0][0] * A.e[1][1] - A.e[0][1] * A.e[1][0];
    if (det == 0) throw std::logic_error("qmat_inv: singular");
    QMat C;
    C.e[0][0] = A.e[1][1] / det;
    C.e[0][1] = -A.e[0][1] / det;
    C.e[1][0] = -A.e[1][0] / det;
    C.e[1][1] = A.e[0][0] / det;
    return C;
}

long val_p(const Rational& r, long p) {
    if (r == 0) throw std::logic_error("val_p of zero");
    long v = 0;
    Integer num = r.get_num(), den = r.get_den();
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    return v;
}

bool is_p_integral(const Rational& r, long p) { return r == 0 || val_p(r, p) >= 0; }

// Compares two partially determined series over a window; both sides must
// agree wherever both are exact and overlap in at least one nonzero value.
void compare_series(const OracleSeries& lhs, const OracleSeries& rhs, int n, int lo, int hi,
                    HeckeReport& rep) {
    std::vector<int> w(n, lo);
    while (true) {
        auto a = lhs.coefficient(w);
        auto b = rhs.coefficient(w);
        if (a && b) {
            ++rep.compared;
            if (*a != *b) {
                std::ostringstream os;
                os << "mismatch at u^(";
                for (int i = 0; i < n; ++i) os << (i ? "," : "") << w[i];
                os << "): " << to_string(*a) << " vs " << to_string(*b);
                rep.detail = os.str();
                rep.pass = false;
                return;
            }
            if (*a != 0) ++rep.matched_nonzero;
        }
        int i = n - 1;
        while (i >= 0 && w[i] == hi) w[i--] = lo;
        if (i < 0) break;
        ++w[i];
    }
    rep.pass = rep.matched_nonzero >= 1;
    if (!rep.pass) rep.detail = "no nonzero coefficient was determined on both sides";
}

// Rank-one cases: the symmetric 1x1 space is GL_1 acting by g.x = g^2 x and
// the hermitian 1x1 space is GL_1(k') acting by g.x = N(g) x; both series
// come from the honest finite-level enumeration.
OracleSeries rank1_series(bool ext, long a, const PAdicConfig& cfg) {
    CaseTag tag = ext ? CaseTag::hermitian_unramified : CaseTag::symmetric_oracle_only;
    CaseRealization real(tag, 1);
    return histogram_series(valuation_histogram(real, Partition({(int)a}), cfg));
}

HeckeReport rank1_check(bool ext, const Partition& lambda, const PAdicConfig& cfg) {
    long a = lambda.part(0);
    if (a < 0) throw UnsupportedCase("hecke rank-1: lambda >= 0");
    HeckeReport rep;
    // psi(pi) has k-valuation 2 for both realizations (g^2 x, resp. N(g) x),
    // the modulus character is trivial, and phi is a single coset.
    rep.eigenvalue = {{Rational(1), {-2}}};

    // Convolution side: omega at pi^{-1}.x = pi^{-2} x, enumerated at the
    // translated representative when that stays integral (a >= 2); below
    // that the degree-one scaling of f supplies the shift.
    OracleSeries lhs = a >= 2 ? rank1_series(ext, a - 2, cfg)
                              : rank1_series(ext, a, cfg).shifted({-2});
    OracleSeries omega = rank1_series(ext, a, cfg);
    OracleSeries rhs = omega.shifted({-2});
    compare_series(lhs, rhs, 1, -4, cfg.m + 1, rep);
    std::ostringstream os;
    os << (ext ? "hermitian" : "toy") << " rank-1, lambda = " << a << ": compared "
       << rep.compared << ", nonzero " << rep.matched_nonzero;
    if (!rep.pass) os << "; " << rep.detail;
    rep.detail = os.str();
    return rep;
}

HeckeReport symmetric_rank2_check(const Partition& lambda, const PAdicConfig& cfg) {
    const long p = cfg.p;
    if (lambda.length() != 2 || lambda.min_part() < 0)
        throw UnsupportedCase("hecke symmetric2: lambda in Z^2, parts >= 0");

    // Left-coset representatives of K a K, a = diag(pi,1), all inside the
    // lower-triangular Borel: [[1,0],[c,pi]] for c mod pi, and [[pi,0],[0,1]].
    std::vector<QMat> reps;
    for (long c = 0; c < p; ++c) {
        QMat r;
        r.e[0][0] = 1;
        r.e[0][1] = 0;
        r.e[1][0] = c;
        r.e[1][1] = p;
        reps.push_back(r);
    }
    {
        QMat r;
        r.e[0][0] = p;
        r.e[0][1] = 0;
        r.e[1][0] = 0;
        r.e[1][1] = 1;
        reps.push_back(r);
    }

    // (a) Membership: Smith form (1, pi) -- entry gcd valuation 0, det
    // valuation 1.
    for (const auto& r : reps) {
        long min_entry_val = 1 << 20;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (r.e[i][j] != 0) min_entry_val = std::min(min_entry_val, val_p(r.e[i][j], p));
        Rational det = r.e[0][0] * r.e[1][1] - r.e[0][1] * r.e[1][0];
        if (min_entry_val != 0 || val_p(det, p) != 1)
            throw CosetDecompositionFailure("representative not in the double coset");
    }
    // (b) Pairwise distinct left cosets: g^-1 h escapes GL_2(O).
    for (size_t i = 0; i < reps.size(); ++i) {
        for (size_t j = 0; j < reps.size(); ++j) {
            if (i == j) continue;
            QMat d = qmat_mul(qmat_inv(reps[i]), reps[j]);
            bool integral = true;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) integral = integral && is_p_integral(d.e[a][b], p);
            Rational det = d.e[0][0] * d.e[1][1] - d.e[0][1] * d.e[1][0];
            if (integral && val_p(det, p) == 0)
                throw CosetDecompositionFailure("two representatives share a left coset");
        }
    }
    // (c) Completeness: [K a K : K] = [K : K cap a K a^-1] counted by
    // enumeration at the configured level; the condition is p | k_12.
    {
        RingCtx R = RingCtx::base(p, cfg.m);
        const std::uint64_t ncand = R.pm * R.pm * R.pm * R.pm;
        Integer in_subgroup = 0, total = 0;
        for (std::uint64_t idx = 0; idx < ncand; ++idx) {
            std::uint64_t rest = idx;
            Mat k;
            k.n = 2;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    k.at(i, j) = El{rest % R.pm, 0};
                    rest /= R.pm;
                }
            if (!el_is_unit(R, mat_det(R, k))) continue;
            ++total;
            if (k.at(0, 1).a % (std::uint64_t)p == 0) ++in_subgroup;
        }
        if (total != gl_order(R, 2))
            throw CosetDecompositionFailure("index enumeration lost group elements");
        if (in_subgroup == 0 || total % in_subgroup != 0 ||
            total / in_subgroup != Integer(p + 1) || (long)reps.size() != p + 1)
            throw CosetDecompositionFailure("coset count disagrees with the subgroup index");
    }

    // Eigenvalue side: lambda_s(phi) = sum_j |psi(p(g_j))|^{-s} delta(p(g_j))
    // with p(g_j) = g_j (already triangular), psi_i(b) = (b_1...b_i)^2 and
    // delta(diag) = prod |b_i|^{2i-n-1}.
    HeckeReport rep;
    {
        std::map<std::vector<int>, Rational> terms;
        for (const auto& r : reps) {
            long v1 = val_p(r.e[0][0], p), v2 = val_p(r.e[1][1], p);
            std::vector<int> expo{(int)(-2 * v1), (int)(-2 * (v1 + v2))};
            long delta_exp = -((2 * 1 - 3) * v1 + (2 * 2 - 3) * v2);
            Rational coef = 1;
            for (long i = 0; i < delta_exp; ++i) coef *= p;
            for (long i = 0; i > delta_exp; --i) coef /= p;
            terms[expo] += coef;
        }
        for (const auto& [e, c] : terms) rep.eigenvalue.emplace_back(c, e);
    }

    CaseRealization real(CaseTag::symmetric_oracle_only, 2);
    OracleSeries omega = histogram_series(valuation_histogram(real, lambda, cfg));

    // Convolution side: y_j = (pi g_j^-1) . x stays integral and
    // g_j^-1 . x = pi^{-2} y_j shifts the minor valuations by (-2, -4).
    // The translates need a deeper level: det y_j has valuation |lambda|+2.
    PAdicConfig cfg_up(p, cfg.m + 1 + (int)lambda.weight());
    RingCtx Rup = RingCtx::base(p, cfg_up.m);
    std::vector<OracleSeries> parts;
    for (const auto& r : reps) {
        QMat g = qmat_inv(r);
        QMat y;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) y.e[i][j] = g.e[i][j] * p;
        // y . x = (pi g^-1) x t(pi g^-1), exact integer arithmetic.
        QMat x{};
        x.e[0][0] = 1;
        x.e[1][1] = 1;
        for (int i = 0; i < lambda.part(0); ++i) x.e[0][0] *= p;
        for (int i = 0; i < lambda.part(1); ++i) x.e[1][1] *= p;
        QMat yx = qmat_mul(y, x);
        QMat t;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) t.e[i][j] = y.e[j][i];
        QMat res = qmat_mul(yx, t);
        Mat xm;
        xm.n = 2;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Rational v = res.e[i][j];
                if (v.get_den() != 1)
                    throw std::logic_error("hecke: translate is not integral");
                xm.at(i, j) = El{Rup.reduce(Integer(v.get_num())), 0};
            }
        parts.push_back(histogram_series(valuation_histogram_at(real, xm, cfg_up)).shifted({-2, -4}));
    }
    OracleSeries lhs = OracleSeries::sum(parts);

    std::vector<OracleSeries> rhs_parts;
    for (const auto& [coef, expo] : rep.eigenvalue)
        rhs_parts.push_back(omega.shifted(expo).scaled(coef));
    OracleSeries rhs = OracleSeries::sum(rhs_parts);

    compare_series(lhs, rhs, 2, -8, cfg.m + 2, rep);
    std::ostringstream os;
    os << "symmetric rank-2, lambda = " << lambda.to_string() << ": compared " << rep.compared
       << ", nonzero " << rep.matched_nonzero;
    if (!rep.pass) os << "; " << rep.detail;
    rep.detail = os.str();

    return rep;
}

} // namespace

HeckeReport hecke_eigen_check(HeckeCase which, const Partition& lambda, const PAdicConfig& cfg) {
    switch (which) {
        case HeckeCase::toy_rank1: return rank1_check(false, lambda, cfg);
        case HeckeCase::hermitian_rank1: return rank1_check(true, lambda, cfg);
        case HeckeCase::symmetric_rank2: return symmetric_rank2_check(lambda, cfg);
    }
    throw std::logic_error("bad hecke case");
}

} // namespace padspher
