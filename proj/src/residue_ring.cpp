#include "padspher/residue_ring.hpp"

namespace padspher {

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return (std::uint64_t)(((unsigned __int128)a * b) % mod);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = mulmod(r, b, mod);
        b = mulmod(b, b, mod);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::uint64_t smallest_nonresidue(long p) {
    for (std::uint64_t r = 2; r < (std::uint64_t)p; ++r)
        if (powmod(r, (p - 1) / 2, p) == (std::uint64_t)p - 1) return r;
    throw UnsupportedCase("no quadratic non-residue found (p = 2?)");
}

void validate(long p, int m) {
    if (!is_prime(p) || p == 2) throw UnsupportedCase("p must be an odd prime");
    if (m < 1) throw UnsupportedCase("level m must be >= 1");
    double pm = 1;
    for (int i = 0; i < m; ++i) pm *= (double)p;
    if (pm > (double)(1ull << 20)) throw UnsupportedCase("p^m out of range");
}

} // namespace

RingCtx RingCtx::base(long p, int m) {
    validate(p, m);
    RingCtx R;
    R.p = p;
    R.m = m;
    R.ext = false;
    R.pm = pow_u64((std::uint64_t)p, m);
    return R;
}

RingCtx RingCtx::quadratic(long p, int m) {
    RingCtx R = base(p, m);
    R.ext = true;
    R.rho = smallest_nonresidue(p);
    return R;
}

std::uint64_t RingCtx::reduce(const Integer& v) const {
    Integer r = v % Integer((unsigned long)pm);
    if (r < 0) r += Integer((unsigned long)pm);
    return r.get_ui();
}

El el_add(const RingCtx& R, El x, El y) { return {(x.a + y.a) % R.pm, (x.b + y.b) % R.pm}; }

El el_sub(const RingCtx& R, El x, El y) {
    return {(x.a + R.pm - y.a) % R.pm, (x.b + R.pm - y.b) % R.pm};
}

El el_mul(const RingCtx& R, El x, El y) {
    if ((x.b | y.b) == 0) return {mulmod(x.a, y.a, R.pm), 0};
    // (a1 + b1 X)(a2 + b2 X) with X^2 = rho.
    std::uint64_t a = (mulmod(x.a, y.a, R.pm) + mulmod(mulmod(x.b, y.b, R.pm), R.rho, R.pm)) % R.pm;
    std::uint64_t b = (mulmod(x.a, y.b, R.pm) + mulmod(x.b, y.a, R.pm)) % R.pm;
    return {a, b};
}

El el_neg(const RingCtx& R, El x) { return {(R.pm - x.a) % R.pm, (R.pm - x.b) % R.pm}; }

El el_conj(const RingCtx& R, El x) { return {x.a, (R.pm - x.b) % R.pm}; }

bool el_is_unit(const RingCtx& R, El x) {
    // Unit iff the norm a^2 - rho b^2 is a unit mod p.
    std::uint64_t bb = mulmod(mulmod(x.b, x.b, R.pm), R.rho, R.pm);
    std::uint64_t norm = (mulmod(x.a, x.a, R.pm) + R.pm - bb) % R.pm;
    return norm % (std::uint64_t)R.p != 0;
}

int residue_valuation(const RingCtx& R, std::uint64_t v) {
    if (v % R.pm == 0) return R.m;
    int val = 0;
    while (v % (std::uint64_t)R.p == 0) {
        v /= (std::uint64_t)R.p;
        ++val;
    }
    return val;
}

int quadratic_character(long p, std::uint64_t unit) {
    std::uint64_t e = powmod(unit, (p - 1) / 2, (std::uint64_t)p);
    return e == 1 ? 1 : -1;
}

Mat Mat::identity(int n) {
    Mat I;
    I.n = n;
    for (int i = 0; i < n; ++i) I.at(i, i) = {1, 0};
    return I;
}

Mat mat_mul(const RingCtx& R, const Mat& A, const Mat& B) {
    Mat C;
    C.n = A.n;
    for (int i = 0; i < A.n; ++i) {
        for (int j = 0; j < A.n; ++j) {
            El acc{0, 0};
            for (int k = 0; k < A.n; ++k) acc = el_add(R, acc, el_mul(R, A.at(i, k), B.at(k, j)));
            C.at(i, j) = acc;
        }
    }
    return C;
}

Mat mat_transpose(const Mat& A) {
    Mat C;
    C.n = A.n;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) C.at(i, j) = A.at(j, i);
    return C;
}

Mat mat_conj_transpose(const RingCtx& R, const Mat& A) {
    Mat C;
    C.n = A.n;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) C.at(i, j) = el_conj(R, A.at(j, i));
    return C;
}

El mat_det(const RingCtx& R, const Mat& A) {
    switch (A.n) {
        case 1: return A.at(0, 0);
        case 2:
            return el_sub(R, el_mul(R, A.at(0, 0), A.at(1, 1)), el_mul(R, A.at(0, 1), A.at(1, 0)));
        default: {
            // Laplace expansion along the first row; n <= 4 here.
            El acc{0, 0};
            for (int j = 0; j < A.n; ++j) {
                Mat minor;
                minor.n = A.n - 1;
                for (int r = 1; r < A.n; ++r) {
                    int cc = 0;
                    for (int c = 0; c < A.n; ++c) {
                        if (c == j) continue;
                        minor.at(r - 1, cc++) = A.at(r, c);
                    }
                }
                El term = el_mul(R, A.at(0, j), mat_det(R, minor));
                acc = j % 2 == 0 ? el_add(R, acc, term) : el_sub(R, acc, term);
            }
            return acc;
        }
    }
}

Integer gl_order(const RingCtx& R, int n) {
    // p^{n^2 (m-1)} * prod_{i=0}^{n-1} (p^n - p^i), with p -> p^2 for the
    // quadratic extension.
    Integer q = Integer(R.p);
    if (R.ext) q *= Integer(R.p);
    Integer total = 1;
    for (int i = 0; i < n * n * (R.m - 1); ++i) total *= q;
    Integer qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    Integer qi = 1;
    for (int i = 0; i < n; ++i) {
        total *= qn - qi;
        qi *= q;
    }
    return total;
}

std::uint64_t primitive_root(long p, int m) {
    std::uint64_t pm = pow_u64((std::uint64_t)p, m);
    std::uint64_t phi = pm / (std::uint64_t)p * (std::uint64_t)(p - 1);
    auto factors = prime_factors(phi);
    for (std::uint64_t g = 2; g < pm; ++g) {
        if (g % (std::uint64_t)p == 0) continue;
        bool ok = true;
        for (std::uint64_t f : factors)
            if (powmod(g, phi / f, pm) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: not found");
}

namespace {

// Element of R^x projecting onto a generator of the residue field F_{p^2}^x.
El residue_field_generator(const RingCtx& R) {
    std::uint64_t p = (std::uint64_t)R.p;
    std::uint64_t order = p * p - 1;
    auto factors = prime_factors(order);
    RingCtx R1 = RingCtx::quadratic(R.p, 1);
    for (std::uint64_t a = 0; a < p; ++a) {
        for (std::uint64_t b = 1; b < p; ++b) {
            El g{a, b};
            if (!el_is_unit(R1, g)) continue;
            bool ok = true;
            for (std::uint64_t f : factors) {
                // g^(order/f) by square and multiply over R1.
                El acc{1, 0}, base = g;
                std::uint64_t e = order / f;
                while (e) {
                    if (e & 1) acc = el_mul(R1, acc, base);
                    base = el_mul(R1, base, base);
                    e >>= 1;
                }
                if (acc == El{1, 0}) { ok = false; break; }
            }
            if (ok) return g;
        }
    }
    throw std::logic_error("residue_field_generator: not found");
}

} // namespace

std::vector<Mat> gl_generators(const RingCtx& R, int n) {
    std::vector<Mat> gens;
    auto elementary = [&](int i, int j, El v) {
        Mat E = Mat::identity(n);
        E.at(i, j) = v;
        return E;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            gens.push_back(elementary(i, j, El{1, 0}));
            if (R.ext) gens.push_back(elementary(i, j, El{0, 1}));
        }
    }
    auto diag_unit = [&](El u) {
        Mat D = Mat::identity(n);
        D.at(0, 0) = u;
        return D;
    };
    if (!R.ext) {
        gens.push_back(diag_unit(El{primitive_root(R.p, R.m), 0}));
    } else {
        gens.push_back(diag_unit(residue_field_generator(R)));
        if (R.m > 1) {
            gens.push_back(diag_unit(El{1 + (std::uint64_t)R.p, 0}));
            gens.push_back(diag_unit(El{1, (std::uint64_t)R.p}));
        }
    }
    return gens;
}

} // namespace padspher
