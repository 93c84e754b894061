#include "padspher/step_function.hpp"

#include <algorithm>

namespace padspher {

namespace {

std::uint64_t pow_u64(long p, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= (std::uint64_t)p;
    return r;
}

} // namespace

CycVec::CycVec(long p, int M) : p_(p), M_(M), a_(pow_u64(p, M), Rational(0)) {}

CycVec CycVec::rational(long p, int M, const Rational& c) {
    CycVec v(p, M);
    v.a_[0] = c;
    return v;
}

CycVec CycVec::root(long p, int M, long k) {
    CycVec v(p, M);
    std::uint64_t n = v.a_.size();
    std::uint64_t idx = ((k % (long)n) + (long)n) % (long)n;
    v.a_[idx] = 1;
    v.reduce();
    return v;
}

void CycVec::reduce() {
    // zeta^j for j >= (p-1) p^{M-1} rewrites through
    // 1 + zeta^{p^{M-1}} + ... + zeta^{(p-1) p^{M-1}} = 0.
    const std::uint64_t step = pow_u64(p_, M_ - 1);
    const std::uint64_t limit = (std::uint64_t)(p_ - 1) * step;
    for (std::uint64_t j = a_.size(); j-- > limit;) {
        if (a_[j] == 0) continue;
        Rational c = a_[j];
        a_[j] = 0;
        std::uint64_t base = j - limit;
        for (long k = 0; k < p_ - 1; ++k) a_[base + (std::uint64_t)k * step] -= c;
    }
}

bool CycVec::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& c) { return c == 0; });
}

bool CycVec::is_rational() const {
    for (std::size_t j = 1; j < a_.size(); ++j)
        if (a_[j] != 0) return false;
    return true;
}

Rational CycVec::rational_value() const {
    if (!is_rational()) throw std::logic_error("CycVec: not rational");
    return a_.empty() ? Rational(0) : a_[0];
}

CycVec CycVec::lifted(int M2) const {
    if (M2 < M_) throw std::logic_error("CycVec: cannot lower the order");
    if (M2 == M_) return *this;
    CycVec out(p_, M2);
    std::uint64_t stretch = pow_u64(p_, M2 - M_);
    for (std::size_t j = 0; j < a_.size(); ++j)
        if (a_[j] != 0) out.a_[j * stretch] = a_[j];
    out.reduce();
    return out;
}

CycVec CycVec::operator+(const CycVec& o) const {
    int M2 = std::max(M_, o.M_);
    CycVec x = lifted(M2), y = o.lifted(M2), out(p_, M2);
    for (std::size_t j = 0; j < out.a_.size(); ++j) out.a_[j] = x.a_[j] + y.a_[j];
    return out;
}

CycVec CycVec::operator-(const CycVec& o) const { return *this + o.scaled(-1); }

CycVec CycVec::scaled(const Rational& c) const {
    CycVec out = *this;
    for (auto& v : out.a_)
        if (v != 0) v *= c;
    return out;
}

CycVec CycVec::rotated(long k) const {
    CycVec out(p_, M_);
    std::uint64_t n = a_.size();
    std::uint64_t shift = ((k % (long)n) + (long)n) % (long)n;
    for (std::uint64_t j = 0; j < n; ++j) {
        if (a_[j] == 0) continue;
        out.a_[(j + shift) % n] = a_[j];
    }
    out.reduce();
    return out;
}

void CycVec::add_rotated(const CycVec& x, long k) {
    if (x.p_ == 0) return;  // zero value
    std::uint64_t n = a_.size();
    std::uint64_t stretch = 1;
    for (int i = 0; i < M_ - x.M_; ++i) stretch *= (std::uint64_t)p_;
    std::uint64_t shift = ((k % (long)n) + (long)n) % (long)n;
    for (std::uint64_t j = 0; j < x.a_.size(); ++j) {
        if (x.a_[j] == 0) continue;
        a_[(j * stretch + shift) % n] += x.a_[j];
    }
}

bool CycVec::operator==(const CycVec& o) const {
    int M2 = std::max(M_ == 0 ? 1 : M_, o.M_ == 0 ? 1 : o.M_);
    long pp = p_ ? p_ : o.p_;
    CycVec x = p_ ? lifted(M2) : CycVec(pp, M2);
    CycVec y = o.p_ ? o.lifted(M2) : CycVec(pp, M2);
    return x.a_ == y.a_;
}

StepFunction::StepFunction(long p_, int L_, int m_) : p(p_), L(L_), m(m_) {
    if (L < 0 || m < 1) throw WindowOverflow("StepFunction: need L >= 0, m >= 1");
    double n = 1;
    for (int i = 0; i < L + m; ++i) n *= (double)p;
    if (n > (double)(1 << 16)) throw WindowOverflow("StepFunction: window too large for exact arithmetic");
    values.assign((std::size_t)n, CycVec::rational(p, 1, 0));
}

StepFunction StepFunction::indicator_ball(long p, int L, int m, int valuation_at_least) {
    if (valuation_at_least > m || valuation_at_least < -L)
        throw WindowOverflow("indicator_ball: ball is not representable in this window");
    StepFunction f(p, L, m);
    std::uint64_t n = f.values.size();
    for (std::uint64_t c = 0; c < n; ++c) {
        // coset rep c / p^L; valuation of the rep (>= m + ... when c = 0).
        long v;
        if (c == 0) {
            v = m;  // the residual ball pi^m O
        } else {
            std::uint64_t t = c;
            int tv = 0;
            while (t % (std::uint64_t)p == 0) { t /= (std::uint64_t)p; ++tv; }
            v = tv - L;
        }
        if (v >= valuation_at_least) f.values[c] = CycVec::rational(p, 1, 1);
    }
    return f;
}

StepFunction StepFunction::indicator_units(long p, int L, int m) {
    StepFunction f(p, L, m);
    std::uint64_t n = f.values.size();
    std::uint64_t pl = pow_u64(p, L);
    for (std::uint64_t c = 0; c < n; ++c) {
        if (c % pl != 0) continue;           // valuation >= 0
        std::uint64_t unitpart = c / pl;     // the O-representative
        if (unitpart % (std::uint64_t)p != 0) f.values[c] = CycVec::rational(p, 1, 1);
    }
    return f;
}

const CycVec& StepFunction::value_at(const Rational& x) const {
    static const CycVec zero;
    Integer num = x.get_num(), den = x.get_den();
    Integer pl = 1;
    for (int i = 0; i < L; ++i) pl *= p;
    Integer n((unsigned long)values.size());
    // index = x p^L mod p^{L+m}; outside the window when den is not
    // invertible mod p^{L+m}.
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) return zero;
    Integer idx = (num * pl % n) * dinv % n;
    if (idx < 0) idx += n;
    return values[idx.get_ui()];
}

StepFunction StepFunction::refined(int L2, int m2) const {
    if (L2 < L || m2 < m) throw WindowOverflow("refined: windows only grow");
    StepFunction out(p, L2, m2);
    Integer pl2 = 1;
    for (int i = 0; i < L2; ++i) pl2 *= p;
    for (std::uint64_t c = 0; c < out.values.size(); ++c) {
        Rational rep(Integer((unsigned long)c), pl2);
        rep.canonicalize();
        out.values[c] = value_at(rep);
    }
    return out;
}

StepFunction StepFunction::reflected() const {
    StepFunction out = *this;
    std::uint64_t n = values.size();
    for (std::uint64_t c = 0; c < n; ++c) out.values[c] = values[(n - c) % n];
    return out;
}

bool StepFunction::operator==(const StepFunction& o) const {
    if (p != o.p) return false;
    if (L != o.L || m != o.m) {
        StepFunction a = refined(std::max(L, o.L), std::max(m, o.m));
        StepFunction b = o.refined(std::max(L, o.L), std::max(m, o.m));
        return a == b;
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!(values[i] == o.values[i])) return false;
    return true;
}

StepFunction fourier_finite(const StepFunction& phi) {
    const long p = phi.p;
    const int N = phi.L + phi.m;
    if (phi.values.size() > 1024)
        throw WindowOverflow("fourier_finite: window too large for the exact kernel sum");
    // Supported in pi^{-m} O and constant mod pi^L O (mod pi when L = 0).
    StepFunction out(p, phi.m, std::max(phi.L, 1));
    const std::uint64_t n = phi.values.size();
    // eta(w_d r_c) = zeta_{p^N}^{d c} with w_d = d / p^m and r_c = c / p^L.
    Rational vol(1);
    for (int i = 0; i < phi.m; ++i) vol /= p;
    for (std::uint64_t d = 0; d < out.values.size(); ++d) {
        CycVec acc(p, N);
        for (std::uint64_t c = 0; c < n; ++c) {
            if (phi.values[c].is_zero()) continue;
            acc.add_rotated(phi.values[c], (long)((unsigned __int128)d * c % n));
        }
        acc.reduce();
        out.values[d] = acc.scaled(vol);
    }
    return out;
}

StepFunction2D fourier_finite_2d(const StepFunction2D& phi) {
    // The kernel eta(v1 w2 - v2 w1) splits on products:
    //   F(phi1 x phi2)(v1, v2) = F(phi2)(v1) * F(phi1)(-v2).
    auto negate = [](const StepFunction& f) {
        StepFunction g = f;
        std::uint64_t n = f.values.size();
        for (std::uint64_t c = 0; c < n; ++c) g.values[c] = f.values[(n - c) % n];
        return g;
    };
    StepFunction2D out;
    out.f1 = fourier_finite(phi.f2);
    out.f2 = negate(fourier_finite(phi.f1));
    return out;
}

} // namespace padspher
