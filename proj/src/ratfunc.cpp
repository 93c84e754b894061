#include "padspher/ratfunc.hpp"

#include <algorithm>

namespace padspher {

RatFunc::RatFunc(const Laurent& num)
    : num_(num), den_(Laurent::constant(num.nvars(), 1)) {
    canonicalize();
}

RatFunc::RatFunc(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    if (num_.nvars() != den_.nvars()) throw VarMismatch("RatFunc: nvars mismatch");
    canonicalize();
}

void RatFunc::canonicalize() {
    const int nv = num_.nvars();
    if (num_.is_zero()) {
        den_ = Laurent::constant(nv, 1);
        return;
    }
    // Joint monomial shift making both parts polynomial with no common
    // variable factor.
    Exp mn = num_.min_exponents(), md = den_.min_exponents();
    Exp shift(nv + 1);
    bool need = false;
    for (int i = 0; i <= nv; ++i) {
        shift[i] = -std::min(mn[i], md[i]);
        need = need || shift[i] != 0;
    }
    if (need) {
        num_ = num_.shifted(shift);
        den_ = den_.shifted(shift);
    }
    Laurent g = Laurent::poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = Laurent::exact_div(num_, g);
        den_ = Laurent::exact_div(den_, g);
    }
    Rational c = den_.content();
    if (c != 1) {
        num_ = num_.scaled(1 / c);
        den_ = den_.scaled(1 / c);
    }
}

bool RatFunc::is_one() const {
    return num_ == Laurent::constant(nvars(), 1) && den_ == Laurent::constant(nvars(), 1);
}

RatFunc RatFunc::operator-() const {
    RatFunc r(nvars());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFunc::equivalent(const RatFunc& a, const RatFunc& b) {
    if (a == b) return true;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::permuted(const std::vector<int>& image, int rank) const {
    return RatFunc(num_.permuted(image, rank), den_.permuted(image, rank));
}

RatFunc RatFunc::extended(int new_nvars) const {
    return RatFunc(num_.extended(new_nvars), den_.extended(new_nvars));
}

namespace {

RatFunc eval_laurent(const Laurent& e, const std::map<int, RatFunc>& bindings) {
    const int nv = e.nvars();
    RatFunc acc(nv);
    for (const auto& [exp, coef] : e.terms()) {
        RatFunc term = RatFunc::constant(nv, coef);
        Exp fixed(nv + 1, 0);
        for (int s = 0; s <= nv; ++s) {
            if (exp[s] == 0) continue;
            auto it = bindings.find(s);
            if (it == bindings.end()) {
                fixed[s] = exp[s];
                continue;
            }
            const RatFunc& v = it->second;
            if (v.is_zero() && exp[s] < 0)
                throw SpecializationPole("substitute: negative power of zero");
            RatFunc p = exp[s] > 0 ? v : v.inverse();
            for (int j = 0; j < std::abs(exp[s]); ++j) term = term * p;
        }
        term = term * RatFunc(Laurent::monomial(nv, fixed, 1));
        acc = acc + term;
    }
    return acc;
}

} // namespace

RatFunc substitute(const RatFunc& e, const std::map<int, RatFunc>& bindings) {
    RatFunc den = eval_laurent(e.den(), bindings);
    if (den.is_zero()) throw SpecializationPole("substitute: denominator vanishes");
    RatFunc num = eval_laurent(e.num(), bindings);
    return num / den;
}

RatFunc substitute_monomials(const RatFunc& e,
                             const std::map<int, std::pair<Exp, Rational>>& bindings) {
    Laurent den = e.den().substitute_monomials(bindings);
    if (den.is_zero()) throw SpecializationPole("substitute: denominator vanishes");
    return RatFunc(e.num().substitute_monomials(bindings), den);
}

} // namespace padspher
