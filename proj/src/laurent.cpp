#include "padspher/laurent.hpp"

#include <algorithm>
#include <cassert>

namespace padspher {

Laurent Laurent::constant(int nvars, const Rational& c) {
    Laurent r(nvars);
    if (c != 0) r.terms_.emplace(Exp(nvars + 1, 0), c);
    return r;
}

Laurent Laurent::monomial(int nvars, const Exp& e, const Rational& c) {
    if ((int)e.size() != nvars + 1) throw VarMismatch("monomial: exponent width mismatch");
    Laurent r(nvars);
    if (c != 0) r.terms_.emplace(e, c);
    return r;
}

Laurent Laurent::variable(int nvars, int slot, int power) {
    if (slot < 0 || slot > nvars) throw VarMismatch("variable: slot out of range");
    Exp e(nvars + 1, 0);
    e[slot] = power;
    return monomial(nvars, e, 1);
}

bool Laurent::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Rational Laurent::constant_value() const {
    auto it = terms_.find(Exp(nvars_ + 1, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::check_compatible(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw VarMismatch("operands have different variable counts");
}

void Laurent::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_compatible(b);
    Laurent r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exp e(a.nvars_ + 1);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Laurent Laurent::pow(long k) const {
    if (k == 0) return constant(nvars_, 1);
    if (k < 0) {
        if (!is_single_term()) throw DivisionByZero("pow: negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        Exp ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[i] = (int)(e[i] * k);
        Rational inv = 1 / c;
        Rational acc = 1;
        for (long j = 0; j < -k; ++j) acc *= inv;
        return monomial(nvars_, ne, acc);
    }
    Laurent acc = constant(nvars_, 1);
    Laurent base = *this;
    long kk = k;
    while (kk > 0) {
        if (kk & 1) acc = acc * base;
        base = base * base;
        kk >>= 1;
    }
    return acc;
}

Exp Laurent::min_exponents() const {
    Exp m(nvars_ + 1, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { m = e; first = false; continue; }
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

Exp Laurent::max_exponents() const {
    Exp m(nvars_ + 1, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) { m = e; first = false; continue; }
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
    }
    return m;
}

Laurent Laurent::shifted(const Exp& delta) const {
    if ((int)delta.size() != nvars_ + 1) throw VarMismatch("shifted: width mismatch");
    Laurent r(nvars_);
    Exp e(delta.size());
    for (const auto& [ea, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + delta[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

std::pair<Exp, Rational> Laurent::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

bool Laurent::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int v : e)
            if (v < 0) return false;
    return true;
}

Laurent Laurent::exact_div(const Laurent& f, const Laurent& g) {
    if (g.is_zero()) throw DivisionByZero("exact_div: division by zero");
    f.check_compatible(g);
    Laurent rem = f;
    Laurent quot(f.nvars_);
    if (rem.is_zero()) return quot;

    // Slotwise exponent box of the true quotient: the lowest and highest
    // x_k-degree parts of f = g*h multiply without cancellation, so
    // min(h) = min(f)-min(g) and max(h) = max(f)-max(g) exactly.  A quotient
    // term escaping the box proves inexactness.
    Exp lo = f.min_exponents(), hi = f.max_exponents();
    Exp glo = g.min_exponents(), ghi = g.max_exponents();
    for (size_t i = 0; i < lo.size(); ++i) {
        lo[i] -= glo[i];
        hi[i] -= ghi[i];
    }

    auto [ge, gc] = g.leading_term();
    Exp te(f.nvars_ + 1);
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term();
        for (size_t i = 0; i < te.size(); ++i) {
            te[i] = re[i] - ge[i];
            if (te[i] < lo[i] || te[i] > hi[i])
                throw InexactDivision("exact_div: remainder is nonzero");
        }
        Rational tc = rc / gc;
        quot.add_term(te, tc);
        rem -= g.shifted(te).scaled(tc);
    }
    return quot;
}

Rational Laurent::content() const {
    if (terms_.empty()) return 0;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(leading_term().second) < 0) c = -c;
    return c;
}

namespace {

// Degree in a given slot.
int slot_degree(const Laurent& a, int slot) {
    int d = 0;
    for (const auto& [e, c] : a.terms()) d = std::max(d, e[slot]);
    return d;
}

// Coefficient of slot^k, a Laurent with exponent 0 in that slot.
Laurent slot_coefficient(const Laurent& a, int slot, int k) {
    Laurent r(a.nvars());
    for (const auto& [e, c] : a.terms()) {
        if (e[slot] == k) {
            Exp e2 = e;
            e2[slot] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

Laurent shift_slot(const Laurent& a, int slot, int k) {
    Exp d(a.nvars() + 1, 0);
    d[slot] = k;
    return a.shifted(d);
}

std::vector<int> occurring_slots(const Laurent& a, const Laurent& b) {
    std::vector<int> slots;
    for (int s = 0; s <= a.nvars(); ++s) {
        bool occurs = false;
        for (const auto& [e, c] : a.terms()) occurs = occurs || e[s] != 0;
        for (const auto& [e, c] : b.terms()) occurs = occurs || e[s] != 0;
        if (occurs) slots.push_back(s);
    }
    return slots;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in the given slot.
Laurent pseudo_rem(Laurent a, const Laurent& b, int slot) {
    int db = slot_degree(b, slot);
    Laurent lcb = slot_coefficient(b, slot, db);
    int e = slot_degree(a, slot) - db + 1;
    while (!a.is_zero()) {
        int da = slot_degree(a, slot);
        if (da < db) break;
        Laurent lca = slot_coefficient(a, slot, da);
        a = a * lcb - shift_slot(lca * b, slot, da - db);
        --e;
    }
    // Steps where the degree dropped by more than one still owe a factor of
    // lc(b) each for the subresultant divisions to stay exact.
    for (; e > 0; --e) a = a * lcb;
    return a;
}

Laurent normalize_primitive(const Laurent& a) {
    if (a.is_zero()) return a;
    return a.scaled(1 / a.content());
}

// Recursive content w.r.t. a slot: gcd of the slot-coefficients.
Laurent slot_content(const Laurent& a, int slot) {
    Laurent g(a.nvars());
    int d = slot_degree(a, slot);
    for (int k = 0; k <= d; ++k) {
        Laurent c = slot_coefficient(a, slot, k);
        if (!c.is_zero()) g = Laurent::poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// ---- modular coprimality probe ------------------------------------------
//
// Evaluating all but one variable at random points modulo a word prime and
// running a univariate gcd bounds the true gcd's degree from above whenever
// the leading coefficients survive the evaluation.  Degree zero in every
// occurring variable proves the gcd is a constant, which is the common case
// in canonicalization; the exact PRS only runs when a factor is plausible.

constexpr unsigned long kProbePrime = 2147483629ul;

unsigned long mod_pow(unsigned long b, unsigned long e, unsigned long p) {
    unsigned long r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = (unsigned long)(((unsigned long long)r * b) % p);
        b = (unsigned long)(((unsigned long long)b * b) % p);
        e >>= 1;
    }
    return r;
}

bool mod_coefficient(const Rational& c, unsigned long p, unsigned long& out) {
    unsigned long num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    unsigned long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    if (den == 0) return false;
    out = (unsigned long)(((unsigned long long)num * mod_pow(den, p - 2, p)) % p);
    return true;
}

// Evaluation of every slot except `main` at vals[slot]; returns the dense
// univariate coefficient vector, or false on a modular obstruction.
bool evaluate_mod(const Laurent& a, int main, const std::vector<unsigned long>& vals,
                  unsigned long p, std::vector<unsigned long>& out) {
    out.assign(slot_degree(a, main) + 1, 0);
    for (const auto& [e, c] : a.terms()) {
        unsigned long v;
        if (!mod_coefficient(c, p, v)) return false;
        for (int s = 0; s < (int)e.size(); ++s) {
            if (s == main || e[s] == 0) continue;
            v = (unsigned long)(((unsigned long long)v * mod_pow(vals[s], e[s], p)) % p);
        }
        out[e[main]] = (out[e[main]] + v) % p;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return true;
}

int gcd_degree_mod(std::vector<unsigned long> f, std::vector<unsigned long> g, unsigned long p) {
    while (!g.empty()) {
        // f mod g.
        unsigned long glead_inv = mod_pow(g.back(), p - 2, p);
        while (f.size() >= g.size()) {
            unsigned long q = (unsigned long)(((unsigned long long)f.back() * glead_inv) % p);
            size_t off = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i) {
                unsigned long sub = (unsigned long)(((unsigned long long)q * g[i]) % p);
                f[off + i] = (f[off + i] + p - sub) % p;
            }
            while (!f.empty() && f.back() == 0) f.pop_back();
            if (f.empty()) break;
        }
        std::swap(f, g);
    }
    return (int)f.size() - 1;
}

// True if the probe certifies that gcd(a, b) involves no variable at all.
bool probe_trivial_gcd(const Laurent& a, const Laurent& b, const std::vector<int>& slots) {
    const unsigned long p = kProbePrime;
    unsigned long seed = 88172645463325252ull % p;
    for (int slot : slots) {
        bool certified = false;
        for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
            std::vector<unsigned long> vals(a.nvars() + 1);
            for (auto& v : vals) {
                seed = (unsigned long)(((unsigned long long)seed * 6364136223846793005ull + 1442695040888963407ull) % p);
                v = seed % (p - 2) + 1;
            }
            std::vector<unsigned long> fa, fb;
            if (!evaluate_mod(a, slot, vals, p, fa)) return false;
            if (!evaluate_mod(b, slot, vals, p, fb)) return false;
            // Leading coefficients must survive or the bound is void.
            if ((int)fa.size() - 1 != slot_degree(a, slot)) continue;
            if ((int)fb.size() - 1 != slot_degree(b, slot)) continue;
            if (gcd_degree_mod(fa, fb, p) == 0) certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

} // namespace

Laurent Laurent::poly_gcd(const Laurent& a, const Laurent& b) {
    a.check_compatible(b);
    if (!a.is_zero() && !a.is_polynomial()) throw std::logic_error("poly_gcd: nonpolynomial input");
    if (!b.is_zero() && !b.is_polynomial()) throw std::logic_error("poly_gcd: nonpolynomial input");
    if (a.is_zero()) return b.is_zero() ? b : normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);

    std::vector<int> slots = occurring_slots(a, b);
    if (slots.empty()) return constant(a.nvars(), 1);
    if (probe_trivial_gcd(a, b, slots)) return constant(a.nvars(), 1);
    int slot = slots.back();

    Laurent ca = slot_content(a, slot);
    Laurent cb = slot_content(b, slot);
    Laurent cg = poly_gcd(ca, cb);
    Laurent pa = exact_div(a, ca);
    Laurent pb = exact_div(b, cb);

    // Subresultant PRS on the primitive parts.  A slot-free primitive part
    // is the constant 1, so the gcd collapses to the content gcd.
    if (slot_degree(pa, slot) < slot_degree(pb, slot)) std::swap(pa, pb);
    if (slot_degree(pb, slot) == 0) return cg;
    Laurent psi = constant(a.nvars(), -1);
    Laurent beta(a.nvars());
    int delta = slot_degree(pa, slot) - slot_degree(pb, slot);
    beta = delta % 2 == 0 ? constant(a.nvars(), -1) : constant(a.nvars(), 1);
    while (true) {
        Laurent r = pseudo_rem(pa, pb, slot);
        if (r.is_zero()) {
            Laurent prim = exact_div(pb, slot_content(pb, slot));
            return cg * normalize_primitive(prim);
        }
        r = exact_div(r, beta);
        if (slot_degree(r, slot) == 0) return cg;
        // Ducos-style beta/psi update keeping the chain's coefficients small.
        Laurent lc = slot_coefficient(pb, slot, slot_degree(pb, slot));
        Laurent neg_lc = -lc;
        if (delta > 0) {
            Laurent num = neg_lc.pow(delta);
            psi = delta == 1 ? neg_lc : exact_div(num, psi.pow(delta - 1));
        }
        int next_delta = slot_degree(pb, slot) - slot_degree(r, slot);
        pa = pb;
        pb = r;
        delta = next_delta;
        beta = neg_lc * psi.pow(delta);
    }
}

Laurent Laurent::permuted(const std::vector<int>& image, int rank) const {
    if ((int)image.size() != rank || rank > nvars_)
        throw VarMismatch("permuted: bad permutation size");
    Laurent r(nvars_);
    Exp ne(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        std::fill(ne.begin(), ne.end(), 0);
        ne[0] = e[0];
        for (int i = 1; i <= rank; ++i) ne[image[i - 1]] += e[i];
        for (int i = rank + 1; i <= nvars_; ++i) ne[i] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

Laurent Laurent::extended(int new_nvars) const {
    if (new_nvars < nvars_) throw VarMismatch("extended: cannot shrink");
    Laurent r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exp ne(new_nvars + 1, 0);
        std::copy(e.begin(), e.end(), ne.begin());
        r.terms_.emplace(ne, c);
    }
    return r;
}

Laurent Laurent::substitute_monomials(const std::map<int, std::pair<Exp, Rational>>& bindings) const {
    Laurent r(nvars_);
    Exp ne(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
        std::fill(ne.begin(), ne.end(), 0);
        Rational coef = c;
        for (int s = 0; s <= nvars_; ++s) {
            if (e[s] == 0) continue;
            auto it = bindings.find(s);
            if (it == bindings.end()) {
                ne[s] += e[s];
            } else {
                const auto& [be, bc] = it->second;
                if (bc == 0) throw SpecializationPole("substitute: variable bound to zero");
                for (size_t i = 0; i < ne.size(); ++i) ne[i] += be[i] * e[s];
                if (e[s] > 0) {
                    for (int j = 0; j < e[s]; ++j) coef *= bc;
                } else {
                    for (int j = 0; j < -e[s]; ++j) coef /= bc;
                }
            }
        }
        r.add_term(ne, coef);
    }
    return r;
}

} // namespace padspher
