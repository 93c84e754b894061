#include "padspher/hall_littlewood.hpp"

#include "padspher/weyl.hpp"

#include <algorithm>

namespace padspher {

Laurent hl_weight(const Partition& lambda, const Laurent& t) {
    Laurent acc = Laurent::constant(t.nvars(), 1);
    Laurent one = Laurent::constant(t.nvars(), 1);
    for (const auto& [value, mult] : lambda.profile()) {
        (void)value;
        for (int i = 1; i <= mult; ++i) acc *= one - t.pow(i);
    }
    return acc;
}

namespace {

// Vandermonde prod_{i<j} (x_i - x_j).
Laurent vandermonde(int n, int nvars) {
    Laurent acc = Laurent::constant(nvars, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) acc *= Laurent::x(nvars, i) - Laurent::x(nvars, j);
    return acc;
}

} // namespace

Laurent hl_polynomial(const Partition& lambda, int n, const Laurent& t) {
    if (lambda.length() != n) throw BadLength("hl_polynomial: len(lambda) != n");
    const int nv = t.nvars();
    if (nv < n) throw VarMismatch("hl_polynomial: ring has fewer than n x-variables");
    if (n == 0) return Laurent::constant(nv, 1);

    if (lambda.min_part() < 0) {
        int c = lambda.min_part();
        Laurent base = hl_polynomial(lambda.translated(-c), n, t);
        Exp delta(nv + 1, 0);
        for (int i = 1; i <= n; ++i) delta[i] = c;
        return base.shifted(delta);
    }

    // Symmetrized numerator over the common denominator prod_{i<j}(x_i-x_j):
    //   sum_sigma sgn(sigma) x_{sigma(1)}^{l_1}..x_{sigma(n)}^{l_n}
    //            prod_{i<j} (x_{sigma(i)} - t x_{sigma(j)}).
    Laurent num(nv);
    for (const auto& sigma : WeylElement::all(n)) {
        Exp mono(nv + 1, 0);
        for (int i = 1; i <= n; ++i) mono[sigma(i)] = lambda.part(i - 1);
        Laurent term = Laurent::monomial(nv, mono, sigma.sign());
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                term *= Laurent::x(nv, sigma(i)) - t * Laurent::x(nv, sigma(j));
        num += term;
    }
    Laurent sym = Laurent::exact_div(num, vandermonde(n, nv));

    Laurent w = hl_weight(lambda, t);
    if (w.is_zero()) throw InexactDivision("hl_polynomial: w_lambda(t) vanishes");
    Laurent one_minus_t = Laurent::constant(nv, 1) - t;
    return Laurent::exact_div(sym * one_minus_t.pow(n), w);
}

Laurent monomial_sym(const Partition& lambda, int n, int nvars) {
    if (lambda.length() != n) throw BadLength("monomial_sym: len(lambda) != n");
    if (nvars < n) throw VarMismatch("monomial_sym: ring has fewer than n x-variables");
    std::vector<int> mu = lambda.parts();
    std::sort(mu.begin(), mu.end());
    Laurent acc(nvars);
    do {
        Exp e(nvars + 1, 0);
        for (int i = 0; i < n; ++i) e[i + 1] = mu[i];
        acc.add_term(e, 1);
    } while (std::next_permutation(mu.begin(), mu.end()));
    return acc;
}

std::vector<std::pair<Partition, Laurent>> monomial_expansion(const Laurent& f, int n) {
    std::vector<std::pair<Partition, Laurent>> out;
    Laurent rest = f;
    const int nv = f.nvars();
    const size_t guard = 4 * f.term_count() + 16;
    while (!rest.is_zero()) {
        if (out.size() > guard)
            throw std::invalid_argument("monomial_expansion: input is not symmetric");
        // Largest x-part in lex order; for a symmetric polynomial its
        // exponents form a partition.
        std::vector<int> mu;
        for (const auto& [e, c] : rest.terms()) {
            std::vector<int> xe(e.begin() + 1, e.begin() + 1 + n);
            if (mu.empty() || std::lexicographical_compare(mu.begin(), mu.end(), xe.begin(), xe.end()))
                mu = xe;
        }
        std::vector<int> sorted = mu;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != mu)
            throw std::invalid_argument("monomial_expansion: input is not symmetric");
        Partition part(mu);

        // Coefficient of x^mu as a polynomial in the non-x slots.
        Laurent coef(nv);
        for (const auto& [e, c] : rest.terms()) {
            bool match = true;
            for (int i = 1; i <= n && match; ++i) match = e[i] == mu[i - 1];
            if (match) {
                Exp e2 = e;
                for (int i = 1; i <= n; ++i) e2[i] = 0;
                coef.add_term(e2, c);
            }
        }
        rest -= coef * monomial_sym(part, n, nv);
        out.emplace_back(part, coef);
    }
    return out;
}

} // namespace padspher
