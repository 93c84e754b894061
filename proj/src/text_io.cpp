#include "padspher/text_io.hpp"

#include <algorithm>
#include <sstream>

namespace padspher {

std::vector<std::string> default_names(int nvars, int rank_hint) {
    std::vector<std::string> names(nvars + 1);
    names[0] = "q";
    int n = rank_hint < 0 ? nvars : rank_hint;
    for (int i = 1; i <= nvars; ++i) {
        if (i <= n)
            names[i] = "x" + std::to_string(i);
        else if (i == n + 1)
            names[i] = "t";
        else
            names[i] = "v" + std::to_string(i - n - 1);
    }
    return names;
}

std::vector<std::string> u_names(int nvars) {
    std::vector<std::string> names(nvars + 1);
    names[0] = "q";
    for (int i = 1; i <= nvars; ++i) names[i] = "u" + std::to_string(i);
    return names;
}

namespace {

std::string render_monomial(const Exp& e, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << names[i];
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

// One term "3*q^-1*x1" without a leading sign; the magnitude of the
// coefficient is rendered, the sign is returned separately.
std::pair<int, std::string> render_term(const Exp& e, const Rational& c,
                                        const std::vector<std::string>& names) {
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string mono = render_monomial(e, names);
    std::string body;
    if (mono.empty())
        body = to_string(mag);
    else if (mag == 1)
        body = mono;
    else
        body = to_string(mag) + "*" + mono;
    return {c < 0 ? -1 : 1, body};
}

std::string join_terms(const std::vector<std::pair<int, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].first < 0) os << "-";
        } else {
            os << (terms[i].first < 0 ? " - " : " + ");
        }
        os << terms[i].second;
    }
    return os.str();
}

} // namespace

std::string render_laurent(const Laurent& e, const std::vector<std::string>& names,
                           bool ascending) {
    std::vector<std::pair<int, std::string>> terms;
    if (ascending) {
        for (const auto& [ex, c] : e.terms()) terms.push_back(render_term(ex, c, names));
    } else {
        for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
            terms.push_back(render_term(it->first, it->second, names));
    }
    return join_terms(terms);
}

std::string render_grouped(const Laurent& e, int n, const std::vector<std::string>& names) {
    if (e.is_zero()) return "0";
    struct Bucket {
        std::vector<int> shape;  // sorted descending
        std::vector<int> xpart;
        Laurent coef;
    };
    std::map<std::vector<int>, Bucket> buckets;  // keyed by xpart
    const int nv = e.nvars();
    for (const auto& [ex, c] : e.terms()) {
        std::vector<int> xpart(ex.begin() + 1, ex.begin() + 1 + n);
        auto [it, fresh] = buckets.try_emplace(xpart, Bucket{{}, xpart, Laurent(nv)});
        if (fresh) {
            it->second.shape = xpart;
            std::sort(it->second.shape.begin(), it->second.shape.end(), std::greater<int>());
        }
        Exp rest = ex;
        for (int i = 1; i <= n; ++i) rest[i] = 0;
        it->second.coef.add_term(rest, c);
    }
    std::vector<const Bucket*> order;
    for (const auto& [k, b] : buckets) order.push_back(&b);
    std::sort(order.begin(), order.end(), [](const Bucket* a, const Bucket* b) {
        if (a->shape != b->shape)
            return std::lexicographical_compare(b->shape.begin(), b->shape.end(),
                                                a->shape.begin(), a->shape.end());
        return std::lexicographical_compare(b->xpart.begin(), b->xpart.end(),
                                            a->xpart.begin(), a->xpart.end());
    });

    std::vector<std::pair<int, std::string>> rendered;
    for (const Bucket* b : order) {
        Exp xe(nv + 1, 0);
        for (int i = 0; i < n; ++i) xe[i + 1] = b->xpart[i];
        std::string mono = render_monomial(xe, names);
        if (b->coef.is_single_term()) {
            auto [ce, cc] = b->coef.leading_term();
            Exp joint = xe;
            for (size_t i = 0; i < joint.size(); ++i) joint[i] += ce[i];
            rendered.push_back(render_term(joint, cc, names));
        } else {
            std::string inner = render_laurent(b->coef, names, /*ascending=*/true);
            rendered.push_back({1, mono.empty() ? "(" + inner + ")" : "(" + inner + ")*" + mono});
        }
    }
    return join_terms(rendered);
}

std::string render_ratfunc(const RatFunc& e, const std::vector<std::string>& names) {
    std::string num = render_laurent(e.num(), names);
    if (e.den() == Laurent::constant(e.nvars(), 1)) return num;
    std::string den = render_laurent(e.den(), names);
    std::string lhs = e.num().term_count() > 1 ? "(" + num + ")" : num;
    std::string rhs = e.den().term_count() > 1 ? "(" + den + ")" : den;
    return lhs + " / " + rhs;
}

} // namespace padspher
