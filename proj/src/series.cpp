#include "padspher/series.hpp"

namespace padspher {

namespace {

void series_accumulate(Series& s, const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = s.coeffs.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) s.coeffs.erase(it);
    }
}

Series truncate_laurent(const Laurent& a, const std::vector<int>& weights, long order) {
    Series s{weights, order, {}};
    for (const auto& [e, c] : a.terms()) {
        if (s.weight_of(e) <= order) series_accumulate(s, e, c);
    }
    return s;
}

} // namespace

Series series_add(const Series& a, const Series& b) {
    if (a.weights != b.weights) throw VarMismatch("series_add: grading mismatch");
    Series s{a.weights, std::min(a.order, b.order), {}};
    for (const auto& [e, c] : a.coeffs)
        if (s.weight_of(e) <= s.order) series_accumulate(s, e, c);
    for (const auto& [e, c] : b.coeffs)
        if (s.weight_of(e) <= s.order) series_accumulate(s, e, c);
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    if (a.weights != b.weights) throw VarMismatch("series_mul: grading mismatch");
    Series s{a.weights, std::min(a.order, b.order), {}};
    Exp e(a.weights.size());
    for (const auto& [ea, ca] : a.coeffs) {
        for (const auto& [eb, cb] : b.coeffs) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (s.weight_of(e) <= s.order) series_accumulate(s, e, ca * cb);
        }
    }
    return s;
}

Series series_expand(const RatFunc& e, const std::vector<int>& weights, long order) {
    if ((int)weights.size() != e.nvars() + 1)
        throw VarMismatch("series_expand: weight vector width mismatch");
    for (int w : weights)
        if (w < 0) throw std::invalid_argument("series_expand: negative weight");
    if (order < 0) throw std::invalid_argument("series_expand: negative order");

    const Laurent& den = e.den();
    Series probe{weights, order, {}};
    Laurent den0 = den.filter([&](const Exp& ex) { return probe.weight_of(ex) == 0; });
    if (den0.is_zero())
        throw NoUnitConstantTerm("series_expand: weight-zero part of denominator vanishes");
    if (!den0.is_single_term())
        throw NoUnitConstantTerm(
            "series_expand: weight-zero part of denominator is not a single term");
    Laurent den_plus = den - den0;

    // 1/den = den0^{-1} * sum_j (-den_plus/den0)^j; den_plus/den0 has every
    // term of weight >= 1, so j <= order suffices.
    Laurent step = den_plus.scaled(-1) * den0.pow(-1);
    Series step_s = truncate_laurent(step, weights, order);
    Series inv{weights, order, {}};
    series_accumulate(inv, Exp(weights.size(), 0), 1);
    Series power = inv;
    for (long j = 1; j <= order; ++j) {
        power = series_mul(power, step_s);
        if (power.coeffs.empty()) break;
        inv = series_add(inv, power);
    }

    Series num_s = truncate_laurent(e.num() * den0.pow(-1), weights, order);
    return series_mul(num_s, inv);
}

} // namespace padspher
