#include "padspher/weyl.hpp"

#include "padspher/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace padspher {

WeylElement::WeylElement(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

WeylElement WeylElement::from_images(std::vector<int> images) {
    WeylElement w((int)images.size());
    std::vector<bool> seen(images.size() + 1, false);
    for (int v : images) {
        if (v < 1 || v > (int)images.size() || seen[v])
            throw std::invalid_argument("WeylElement: not a permutation");
        seen[v] = true;
    }
    w.img_ = std::move(images);
    return w;
}

WeylElement WeylElement::transposition(int n, int a, int b) {
    WeylElement w(n);
    std::swap(w.img_[a - 1], w.img_[b - 1]);
    return w;
}

WeylElement WeylElement::longest(int n) {
    WeylElement w(n);
    std::reverse(w.img_.begin(), w.img_.end());
    return w;
}

std::vector<WeylElement> WeylElement::all(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<WeylElement> out;
    do {
        out.push_back(from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

int WeylElement::length() const {
    int inv = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        for (size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

bool WeylElement::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != (int)i + 1) return false;
    return true;
}

WeylElement WeylElement::inverse() const {
    WeylElement w(rank());
    for (int i = 1; i <= rank(); ++i) w.img_[img_[i - 1] - 1] = i;
    return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    if (rank() != o.rank()) throw VarMismatch("WeylElement: rank mismatch");
    WeylElement w(rank());
    for (int i = 1; i <= rank(); ++i) w.img_[i - 1] = img_[o.img_[i - 1] - 1];
    return w;
}

std::string WeylElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ',';
        os << img_[i];
    }
    os << ']';
    return os.str();
}

Laurent weyl_act(const WeylElement& sigma, const Laurent& e) {
    return e.permuted(sigma.images(), sigma.rank());
}

RatFunc weyl_act(const WeylElement& sigma, const RatFunc& e) {
    return e.permuted(sigma.images(), sigma.rank());
}

Laurent poincare_sum(int n, const Laurent& t) {
    if (n < 1) throw std::invalid_argument("poincare_sum: n >= 1");
    Laurent acc(t.nvars());
    for (const auto& sigma : WeylElement::all(n)) acc += t.pow(sigma.length());
    return acc;
}

RatFunc c_factor(const Laurent& t, const RatFunc& X) {
    const int nv = X.nvars();
    RatFunc one = RatFunc::one(nv);
    RatFunc den = one - X;
    if (den.is_zero()) throw SpecializationPole("c_factor: X is identically 1");
    return (one - RatFunc(t.extended(nv)) * X) / den;
}

namespace {

RatFunc root_ratio(int nvars, int i, int j) {
    // chi(a_alpha) for the positive root (i,j), i<j, realized as x_j/x_i.
    Exp e(nvars + 1, 0);
    e[j] = 1;
    e[i] = -1;
    return RatFunc(Laurent::monomial(nvars, e, 1));
}

} // namespace

RatFunc gamma_product(int n, const Laurent& t) {
    const int nv = std::max(n, t.nvars());
    RatFunc acc = RatFunc::one(nv);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) acc = acc * c_factor(t, root_ratio(nv, i, j));
    return acc;
}

RatFunc c_sigma(const WeylElement& sigma, int n, const Laurent& t) {
    const int nv = std::max(n, t.nvars());
    RatFunc acc = RatFunc::one(nv);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (sigma(i) > sigma(j)) acc = acc * c_factor(t, root_ratio(nv, i, j));
    return acc;
}

std::string case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::alternating: return "alternating";
        case CaseTag::hermitian_unramified: return "hermitian";
        case CaseTag::symmetric_oracle_only: return "symmetric";
    }
    return "?";
}

CaseTag case_from_name(const std::string& name) {
    if (name == "alternating") return CaseTag::alternating;
    if (name == "hermitian" || name == "hermitian_unramified") return CaseTag::hermitian_unramified;
    if (name == "symmetric") return CaseTag::symmetric_oracle_only;
    throw std::invalid_argument("unknown case: " + name);
}

std::vector<Rational> variable_map(CaseTag tag, int n, MapDirection dir,
                                   const std::vector<Rational>& v) {
    if ((int)v.size() != n) throw BadLength("variable_map: expected length n");
    if (tag == CaseTag::symmetric_oracle_only)
        throw UnsupportedCase("variable_map: no closed-form coordinates for the symmetric case");
    const bool alt = tag == CaseTag::alternating;
    std::vector<Rational> out(n);
    if (dir == MapDirection::z_to_s) {
        for (int i = 0; i < n - 1; ++i) {
            out[i] = -v[i] + v[i + 1];
            if (alt) out[i] -= 2;
        }
        out[n - 1] = -v[n - 1];
        if (alt) out[n - 1] += n - 1;
    } else {
        Rational z = alt ? Rational(Rational(n - 1) - v[n - 1]) : Rational(-v[n - 1]);
        out[n - 1] = z;
        for (int i = n - 2; i >= 0; --i) {
            z = out[i + 1] - v[i];
            if (alt) z -= 2;
            out[i] = z;
        }
    }
    return out;
}

} // namespace padspher
