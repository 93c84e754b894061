#include "padspher/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace padspher {

CaseRealization::CaseRealization(CaseTag tag_, int n_) : tag(tag_), n(n_) {
    int max_rank = tag == CaseTag::symmetric_oracle_only ? 3 : 2;
    if (n < 1 || n > max_rank)
        throw UnsupportedCase("enumeration rank out of budget for this case");
}

int CaseRealization::matrix_size() const {
    return tag == CaseTag::alternating ? 2 * n : n;
}

RingCtx CaseRealization::ring(const PAdicConfig& cfg) const {
    return quadratic_extension() ? RingCtx::quadratic(cfg.p, cfg.m) : RingCtx::base(cfg.p, cfg.m);
}

Mat CaseRealization::representative(const Partition& lambda, const RingCtx& R) const {
    if (lambda.length() != n) throw BadLength("representative: len(lambda) != n");
    if (lambda.min_part() < 0)
        throw UnsupportedCase(
            "representative: negative parts are reduced symbolically, not enumerated");
    Mat x;
    x.n = matrix_size();
    auto power = [&](int e) {
        Integer v = 1;
        for (int i = 0; i < e; ++i) v *= R.p;
        return R.reduce(v);
    };
    if (tag == CaseTag::alternating) {
        for (int i = 0; i < n; ++i) {
            std::uint64_t w = power(lambda.part(i));
            x.at(2 * i, 2 * i + 1) = El{w, 0};
            x.at(2 * i + 1, 2 * i) = El{(R.pm - w) % R.pm, 0};
        }
    } else {
        for (int i = 0; i < n; ++i) x.at(i, i) = El{power(lambda.part(i)), 0};
    }
    return x;
}

Mat CaseRealization::act(const RingCtx& R, const Mat& k, const Mat& x) const {
    Mat kx = mat_mul(R, k, x);
    if (tag == CaseTag::hermitian_unramified) return mat_mul(R, kx, mat_conj_transpose(R, k));
    return mat_mul(R, kx, mat_transpose(k));
}

namespace {

El corner_minor(const RingCtx& R, const Mat& x, int size) {
    Mat sub;
    sub.n = size;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sub.at(i, j) = x.at(i, j);
    return mat_det(R, sub);
}

} // namespace

std::vector<std::uint64_t> CaseRealization::invariants(const RingCtx& R, const Mat& x) const {
    std::vector<std::uint64_t> out(n);
    if (tag == CaseTag::alternating) {
        out[0] = x.at(0, 1).a;
        if (n == 2) {
            // pf of the 4x4 corner: x01 x23 - x02 x13 + x03 x12.
            El v = el_sub(R, el_mul(R, x.at(0, 1), x.at(2, 3)), el_mul(R, x.at(0, 2), x.at(1, 3)));
            v = el_add(R, v, el_mul(R, x.at(0, 3), x.at(1, 2)));
            out[1] = v.a;
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            El d = corner_minor(R, x, i);
            if (d.b % R.pm != 0) throw std::logic_error("invariants: non-real minor");
            out[i - 1] = d.a;
        }
    }
    return out;
}

Integer ValuationHistogram::undetermined_mass() const {
    Integer s = 0;
    for (const auto& [v, c] : counts)
        if (std::find(v.begin(), v.end(), kBot) != v.end()) s += c;
    return s;
}

Integer ValuationHistogram::determined_mass() const {
    Integer s = 0;
    for (const auto& [v, c] : counts)
        if (std::find(v.begin(), v.end(), kBot) == v.end()) s += c;
    return s;
}

namespace {

// State packing for the orbit walk: the free coordinates of a symmetric,
// alternating or hermitian matrix in mixed radix base p^m.
struct StateCodec {
    const CaseRealization& c;
    const RingCtx& R;
    int size = 0;
    int slots = 0;

    StateCodec(const CaseRealization& c_, const RingCtx& R_) : c(c_), R(R_) {
        size = c.matrix_size();
        switch (c.tag) {
            case CaseTag::symmetric_oracle_only: slots = size * (size + 1) / 2; break;
            case CaseTag::alternating: slots = size * (size - 1) / 2; break;
            case CaseTag::hermitian_unramified: slots = size + size * (size - 1); break;
        }
    }

    double state_count() const {
        double s = 1;
        for (int i = 0; i < slots; ++i) s *= (double)R.pm;
        return s;
    }

    std::uint64_t encode(const Mat& x) const {
        std::uint64_t idx = 0;
        auto push = [&](std::uint64_t v) { idx = idx * R.pm + v; };
        if (c.tag == CaseTag::symmetric_oracle_only) {
            for (int i = 0; i < size; ++i)
                for (int j = i; j < size; ++j) push(x.at(i, j).a);
        } else if (c.tag == CaseTag::alternating) {
            for (int i = 0; i < size; ++i) {
                if (x.at(i, i).a != 0)
                    throw std::logic_error("orbit walk left the alternating matrices");
                for (int j = i + 1; j < size; ++j) push(x.at(i, j).a);
            }
        } else {
            for (int i = 0; i < size; ++i) {
                if (x.at(i, i).b != 0)
                    throw std::logic_error("orbit walk left the hermitian matrices");
                push(x.at(i, i).a);
            }
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    push(x.at(i, j).a);
                    push(x.at(i, j).b);
                }
        }
        return idx;
    }

    Mat decode(std::uint64_t idx) const {
        std::vector<std::uint64_t> digits(slots);
        for (int k = slots - 1; k >= 0; --k) {
            digits[k] = idx % R.pm;
            idx /= R.pm;
        }
        Mat x;
        x.n = size;
        int k = 0;
        if (c.tag == CaseTag::symmetric_oracle_only) {
            for (int i = 0; i < size; ++i)
                for (int j = i; j < size; ++j) {
                    x.at(i, j) = El{digits[k], 0};
                    x.at(j, i) = El{digits[k], 0};
                    ++k;
                }
        } else if (c.tag == CaseTag::alternating) {
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    x.at(i, j) = El{digits[k], 0};
                    x.at(j, i) = El{(R.pm - digits[k]) % R.pm, 0};
                    ++k;
                }
        } else {
            for (int i = 0; i < size; ++i) x.at(i, i) = El{digits[k++], 0};
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    El v{digits[k], digits[k + 1]};
                    k += 2;
                    x.at(i, j) = v;
                    x.at(j, i) = el_conj(R, v);
                }
        }
        return x;
    }
};

std::vector<int> valuation_vector(const CaseRealization& c, const RingCtx& R, const Mat& x) {
    std::vector<int> v(c.n);
    auto f = c.invariants(R, x);
    for (int i = 0; i < c.n; ++i) {
        int val = residue_valuation(R, f[i]);
        v[i] = val >= R.m ? kBot : val;
    }
    return v;
}

void finish_histogram(ValuationHistogram& h) {
    bool any_determined_slot = false;
    for (const auto& [v, cnt] : h.counts)
        for (int x : v)
            if (x != kBot) any_determined_slot = true;
    if (!any_determined_slot)
        throw LevelTooSmall("valuation_histogram: every cell is undetermined at this level");
}

} // namespace

ValuationHistogram valuation_histogram_at(const CaseRealization& c, const Mat& x,
                                          const PAdicConfig& cfg) {
    RingCtx R = c.ring(cfg);
    StateCodec codec(c, R);
    if (codec.state_count() > (double)(1u << 24))
        throw UnsupportedCase("valuation_histogram: state space above the enumeration budget");
    const std::uint64_t nstates = (std::uint64_t)codec.state_count();

    std::vector<Mat> gens = gl_generators(R, codec.size);
    std::vector<bool> visited(nstates, false);
    std::vector<std::uint32_t> orbit;
    orbit.reserve(1024);
    std::uint64_t start = codec.encode(x);
    visited[start] = true;
    orbit.push_back((std::uint32_t)start);
    const bool chatty = nstates > (1u << 18);
    for (size_t head = 0; head < orbit.size(); ++head) {
        Mat cur = codec.decode(orbit[head]);
        for (const Mat& g : gens) {
            std::uint64_t next = codec.encode(c.act(R, g, cur));
            if (!visited[next]) {
                visited[next] = true;
                orbit.push_back((std::uint32_t)next);
            }
        }
        if (chatty && head % (1 << 20) == 0 && head > 0)
            std::fprintf(stderr, "orbit walk: %zu visited\n", head);
    }

    ValuationHistogram h;
    h.tag = c.tag;
    h.n = c.n;
    h.p = cfg.p;
    h.m = cfg.m;
    h.total = gl_order(R, codec.size);
    Integer stab = h.total / Integer((unsigned long)orbit.size());
    if (stab * Integer((unsigned long)orbit.size()) != h.total)
        throw std::logic_error("valuation_histogram: orbit size does not divide the group order");
    for (std::uint32_t s : orbit) h.counts[valuation_vector(c, R, codec.decode(s))] += stab;
    finish_histogram(h);
    return h;
}

ValuationHistogram valuation_histogram(const CaseRealization& c, const Partition& lambda,
                                       const PAdicConfig& cfg) {
    RingCtx R = c.ring(cfg);
    return valuation_histogram_at(c, c.representative(lambda, R), cfg);
}

ValuationHistogram valuation_histogram_direct(const CaseRealization& c, const Mat& x,
                                              const PAdicConfig& cfg) {
    RingCtx R = c.ring(cfg);
    const int size = c.matrix_size();
    const int digits_per_entry = R.ext ? 2 : 1;
    const int digits = size * size * digits_per_entry;
    double cand = 1;
    for (int i = 0; i < digits; ++i) cand *= (double)R.pm;
    if (cand > 5e7)
        throw UnsupportedCase("valuation_histogram_direct: group too large to enumerate");
    const std::uint64_t ncand = (std::uint64_t)cand;

    int nthreads = 1;
    if (const char* env = std::getenv("PADSPHER_THREADS")) {
        nthreads = std::max(1, std::min(16, (int)std::strtol(env, nullptr, 10)));
    }

    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi,
                         std::map<std::vector<int>, Integer>& out, std::uint64_t& seen) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            Mat k;
            k.n = size;
            std::uint64_t rest = idx;
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) {
                    El v;
                    v.a = rest % R.pm;
                    rest /= R.pm;
                    if (R.ext) {
                        v.b = rest % R.pm;
                        rest /= R.pm;
                    }
                    k.at(i, j) = v;
                }
            if (!el_is_unit(R, mat_det(R, k))) continue;
            ++seen;
            out[valuation_vector(c, R, c.act(R, k, x))] += 1;
        }
    };

    std::vector<std::map<std::vector<int>, Integer>> partial(nthreads);
    std::vector<std::uint64_t> seen(nthreads, 0);
    if (nthreads == 1) {
        run_chunk(0, ncand, partial[0], seen[0]);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = ncand / nthreads + 1;
        for (int t = 0; t < nthreads; ++t) {
            std::uint64_t lo = t * chunk, hi = std::min(ncand, lo + chunk);
            pool.emplace_back([&, lo, hi, t] { run_chunk(lo, hi, partial[t], seen[t]); });
        }
        for (auto& th : pool) th.join();
    }

    ValuationHistogram h;
    h.tag = c.tag;
    h.n = c.n;
    h.p = cfg.p;
    h.m = cfg.m;
    h.total = 0;
    for (int t = 0; t < nthreads; ++t) {
        h.total += Integer((unsigned long)seen[t]);
        for (const auto& [v, cnt] : partial[t]) h.counts[v] += cnt;
    }
    if (h.total != gl_order(R, size))
        throw std::logic_error("valuation_histogram_direct: group order mismatch");
    finish_histogram(h);
    return h;
}

ValuationHistogram collapse_level(const ValuationHistogram& h) {
    if (h.m < 2) throw UnsupportedCase("collapse_level: nothing below level 1");
    ValuationHistogram out;
    out.tag = h.tag;
    out.n = h.n;
    out.p = h.p;
    out.m = h.m - 1;
    out.total = h.total;
    for (const auto& [v, cnt] : h.counts) {
        std::vector<int> w = v;
        for (int& x : w)
            if (x == kBot || x >= out.m) x = kBot;
        out.counts[w] += cnt;
    }
    return out;
}

std::optional<Rational> OracleSeries::coefficient(const std::vector<int>& w) const {
    for (const auto& pat : patterns) {
        bool match = true;
        for (size_t i = 0; i < pat.value.size() && match; ++i) {
            if (pat.exact[i])
                match = w[i] == pat.value[i];
            else
                match = w[i] >= pat.value[i];
        }
        if (match) return std::nullopt;
    }
    auto it = coeffs.find(w);
    return it == coeffs.end() ? Rational(0) : it->second;
}

OracleSeries OracleSeries::shifted(const std::vector<int>& delta) const {
    OracleSeries out;
    out.n = n;
    out.tail = tail;
    for (const auto& [v, c] : coeffs) {
        std::vector<int> w = v;
        for (int i = 0; i < n; ++i) w[i] += delta[i];
        out.coeffs.emplace(w, c);
    }
    for (const auto& pat : patterns) {
        BotPattern np = pat;
        for (int i = 0; i < n; ++i) np.value[i] += delta[i];
        out.patterns.push_back(np);
    }
    return out;
}

OracleSeries OracleSeries::scaled(const Rational& c) const {
    OracleSeries out = *this;
    if (c == 0) {
        out.coeffs.clear();
        out.patterns.clear();  // zero annihilates the undetermined mass too
        out.tail = 0;
        return out;
    }
    for (auto& [v, x] : out.coeffs) x *= c;
    return out;
}

OracleSeries OracleSeries::sum(const std::vector<OracleSeries>& parts) {
    OracleSeries out;
    if (parts.empty()) return out;
    out.n = parts.front().n;
    for (const auto& p : parts) {
        for (const auto& [v, c] : p.coeffs) {
            auto [it, fresh] = out.coeffs.emplace(v, c);
            if (!fresh) it->second += c;
        }
        for (const auto& pat : p.patterns) out.patterns.push_back(pat);
        out.tail += p.tail;
    }
    return out;
}

OracleSeries histogram_series(const ValuationHistogram& h) {
    OracleSeries s;
    s.n = h.n;
    Rational total(h.total);
    for (const auto& [v, cnt] : h.counts) {
        bool det = std::find(v.begin(), v.end(), kBot) == v.end();
        if (det) {
            s.coeffs[v] = Rational(cnt) / total;
        } else {
            OracleSeries::BotPattern pat;
            pat.value = v;
            pat.exact.assign(v.size(), true);
            for (size_t i = 0; i < v.size(); ++i) {
                if (v[i] == kBot) {
                    pat.value[i] = h.m;
                    pat.exact[i] = false;
                }
            }
            s.patterns.push_back(pat);
            s.tail += Rational(cnt) / total;
        }
    }
    return s;
}

namespace {

// Closed form in the oracle's u-coordinates with q specialized to the
// residue cardinality.
RatFunc closed_form_in_u(const SphericalCase& sc, const Partition& lambda, long residue_q) {
    RatFunc cf = spherical_closed_form(sc, lambda);
    auto bind = oracle_substitution(sc);
    std::map<int, std::pair<Exp, Rational>> numeric;
    for (auto& [slot, val] : bind) {
        auto [e, coef] = val;
        int qpow = e[0];
        e[0] = 0;
        Rational c = coef;
        for (int i = 0; i < qpow; ++i) c *= residue_q;
        for (int i = 0; i > qpow; --i) c /= residue_q;
        numeric[slot] = {e, c};
    }
    numeric[0] = {Exp(sc.n + 1, 0), Rational(residue_q)};
    return substitute_monomials(cf, numeric);
}

} // namespace

OracleMatchReport oracle_match(const SphericalCase& sc, const Partition& lambda,
                               const PAdicConfig& cfg, std::optional<Rational> fitted,
                               long residue_q) {
    if (!sc.has_closed_form())
        throw NoClosedForm("oracle_match: the symmetric case has no closed form to compare");
    if (residue_q == 0) residue_q = cfg.p;

    CaseRealization real(sc.tag, sc.n);
    ValuationHistogram hist = valuation_histogram(real, lambda, cfg);
    OracleSeries oracle = histogram_series(hist);

    RatFunc cf = closed_form_in_u(sc, lambda, residue_q);
    std::vector<int> weights(sc.n + 1, 1);
    weights[0] = 0;
    Series cfs = series_expand(cf, weights, (long)sc.n * (cfg.m - 1));

    auto cf_coeff = [&](const std::vector<int>& v) {
        Exp e(sc.n + 1, 0);
        for (int i = 0; i < sc.n; ++i) e[i + 1] = v[i];
        return cfs.coefficient(e);
    };

    // All of [0,m)^n is determined: undetermined mass lives at >= m in some
    // slot.  Walk it in lex order.
    std::vector<std::vector<int>> window;
    std::vector<int> v(sc.n, 0);
    while (true) {
        window.push_back(v);
        int i = sc.n - 1;
        while (i >= 0 && v[i] == cfg.m - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }

    OracleMatchReport rep;
    rep.tail = oracle.tail;
    if (fitted) {
        rep.fitted_constant = *fitted;
        rep.constant_was_supplied = true;
    } else {
        bool found = false;
        for (const auto& w : window) {
            Rational c = cf_coeff(w);
            if (c != 0) {
                auto oc = oracle.coefficient(w);
                rep.fitted_constant = *oc / c;
                found = true;
                break;
            }
        }
        if (!found)
            throw LevelTooSmall("oracle_match: no determined coefficient available to fit");
    }

    std::ostringstream detail;
    for (const auto& w : window) {
        Rational lhs = *oracle.coefficient(w);
        Rational rhs = rep.fitted_constant * cf_coeff(w);
        ++rep.compared;
        if (lhs != rhs) {
            detail << "mismatch at u^(";
            for (size_t i = 0; i < w.size(); ++i) detail << (i ? "," : "") << w[i];
            detail << "): oracle " << to_string(lhs) << " vs closed form " << to_string(rhs);
            rep.detail = detail.str();
            throw MismatchBeyondTail(rep.detail);
        }
        if (lhs != 0) ++rep.matched_nonzero;
    }
    rep.pass = true;
    detail << "matched " << rep.compared << " determined coefficients ("
           << rep.matched_nonzero << " nonzero), tail " << to_string(rep.tail);
    rep.detail = detail.str();
    return rep;
}

std::vector<SignatureComponent> orbit_signature(const CaseRealization& c, const Mat& x,
                                                const PAdicConfig& cfg) {
    RingCtx R = c.ring(cfg);
    auto f = c.invariants(R, x);
    std::vector<SignatureComponent> out(c.n);
    for (int i = 0; i < c.n; ++i) {
        int val = residue_valuation(R, f[i]);
        if (val >= R.m)
            throw NotInOpenOrbit("orbit_signature: invariant vanishes mod p^m");
        SignatureComponent& s = out[i];
        s.valuation = val;
        switch (c.tag) {
            case CaseTag::symmetric_oracle_only: {
                std::uint64_t unit = f[i];
                for (int k = 0; k < val; ++k) unit /= (std::uint64_t)R.p;
                s.parity = val % 2;
                s.character = quadratic_character(R.p, unit % (std::uint64_t)R.p);
                break;
            }
            case CaseTag::hermitian_unramified:
                s.parity = val % 2;
                s.character = 0;
                break;
            case CaseTag::alternating:
                // Single open orbit; every point carries the same label.
                s.parity = 0;
                s.character = 0;
                break;
        }
    }
    return out;
}

} // namespace padspher
