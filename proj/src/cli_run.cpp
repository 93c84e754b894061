#include "padspher/cli_run.hpp"

#include "padspher/hecke.hpp"
#include "padspher/text_io.hpp"
#include "padspher/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace padspher {

namespace {

using nlohmann::json;

json laurent_json(const Laurent& e) {
    json terms = json::array();
    for (const auto& [ex, c] : e.terms()) terms.push_back({ex, to_string(c)});
    return terms;
}

json ratfunc_json(const RatFunc& e) {
    return json{{"num", laurent_json(e.num())}, {"den", laurent_json(e.den())}};
}

json histogram_json(const ValuationHistogram& h) {
    json counts = json::array();
    for (const auto& [v, cnt] : h.counts) {
        json key = json::array();
        for (int x : v) {
            if (x == kBot)
                key.push_back("*");
            else
                key.push_back(x);
        }
        counts.push_back({key, cnt.get_str()});
    }
    return json{{"case", case_name(h.tag)}, {"n", h.n},        {"p", h.p},
                {"m", h.m},                 {"counts", counts}, {"total", h.total.get_str()}};
}

json series_json(const OracleSeries& s, long order = -1) {
    json coeffs = json::array();
    for (const auto& [v, c] : s.coeffs) {
        if (order >= 0) {
            long w = 0;
            for (int x : v) w += x;
            if (w > order) continue;
        }
        coeffs.push_back({v, to_string(c)});
    }
    return json{{"coefficients", coeffs}, {"tail", to_string(s.tail)}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty entry in list: " + text);
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

struct FixtureConfig {
    std::string dir;
    bool record = false;
    bool verify = false;
};

// Returns the adjusted exit code after recording or verifying the document.
int apply_fixture(const FixtureConfig& fx, const std::string& command,
                  const std::string& canonical_args, const std::string& text, int code,
                  std::string& note) {
    if (fx.dir.empty()) return code;
    std::filesystem::create_directories(fx.dir);
    std::filesystem::path file =
        std::filesystem::path(fx.dir) / (command + "-" + hex64(fnv1a(command + "|" + canonical_args)) + ".json");
    if (fx.record) {
        std::ofstream out(file, std::ios::binary);
        out << text;
        note = "recorded " + file.string();
        return code;
    }
    if (fx.verify) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            note = "missing fixture " + file.string();
            return 1;
        }
        std::string stored((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (stored != text) {
            note = "fixture mismatch " + file.string();
            return 1;
        }
        note = "verified " + file.string();
    }
    return code;
}

// ---- selftest battery -----------------------------------------------------

json selftest_battery(int& failures) {
    json checks = json::array();
    auto record = [&](const std::string& name, bool pass, const std::string& info = "") {
        checks.push_back({{"name", name}, {"pass", pass}, {"info", info}});
        if (!pass) ++failures;
    };

    // Hall-Littlewood fixed values and properties at small rank.
    {
        int nv = 3;
        Laurent t = Laurent::x(nv, 3);
        Laurent p20 = hl_polynomial(Partition({2, 0}), 2, t);
        Laurent expect = Laurent::x(nv, 1).pow(2) + Laurent::x(nv, 2).pow(2) +
                         (Laurent::constant(nv, 1) - t) * Laurent::x(nv, 1) * Laurent::x(nv, 2);
        record("hl_p20", p20 == expect, render_grouped(p20, 2, default_names(nv, 2)));
        bool sym = true;
        for (const auto& lambda : Partition::box(2, -1, 2)) {
            Laurent p = hl_polynomial(lambda, 2, t);
            for (const auto& sigma : WeylElement::all(2)) sym = sym && weyl_act(sigma, p) == p;
        }
        record("hl_symmetry_n2", sym);
    }
    // Constant-term identity at n = 3.
    {
        Laurent t = Laurent::q(3, -1);
        RatFunc acc(3);
        for (const auto& sigma : WeylElement::all(3)) acc += weyl_act(sigma, gamma_product(3, t));
        record("poincare_constant_term_n3", acc == RatFunc(poincare_sum(3, t).extended(3)));
    }
    // Functional equations and cocycle on S3 for both cases.
    {
        bool pass = true;
        for (CaseTag tag : {CaseTag::alternating, CaseTag::hermitian_unramified}) {
            SphericalCase c(tag, 3);
            auto sigmas = WeylElement::all(3);
            RatFunc omega = spherical_closed_form(c, Partition({1, 0, 0}));
            for (const auto& sigma : sigmas)
                pass = pass &&
                       RatFunc::equivalent(omega, feq_factor(c, sigma) * weyl_act(sigma, omega));
            for (const auto& tau : sigmas)
                for (const auto& sigma : sigmas)
                    pass = pass && feq_factor(c, tau * sigma) ==
                                       feq_factor(c, tau) * weyl_act(tau, feq_factor(c, sigma));
        }
        record("functional_equation_cocycle_s3", pass);
    }
    // Reconstruction identity at n = 2.
    {
        bool pass = true;
        for (CaseTag tag : {CaseTag::alternating, CaseTag::hermitian_unramified})
            for (const auto& lambda : Partition::box(2, -1, 1))
                pass = pass && casselman_reconstruct(SphericalCase(tag, 2), lambda).match;
        record("reconstruction_n2", pass);
    }
    // Oracle: the 48-element histogram and the rank-1 matches.
    {
        ValuationHistogram h = valuation_histogram(
            CaseRealization(CaseTag::symmetric_oracle_only, 2), Partition({0, 0}), PAdicConfig(3, 1));
        record("oracle_gl2_f3", h.total == 48 && h.counts.at(std::vector<int>{0, 0}) == 48);
        bool pass = true;
        for (int m = 1; m <= 2; ++m)
            for (int a = 0; a < m; ++a) {
                pass = pass &&
                       oracle_match(SphericalCase(CaseTag::alternating, 1), Partition({a}),
                                    PAdicConfig(3, m)).pass;
                pass = pass &&
                       oracle_match(SphericalCase(CaseTag::hermitian_unramified, 1), Partition({a}),
                                    PAdicConfig(3, m)).pass;
            }
        record("oracle_rank1", pass);
        auto r = oracle_match(SphericalCase(CaseTag::hermitian_unramified, 2), Partition({0, 0}),
                              PAdicConfig(3, 2));
        record("oracle_hermitian_n2", r.pass, "c = " + to_string(r.fitted_constant));
    }
    // Hecke eigen-relations.
    {
        record("hecke_toy",
               hecke_eigen_check(HeckeCase::toy_rank1, Partition({2}), PAdicConfig(3, 3)).pass);
        record("hecke_hermitian1",
               hecke_eigen_check(HeckeCase::hermitian_rank1, Partition({1}), PAdicConfig(3, 2)).pass);
        record("hecke_symmetric2",
               hecke_eigen_check(HeckeCase::symmetric_rank2, Partition({0, 0}), PAdicConfig(3, 2)).pass);
    }
    // Tate gamma and the scaling identity.
    {
        long p = 3;
        RatFunc expect = tate_gamma_reference(p);
        bool pass = gamma_extract(StepFunction::indicator_ball(p, 0, 2, 0)) == expect &&
                    gamma_extract(StepFunction::indicator_units(p, 0, 2)) == expect &&
                    gamma_extract(StepFunction::indicator_ball(p, 0, 2, 1)) == expect;
        record("tate_gamma", pass);
        StepFunction f = StepFunction::indicator_units(p, 1, 2);
        record("fourier_involution",
               fourier_finite(fourier_finite(f)) == f.reflected());
        record("scaling_identity", scaling_check(PVContext{1, {1}, 1}, 1).pass &&
                                       scaling_check(PVContext{1, {2}, 1}, 2).pass);
    }
    return checks;
}

std::string canonical_args_string(const std::vector<std::string>& args) {
    std::string s;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--record" || a == "--verify") continue;
        if (a == "--fixtures" || a == "--json") {
            ++i;  // the store location is not part of the document identity
            continue;
        }
        if (a.rfind("--fixtures=", 0) == 0 || a.rfind("--json=", 0) == 0) continue;
        if (!s.empty()) s += " ";
        s += a;
    }
    return s;
}

} // namespace

RunResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact spherical functions on p-adic homogeneous spaces"};
    app.require_subcommand(1);

    std::string case_name_opt = "hermitian";
    std::string lambda_opt = "0";
    std::string sigma_opt;
    int n_opt = 2;
    long p_opt = 3;
    int m_opt = 2;
    long order_opt = -1;
    FixtureConfig fx;
    std::string json_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--fixtures", fx.dir, "fixture store directory");
        cmd->add_flag("--record", fx.record, "record the document into the fixture store");
        cmd->add_flag("--verify", fx.verify, "compare the document against the fixture store");
        cmd->add_option("--json", json_path, "also write the document to this path");
    };

    CLI::App* hl = app.add_subcommand("hl", "Hall-Littlewood polynomial with formal t");
    hl->add_option("--n", n_opt)->required();
    hl->add_option("--lambda", lambda_opt)->required();
    add_common(hl);

    CLI::App* sph = app.add_subcommand("spherical", "closed form at an orbit representative");
    sph->add_option("--case", case_name_opt);
    sph->add_option("--lambda", lambda_opt)->required();
    add_common(sph);

    CLI::App* feq = app.add_subcommand("feq", "functional-equation factor and cocycle verdict");
    feq->add_option("--case", case_name_opt);
    feq->add_option("--n", n_opt);
    feq->add_option("--sigma", sigma_opt)->required();
    add_common(feq);

    CLI::App* rec = app.add_subcommand("reconstruct", "Weyl-sum reconstruction identity");
    rec->add_option("--case", case_name_opt);
    rec->add_option("--lambda", lambda_opt)->required();
    add_common(rec);

    CLI::App* orc = app.add_subcommand("oracle", "finite-level integration histogram and match");
    orc->add_option("--case", case_name_opt);
    orc->add_option("--lambda", lambda_opt)->required();
    orc->add_option("--p", p_opt);
    orc->add_option("--m", m_opt);
    orc->add_option("--order", order_opt, "truncate the emitted series at this total weight");
    add_common(orc);

    CLI::App* hck = app.add_subcommand("hecke", "convolution eigen-relation check");
    hck->add_option("--case", case_name_opt)->required();
    hck->add_option("--lambda", lambda_opt);
    hck->add_option("--p", p_opt);
    hck->add_option("--m", m_opt);
    add_common(hck);

    CLI::App* tate = app.add_subcommand("tate", "finite Tate functional equation");
    tate->add_option("--p", p_opt);
    add_common(tate);

    CLI::App* self = app.add_subcommand("selftest", "full invariant battery");
    add_common(self);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        json doc{{"schema", 1}, {"error", std::string("usage: ") + e.what()}};
        return {2, doc.dump(2) + "\n"};
    }
    if (fx.record && fx.verify)
        return {2, json{{"schema", 1}, {"error", "usage: --record and --verify are exclusive"}}.dump(2) + "\n"};
    if ((fx.record || fx.verify) && fx.dir.empty())
        return {2, json{{"schema", 1}, {"error", "usage: --record/--verify need --fixtures"}}.dump(2) + "\n"};

    json doc{{"schema", 1}};
    int code = 0;
    std::string command;
    try {
        if (*hl) {
            command = "hl";
            auto parts = parse_int_list(lambda_opt);
            Partition lambda(parts);
            if (lambda.length() != n_opt) throw BadLength("lambda length must equal n");
            int nv = n_opt + 1;
            Laurent t = Laurent::x(nv, nv);
            Laurent poly = hl_polynomial(lambda, n_opt, t);
            auto names = default_names(nv, n_opt);
            doc["command"] = "hl";
            doc["n"] = n_opt;
            doc["lambda"] = parts;
            doc["w_lambda"] = render_laurent(hl_weight(lambda, Laurent::x(1, 1)),
                                             std::vector<std::string>{"q", "t"});
            doc["poly"] = laurent_json(poly);
            doc["text"] = render_grouped(poly, n_opt, names);
        } else if (*sph) {
            command = "spherical";
            auto parts = parse_int_list(lambda_opt);
            SphericalCase sc(case_from_name(case_name_opt), (int)parts.size());
            Partition lambda(parts);
            RatFunc omega = spherical_closed_form(sc, lambda);
            auto names = default_names(sc.n, sc.n);
            doc["command"] = "spherical";
            doc["case"] = sc.name();
            doc["lambda"] = parts;
            doc["scalar"] = "c_lambda (fitted by the oracle, not printed here)";
            doc["closed_form"] = ratfunc_json(omega);
            doc["text"] = render_ratfunc(omega, names);
            doc["psi"] = render_ratfunc(psi_normalized(sc, lambda), names);
            doc["psi_cancellation"] = "pass";
        } else if (*feq) {
            command = "feq";
            auto images = parse_int_list(sigma_opt);
            int n = n_opt;
            if ((int)images.size() != n) throw BadLength("sigma must list n images");
            SphericalCase sc(case_from_name(case_name_opt), n);
            WeylElement sigma = WeylElement::from_images(images);
            RatFunc b = feq_factor(sc, sigma);
            auto names = default_names(n, n);
            doc["command"] = "feq";
            doc["case"] = sc.name();
            doc["sigma"] = images;
            doc["factor"] = ratfunc_json(b);
            doc["text"] = render_ratfunc(b, names);
            bool cocycle = true;
            if (n <= 3) {
                auto sigmas = WeylElement::all(n);
                for (const auto& tau : sigmas)
                    for (const auto& sg : sigmas)
                        cocycle = cocycle && feq_factor(sc, tau * sg) ==
                                                 feq_factor(sc, tau) * weyl_act(tau, feq_factor(sc, sg));
            }
            RatFunc pre = prefactor(sc);
            bool ratio = RatFunc::equivalent(pre, b * weyl_act(sigma, pre));
            doc["cocycle"] = cocycle ? "pass" : "fail";
            doc["prefactor_ratio"] = ratio ? "pass" : "fail";
            if (!cocycle || !ratio) code = 1;
        } else if (*rec) {
            command = "reconstruct";
            auto parts = parse_int_list(lambda_opt);
            SphericalCase sc(case_from_name(case_name_opt), (int)parts.size());
            auto r = casselman_reconstruct(sc, Partition(parts));
            auto names = default_names(sc.n, sc.n);
            doc["command"] = "reconstruct";
            doc["case"] = sc.name();
            doc["lambda"] = parts;
            doc["sum"] = render_ratfunc(r.sum, names);
            doc["predicted"] = render_ratfunc(r.predicted, names);
            doc["match"] = r.match ? "pass" : "fail";
            if (!r.match) code = 1;
        } else if (*orc) {
            command = "oracle";
            auto parts = parse_int_list(lambda_opt);
            CaseTag tag = case_from_name(case_name_opt);
            Partition lambda(parts);
            PAdicConfig cfg(p_opt, m_opt);
            CaseRealization real(tag, (int)parts.size());
            ValuationHistogram h = valuation_histogram(real, lambda, cfg);
            doc["command"] = "oracle";
            doc["histogram"] = histogram_json(h);
            doc["series"] = series_json(histogram_series(h), order_opt);
            if (tag == CaseTag::symmetric_oracle_only) {
                doc["match"] = "no closed form for this case";
            } else {
                auto rep = oracle_match(SphericalCase(tag, (int)parts.size()), lambda, cfg);
                doc["match"] = json{{"pass", rep.pass},
                                    {"fitted_constant", to_string(rep.fitted_constant)},
                                    {"compared", rep.compared},
                                    {"matched_nonzero", rep.matched_nonzero},
                                    {"tail", to_string(rep.tail)},
                                    {"detail", rep.detail}};
            }
        } else if (*hck) {
            command = "hecke";
            auto parts = parse_int_list(lambda_opt);
            auto rep = hecke_eigen_check(hecke_case_from_name(case_name_opt), Partition(parts),
                                         PAdicConfig(p_opt, m_opt));
            doc["command"] = "hecke";
            doc["case"] = case_name_opt;
            doc["lambda"] = parts;
            json eig = json::array();
            for (const auto& [coef, expo] : rep.eigenvalue) eig.push_back({to_string(coef), expo});
            doc["eigenvalue"] = eig;
            doc["compared"] = rep.compared;
            doc["matched_nonzero"] = rep.matched_nonzero;
            doc["pass"] = rep.pass;
            doc["detail"] = rep.detail;
            if (!rep.pass) code = 1;
        } else if (*tate) {
            command = "tate";
            RatFunc expect = tate_gamma_reference(p_opt);
            RatFunc g1 = gamma_extract(StepFunction::indicator_ball(p_opt, 0, 2, 0));
            RatFunc g2 = gamma_extract(StepFunction::indicator_units(p_opt, 0, 2));
            RatFunc g3 = gamma_extract(StepFunction::indicator_ball(p_opt, 0, 2, 1));
            auto names = u_names(1);
            names[1] = "u";
            bool same = g1 == g2 && g2 == g3 && g1 == expect;
            doc["command"] = "tate";
            doc["p"] = p_opt;
            doc["gamma"] = render_ratfunc(g1, names);
            doc["gamma_reference"] = render_ratfunc(tate_gamma_reference(), names);
            doc["independent"] = same ? "pass" : "fail";
            StepFunction f = StepFunction::indicator_units(p_opt, 1, 1);
            doc["involution"] =
                fourier_finite(fourier_finite(f)) == f.reflected() ? "pass" : "fail";
            json scal = json::array();
            bool scal_ok = true;
            for (int m = 0; m <= 2; ++m) {
                auto r = scaling_check(PVContext{1, {1}, 1}, m);
                scal.push_back({{"m", m}, {"pass", r.pass}});
                scal_ok = scal_ok && r.pass;
            }
            doc["scaling"] = scal;
            if (!same || !scal_ok) code = 1;
        } else if (*self) {
            command = "selftest";
            int failures = 0;
            doc["command"] = "selftest";
            doc["checks"] = selftest_battery(failures);
            doc["failures"] = failures;
            if (failures > 0) code = 1;
        }
    } catch (const NoClosedForm& e) {
        json err{{"schema", 1}, {"error", std::string("usage: ") + e.what()}};
        return {2, err.dump(2) + "\n"};
    } catch (const BadLength& e) {
        json err{{"schema", 1}, {"error", std::string("usage: ") + e.what()}};
        return {2, err.dump(2) + "\n"};
    } catch (const std::invalid_argument& e) {
        json err{{"schema", 1}, {"error", std::string("usage: ") + e.what()}};
        return {2, err.dump(2) + "\n"};
    } catch (const MismatchBeyondTail& e) {
        json err{{"schema", 1}, {"error", std::string("mismatch: ") + e.what()}};
        return {1, err.dump(2) + "\n"};
    } catch (const CosetDecompositionFailure& e) {
        json err{{"schema", 1}, {"error", std::string("mismatch: ") + e.what()}};
        return {1, err.dump(2) + "\n"};
    } catch (const std::exception& e) {
        json err{{"schema", 1}, {"error", e.what()}};
        return {2, err.dump(2) + "\n"};
    }

    std::string text = doc.dump(2) + "\n";
    std::string note;
    code = apply_fixture(fx, command, canonical_args_string(args), text, code, note);
    if (!note.empty()) {
        doc["fixture"] = note;
        text = doc.dump(2) + "\n";
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << text;
    }
    return {code, text};
}

} // namespace padspher
