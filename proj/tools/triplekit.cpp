// triplekit: command-line front end for the JB*-triple toolkit.
// Exit codes: 0 pass, 1 check failure, 2 usage or input error.

#include <iostream>

#include <CLI11.hpp>

#include "triplekit/configurations.hpp"
#include "triplekit/json_io.hpp"
#include "triplekit/peirce.hpp"
#include "triplekit/suites.hpp"

using namespace triplekit;

namespace {

int emit(const njson& j, bool ok) {
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

GaussianRational rational_from_json(const njson& j) {
    if (j.is_array() && j.size() == 2)
        return GaussianRational(Rational(j[0].get<std::string>()),
                                Rational(j[1].get<std::string>()));
    return GaussianRational(Rational(j.get<std::string>()));
}

njson element_report(const AtomicElement& e) {
    njson j;
    j["norm"] = sum_norm(e);
    j["coord_norm"] = coord_norm(e);
    const double n = coord_norm(e);
    j["tripotent"] = n > 0 && is_tripotent(e);
    if (j["tripotent"].get<bool>()) {
        const TripotentCert cert = certify_tripotent(e);
        j["cube_residual"] = cert.cube_residual;
        j["peirce_dims"] = cert.peirce_dims;
        j["rank"] = cert.rank;
        j["minimal"] = cert.minimal;
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triplekit: finite-dimensional JB*-triples, truncations, and their preservers"};
    app.require_subcommand(1);

    // shared options
    uint64_t seed = 2024;
    double tol = 1e-9;
    bool tol_set = false;
    int trials = 0;
    std::string out_path;

    // ---- suite ----
    auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name;
    suite_cmd->add_option("name", suite_name, "one of: all, " + [] {
                             std::string s;
                             for (const auto& n : suite_names()) s += n + " ";
                             return s;
                         }())
        ->required();
    suite_cmd->add_option("--seed", seed, "rng seed");
    suite_cmd->add_option("--tol", tol, "override every threshold")->each([&](const std::string&) {
        tol_set = true;
    });
    suite_cmd->add_option("--trials", trials, "override the per-suite trial count");
    suite_cmd->add_option("--out", out_path, "write the JSON report to a file");

    // ---- element ----
    auto* element_cmd = app.add_subcommand("element", "inspect an element file");
    std::string in_a, in_b;
    auto* element_inspect = element_cmd->add_subcommand("inspect", "norms and tripotent data");
    element_inspect->add_option("file", in_a)->required();
    auto* element_range = element_cmd->add_subcommand("range", "range tripotent");
    element_range->add_option("file", in_a)->required();
    auto* element_spectral = element_cmd->add_subcommand("spectral", "spectral resolution");
    element_spectral->add_option("file", in_a)->required();

    // ---- tripotent / peirce ----
    auto* tripotent_cmd = app.add_subcommand("tripotent", "certify a tripotent");
    tripotent_cmd->add_option("file", in_a)->required();
    auto* peirce_cmd = app.add_subcommand("peirce", "Peirce decomposition dimensions");
    peirce_cmd->add_option("file", in_a)->required();

    // ---- spectral / range ----
    auto* spectral_cmd = app.add_subcommand("spectral", "spectral resolution of an element");
    spectral_cmd->add_option("file", in_a)->required();
    auto* range_cmd = app.add_subcommand("range", "range tripotent of an element");
    range_cmd->add_option("file", in_a)->required();

    // ---- trunc / annih / ttp ----
    auto* trunc_cmd = app.add_subcommand("trunc", "truncation checks");
    auto* trunc_check = trunc_cmd->add_subcommand("check", "is a a truncation of b (and back)?");
    trunc_check->add_option("a", in_a)->required();
    trunc_check->add_option("b", in_b)->required();
    auto* annih_cmd = app.add_subcommand("annih", "inner quadratic annihilator");
    annih_cmd->add_option("file", in_a)->required();
    auto* ttp_cmd = app.add_subcommand("ttp", "triple transition pseudo-probability ttp(e,v)");
    ttp_cmd->add_option("e", in_a)->required();
    ttp_cmd->add_option("v", in_b)->required();

    // ---- config ----
    auto* config_cmd = app.add_subcommand("config", "quadrangle/trangle tools");
    auto* config_validate = config_cmd->add_subcommand("validate", "validate a configuration");
    config_validate->add_option("file", in_a)->required();
    auto* config_combo = config_cmd->add_subcommand("combo", "constrained combination tripotent");
    config_combo->add_option("file", in_a)->required();

    // ---- preserver ----
    auto* pres_cmd = app.add_subcommand("preserver", "truncation preservers");
    auto* pres_synth = pres_cmd->add_subcommand("synth", "synthesize the block operator");
    pres_synth->add_option("spec", in_a)->required();
    pres_synth->add_option("--out", out_path);
    auto* pres_verify = pres_cmd->add_subcommand("verify", "sample the truncation relation");
    pres_verify->add_option("operator", in_a)->required();
    int verify_trials = 200;
    pres_verify->add_option("--trials", verify_trials);
    pres_verify->add_option("--seed", seed);
    auto* pres_decompose = pres_cmd->add_subcommand("decompose", "recover the canonical form");
    pres_decompose->add_option("operator", in_a)->required();
    pres_decompose->add_option("--out", out_path);
    pres_decompose->add_option("--seed", seed);

    // ---- certify ----
    auto* cert_cmd = app.add_subcommand("certify", "exact rational certificates");
    auto* cert_quad = cert_cmd->add_subcommand("lemma-quadrangle", "combination lemma, quadrangle");
    cert_quad->add_option("points", in_a, "optional JSON points file");
    auto* cert_tra = cert_cmd->add_subcommand("lemma-trangle", "combination lemma, trangle");
    cert_tra->add_option("points", in_a, "optional JSON points file");
    auto* cert_wild = cert_cmd->add_subcommand("wild-demo", "Q-linear wild map demo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*suite_cmd) {
            RunConfig cfg;
            cfg.seed = seed;
            if (tol_set) cfg.tol = tol;
            if (trials > 0) cfg.trials = trials;
            njson out;
            bool ok = true;
            if (suite_name == "all") {
                out = njson::array();
                for (const auto& n : suite_names()) {
                    const SuiteReport r = run_suite(n, cfg);
                    ok = ok && r.pass();
                    out.push_back(r.to_json());
                }
            } else {
                const auto& names = suite_names();
                if (std::find(names.begin(), names.end(), suite_name) == names.end()) {
                    std::cerr << "unknown suite '" << suite_name << "'\n";
                    return 2;
                }
                const SuiteReport r = run_suite(suite_name, cfg);
                ok = r.pass();
                out = r.to_json();
            }
            if (!out_path.empty()) save_json_file(out_path, out);
            return emit(out, ok);
        }

        if (*element_inspect) {
            return emit(element_report(any_element_from_json(load_json_file(in_a))), true);
        }
        if (*element_range || *range_cmd) {
            const AtomicElement a = any_element_from_json(load_json_file(in_a));
            return emit(to_json(range_tripotent(a)), true);
        }
        if (*element_spectral || *spectral_cmd) {
            const AtomicElement a = any_element_from_json(load_json_file(in_a));
            const SpectralResolution res = spectral_resolve(a);
            njson j;
            njson pairs = njson::array();
            for (int i = 0; i < res.size(); ++i) {
                njson p;
                p["lambda"] = res.lambdas[i];
                p["tripotent"] = to_json(res.tripotents[i]);
                pairs.push_back(p);
            }
            j["pairs"] = pairs;
            return emit(j, true);
        }
        if (*tripotent_cmd || *peirce_cmd) {
            const AtomicElement a = any_element_from_json(load_json_file(in_a));
            return emit(element_report(a), true);
        }
        if (*trunc_check) {
            const AtomicElement a = any_element_from_json(load_json_file(in_a));
            const AtomicElement b = any_element_from_json(load_json_file(in_b));
            njson j;
            j["a_truncation_of_b"] = is_truncation(a, b);
            j["b_truncation_of_a"] = is_truncation(b, a);
            return emit(j, true);
        }
        if (*annih_cmd) {
            const Annihilator ann = annihilator(any_element_from_json(load_json_file(in_a)));
            njson j;
            j["complex_dim"] = ann.subspace.real_dim() / 2;
            j["complex_codim"] = ann.complex_codim;
            j["complex_closed"] = ann.subspace.complex_flag;
            return emit(j, true);
        }
        if (*ttp_cmd) {
            const AtomicElement e = any_element_from_json(load_json_file(in_a));
            const AtomicElement v = any_element_from_json(load_json_file(in_b));
            const cx c = ttp(e, v);
            njson j;
            j["ttp"] = njson::array({c.real(), c.imag()});
            return emit(j, true);
        }
        if (*config_validate || *config_combo) {
            const njson j = load_json_file(in_a);
            ConfigReport report;
            Element combo = Element::zero(FactorDescriptor::type1(1, 1));
            bool has_combo = false;
            if (j.contains("quadrangle")) {
                const auto& qj = j.at("quadrangle");
                Quadrangle q{element_from_json(qj.at(0)), element_from_json(qj.at(1)),
                             element_from_json(qj.at(2)), element_from_json(qj.at(3))};
                report = validate_quadrangle(q);
                if (*config_combo) {
                    const auto& c = j.at("coeffs");
                    auto coef = [&](int i) {
                        return cx(c.at(i)[0].get<double>(), c.at(i)[1].get<double>());
                    };
                    combo = quadrangle_combo(q, coef(0), coef(1), coef(2), coef(3));
                    has_combo = true;
                }
            } else if (j.contains("trangle")) {
                const auto& tj = j.at("trangle");
                Trangle t{element_from_json(tj.at(0)), element_from_json(tj.at(1)),
                          element_from_json(tj.at(2))};
                report = validate_trangle(t);
                if (*config_combo) {
                    const auto& c = j.at("coeffs");
                    auto coef = [&](int i) {
                        return cx(c.at(i)[0].get<double>(), c.at(i)[1].get<double>());
                    };
                    combo = trangle_combo(t, coef(0), coef(1), coef(2));
                    has_combo = true;
                }
            } else {
                std::cerr << "config file needs a 'quadrangle' or 'trangle' entry\n";
                return 2;
            }
            njson out;
            njson checks = njson::array();
            for (const auto& c : report.checks) {
                njson cj;
                cj["relation"] = c.name;
                cj["residual"] = c.residual;
                cj["pass"] = c.pass;
                checks.push_back(cj);
            }
            out["checks"] = checks;
            out["pass"] = report.pass;
            if (has_combo) out["combo"] = to_json(combo);
            return emit(out, report.pass);
        }
        if (*pres_synth) {
            const PreserverSpec spec = preserver_spec_from_json(load_json_file(in_a));
            const RealLinearOperator A = synthesize(spec);
            const njson j = to_json(A);
            if (!out_path.empty()) save_json_file(out_path, j);
            return emit(j, true);
        }
        if (*pres_verify) {
            const RealLinearOperator A = operator_from_json(load_json_file(in_a));
            const VerifyReport rep = verify_preserves_truncations(A, verify_trials, seed);
            return emit(to_json(rep), rep.pass);
        }
        if (*pres_decompose) {
            const RealLinearOperator A = operator_from_json(load_json_file(in_a));
            const PreserverSpec spec = decompose(A, 1e-8, seed);
            const njson j = to_json(spec);
            if (!out_path.empty()) save_json_file(out_path, j);
            return emit(j, true);
        }
        if (*cert_quad) {
            std::vector<std::array<GaussianRational, 4>> pts;
            if (!in_a.empty()) {
                for (const auto& pj : load_json_file(in_a).at("points")) {
                    std::array<GaussianRational, 4> p;
                    for (int i = 0; i < 4; ++i) p[i] = rational_from_json(pj.at(i));
                    pts.push_back(p);
                }
            } else {
                pts = default_quadrangle_points();
            }
            const LemmaCertificate cert = certify_quadrangle_lemma(pts);
            return emit(to_json(cert), cert.all_ok);
        }
        if (*cert_tra) {
            std::vector<std::array<GaussianRational, 3>> pts;
            if (!in_a.empty()) {
                for (const auto& pj : load_json_file(in_a).at("points")) {
                    std::array<GaussianRational, 3> p;
                    for (int i = 0; i < 3; ++i) p[i] = rational_from_json(pj.at(i));
                    pts.push_back(p);
                }
            } else {
                pts = default_trangle_points();
            }
            const LemmaCertificate cert = certify_trangle_lemma(pts);
            return emit(to_json(cert), cert.all_ok);
        }
        if (*cert_wild) {
            const WildDemoReport rep = wild_additive_demo();
            return emit(to_json(rep),
                        rep.preserved_both_directions && rep.linearity_violation_found);
        }
    } catch (const triple_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
