#include "triplekit/suites.hpp"

#include <Eigen/Eigenvalues>

#include "triplekit/configurations.hpp"
#include "triplekit/factors.hpp"
#include "triplekit/peirce.hpp"

namespace triplekit {

bool SuiteReport::pass() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

njson SuiteReport::to_json() const {
    njson j;
    j["suite"] = suite;
    j["seed"] = seed;
    njson cs = njson::array();
    for (const auto& c : checks) {
        njson cj;
        cj["name"] = c.name;
        cj["residual"] = c.residual;
        cj["threshold"] = c.threshold;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        cs.push_back(cj);
    }
    j["checks"] = cs;
    if (!error.empty()) j["error"] = error;
    j["pass"] = pass();
    return j;
}

namespace {

struct Ctx {
    RunConfig cfg;
    SuiteReport rep;

    double thr(double def) const { return cfg.tol ? *cfg.tol : def; }
    int count(int def) const { return cfg.trials ? *cfg.trials : def; }

    void add(const std::string& name, double residual, double threshold,
             const std::string& note = "") {
        rep.checks.push_back({name, residual, threshold, residual <= threshold, note});
    }
    void add_bool(const std::string& name, bool ok, const std::string& note = "") {
        rep.checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok, note});
    }
};

const std::vector<FactorDescriptor>& kind_fixtures() {
    static const std::vector<FactorDescriptor> fs = {
        FactorDescriptor::type1(3, 2), FactorDescriptor::type2(4), FactorDescriptor::type3(3),
        FactorDescriptor::spin(5)};
    return fs;
}

// ---- 1. axioms ------------------------------------------------------------

void suite_axioms(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed);
    int stream = 0;
    for (const auto& f : kind_fixtures()) {
        const int n = ctx.count(500);
        const JordanReport jr = check_jordan_identity(f, n, root.stream(stream++).next_u64());
        ctx.add("jordan identity " + to_string(f), jr.max_residual, ctx.thr(1e-9));

        SplitRng rng = root.stream(stream++);
        double worst = 0.0;
        for (int t = 0; t < n; ++t) {
            const Element x = random_element(rng, f);
            const double nx = factor_norm(x);
            if (nx < 1e-6) continue;
            const double lhs = factor_norm(triple_product(x, x, x));
            worst = std::max(worst, std::abs(lhs - nx * nx * nx) / (nx * nx * nx));
        }
        ctx.add("gelfand-naimark " + to_string(f), worst, ctx.thr(1e-8));
    }
}

// ---- 2. peirce ------------------------------------------------------------

double eigenvalue_grid_residual(const RMat& l) {
    Eigen::EigenSolver<RMat> es(l, false);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const auto v = es.eigenvalues()(i);
        const double off =
            std::min({std::abs(v.real()), std::abs(v.real() - 0.5), std::abs(v.real() - 1.0)});
        worst = std::max(worst, std::max(off, std::abs(v.imag())));
    }
    return worst;
}

void suite_peirce(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed + 1);
    int stream = 0;
    for (const auto& f : kind_fixtures()) {
        double grid = 0.0, leak = 0.0, sum_res = 0.0;
        const int n = ctx.count(100);
        for (int t = 0; t < n; ++t) {
            SplitRng rng = root.stream(stream++);
            const Element e = random_tripotent(rng, f);
            const AtomicElement ea = AtomicElement::lift(e);
            const RealLinearOperator l = L_operator(ea, ea);
            grid = std::max(grid, eigenvalue_grid_residual(l.matrix));
            const PeirceDecomposition dec = peirce_decompose(ea);
            const RMat psum =
                dec.P(0).matrix + dec.P(1).matrix + dec.P(2).matrix;
            sum_res = std::max(
                sum_res, (psum - RMat::Identity(psum.rows(), psum.cols())).cwiseAbs().maxCoeff());

            // Peirce rules on one random index triple per tripotent
            const int i = rng.uniform_int(0, 2), jj = rng.uniform_int(0, 2),
                      k = rng.uniform_int(0, 2);
            const AtomicElement xi = dec.P(i).apply(random_element(rng, ea.triple));
            const AtomicElement xj = dec.P(jj).apply(random_element(rng, ea.triple));
            const AtomicElement xk = dec.P(k).apply(random_element(rng, ea.triple));
            const AtomicElement prod = triple_product(xi, xj, xk);
            const double scale =
                std::max(1.0, coord_norm(xi) * coord_norm(xj) * coord_norm(xk));
            const int g = i - jj + k;
            double r;
            if (g >= 0 && g <= 2) r = coord_norm(prod - dec.P(g).apply(prod)) / scale;
            else r = coord_norm(prod) / scale;
            leak = std::max(leak, r);

            // {E0, E2, E} = 0 = {E2, E0, E}
            const AtomicElement x0 = dec.P(0).apply(random_element(rng, ea.triple));
            const AtomicElement x2 = dec.P(2).apply(random_element(rng, ea.triple));
            const AtomicElement y = random_element(rng, ea.triple);
            const double s2 = std::max(1.0, coord_norm(x0) * coord_norm(x2) * coord_norm(y));
            leak = std::max(leak, coord_norm(triple_product(x0, x2, y)) / s2);
            leak = std::max(leak, coord_norm(triple_product(x2, x0, y)) / s2);
        }
        ctx.add("L(e,e) spectrum on {0,1/2,1} " + to_string(f), grid, ctx.thr(1e-6));
        ctx.add("peirce rules leakage " + to_string(f), leak, ctx.thr(1e-9));
        ctx.add("P0+P1+P2 = id " + to_string(f), sum_res, ctx.thr(1e-10));
    }
}

// ---- 3. theorem-minimal ---------------------------------------------------

void suite_theorem_minimal(Ctx& ctx) {
    const std::vector<FactorDescriptor> fs = {
        FactorDescriptor::type1(3, 3), FactorDescriptor::type3(3), FactorDescriptor::type2(5),
        FactorDescriptor::spin(5)};
    SplitRng root(ctx.cfg.seed + 2);
    const int n = ctx.count(200);
    const int probes = 200;

    int minimal_failures = 0;
    int probes_run = 0;
    for (int t = 0; t < n; ++t) {
        SplitRng rng = root.stream(t);
        const FactorDescriptor& f = fs[t % fs.size()];
        const Element e = random_minimal_tripotent(rng, f);
        const AtomicElement a = cx(rng.uniform(0.5, 4.0), 0) * AtomicElement::lift(e);
        const MaxAnnihilatorResult res = is_max_annihilator(a, probes, rng.next_u64());
        probes_run += res.probes_run;
        if (!res.is_max) ++minimal_failures;
    }
    ctx.add("minimal multiples: maximal annihilator failures", minimal_failures, 0.0,
            std::to_string(probes_run) + " probes found no strict extension");

    int witness_failures = 0, min_gap = 1 << 20;
    double worst_defect = 0.0;
    for (int t = 0; t < n; ++t) {
        SplitRng rng = root.stream(100000 + t);
        const FactorDescriptor& f = fs[t % fs.size()];
        AtomicElement a = AtomicElement::lift(random_element(rng, f));
        if (spectral_resolve(a).size() < 2) {  // generic elements have full rank
            --t;
            continue;
        }
        const MaxAnnihilatorResult res = is_max_annihilator(a, 0, rng.next_u64());
        if (res.is_max || !res.witness) ++witness_failures;
        else {
            min_gap = std::min(min_gap, res.codim_a - res.codim_witness);
            worst_defect = std::max(worst_defect, res.inclusion_defect);
        }
    }
    ctx.add("rank>=2: witness construction failures", witness_failures, 0.0);
    ctx.add_bool("rank>=2: codimension gap >= 1", min_gap >= 1,
                 "smallest gap " + std::to_string(min_gap));
    ctx.add("rank>=2: witness inclusion principal angle", worst_defect, ctx.thr(1e-8));
}

// ---- 4. lemma-configs -----------------------------------------------------

void suite_lemma_configs(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed + 3);
    const int n = ctx.count(200);

    const Quadrangle q = standard_quadrangle(FactorDescriptor::type1(2, 2));
    double cube = 0.0, ortho = 0.0;
    int minimal_failures = 0;
    SplitRng qrng = root.stream(0);
    for (int t = 0; t < n; ++t) {
        const auto [a, b, c, d] = sample_quadrangle_coeffs(qrng);
        const Element v = a * q.u1 + b * q.u2 + c * q.u4 + d * q.u3;
        const Element vt = std::conj(d) * q.u1 + (-std::conj(c)) * q.u2 +
                           (-std::conj(b)) * q.u4 + std::conj(a) * q.u3;
        cube = std::max(cube, coord_norm(triple_product(v, v, v) - v));
        ortho = std::max(ortho, coord_norm(triple_product(v, v, vt)));
        if (!is_minimal(v, 1e-8)) ++minimal_failures;
    }
    ctx.add("quadrangle combos: ||{v,v,v}-v||", cube, ctx.thr(1e-10));
    ctx.add("quadrangle combos: ||{v,v,vt}||", ortho, ctx.thr(1e-10));
    ctx.add("quadrangle combos: non-minimal count", minimal_failures, 0.0);

    const Trangle tr = standard_trangle(FactorDescriptor::type3(2));
    double tcube = 0.0;
    int tmin_failures = 0;
    SplitRng trng = root.stream(1);
    for (int t = 0; t < n; ++t) {
        const auto [a, b, d] = sample_trangle_coeffs(trng);
        const Element v = a * tr.w1 + b * tr.u + d * tr.w2;
        tcube = std::max(tcube, coord_norm(triple_product(v, v, v) - v));
        if (!is_minimal(v, 1e-8)) ++tmin_failures;
    }
    ctx.add("trangle combos: ||{v,v,v}-v||", tcube, ctx.thr(1e-10));
    ctx.add("trangle combos: non-minimal count", tmin_failures, 0.0);
    ctx.add("trangle identity ||u - 2{w1,u,w2}||",
            coord_norm(tr.u - 2.0 * triple_product(tr.w1, tr.u, tr.w2)), ctx.thr(1e-10));

    const LemmaCertificate qc = certify_quadrangle_lemma(default_quadrangle_points());
    ctx.add_bool("exact quadrangle certificate (" + std::to_string(qc.points.size()) +
                     " rational points, residual exactly 0)",
                 qc.all_ok && qc.points.size() >= 10);
    const LemmaCertificate tc = certify_trangle_lemma(default_trangle_points());
    ctx.add_bool("exact trangle certificate (" + std::to_string(tc.points.size()) +
                     " rational points, residual exactly 0)",
                 tc.all_ok && tc.points.size() >= 10);
}

// ---- 5. paper-example -----------------------------------------------------

void suite_paper_example(Ctx& ctx) {
    const FactorDescriptor f = FactorDescriptor::type1(2, 2);
    ExactElement e = ExactElement::zero(f), w = ExactElement::zero(f),
                 e22 = ExactElement::zero(f);
    e.coords[0] = GaussianRational(1);
    w.coords[1] = GaussianRational(1);
    w.coords[2] = GaussianRational(1);
    e22.coords[3] = GaussianRational(1);
    ctx.add_bool("exact {e,w,e} = 0", exact_triple_product(e, w, e).is_zero());
    ctx.add_bool("exact {w,e,w} = E22", (exact_triple_product(w, e, w) - e22).is_zero());

    // annihilator asymmetry: w in ker Q(e) but e not in ker Q(w)
    const Element ef = e.to_double(), wf = w.to_double();
    const Subspace ker_qe = kernel(Q_operator(ef));
    const Subspace ker_qw = kernel(Q_operator(wf));
    ctx.add_bool("w in ann(e)", ker_qe.contains(AtomicElement::lift(wf)));
    ctx.add_bool("e not in ann(w)", !ker_qw.contains(AtomicElement::lift(ef)));
}

// ---- 6. theorem-roundtrip -------------------------------------------------

void suite_theorem_roundtrip(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed + 6);
    const int specs = ctx.count(50);
    const int verify_trials = 500;
    int verify_failures = 0, sigma_failures = 0, flag_failures = 0;
    double gamma_err = 0.0, recon_err = 0.0, verify_resid = 0.0;
    std::string first_error;

    for (int s = 0; s < specs; ++s) {
        SplitRng rng = root.stream(s);
        try {
            const PreserverSpec spec = random_preserver_spec(rng);
            const RealLinearOperator A = synthesize(spec);
            const VerifyReport vr =
                verify_preserves_truncations(A, verify_trials, rng.next_u64());
            if (!vr.pass) ++verify_failures;
            verify_resid = std::max(verify_resid, vr.max_residual);

            const PreserverSpec dec = decompose(A, 1e-8, rng.next_u64());
            if (dec.sigma != spec.sigma) ++sigma_failures;
            for (int k = 0; k < spec.source.parts(); ++k) {
                if (dec.isos[k].flag != spec.isos[k].flag) ++flag_failures;
                gamma_err = std::max(gamma_err, std::abs(dec.gammas[k] - spec.gammas[k]) /
                                                    spec.gammas[k]);
            }
            const RealLinearOperator rebuilt = synthesize(dec);
            recon_err = std::max(recon_err, (rebuilt.matrix - A.matrix).norm());
        } catch (const triple_error& err) {
            ++verify_failures;
            if (first_error.empty()) first_error = err.what();
        }
    }
    ctx.add("preserver specs failing verify/decompose", verify_failures, 0.0, first_error);
    ctx.add("sigma recovery failures", sigma_failures, 0.0);
    ctx.add("flag recovery failures", flag_failures, 0.0);
    ctx.add("gamma max relative error", gamma_err, ctx.thr(1e-8));
    ctx.add("||synthesize(decompose(A)) - A|| max", recon_err, ctx.thr(1e-8));
    ctx.add("max truncation residual on passing trials", verify_resid, ctx.thr(1e-8),
            std::to_string(specs) + " specs x " + std::to_string(verify_trials) +
                " positive/inverse/negative trials");
}

// ---- 7. transport ---------------------------------------------------------

void suite_transport(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed + 7);
    const int pairs = ctx.count(100);
    int collinear_failures = 0, orthogonal_failures = 0;
    double peirce1_defect = 0.0, peirce2_defect = 0.0;

    std::vector<PreserverSpec> specs;
    std::vector<RealLinearOperator> ops;
    for (int s = 0; s < 10; ++s) {
        SplitRng rng = root.stream(777 + s);
        specs.push_back(random_preserver_spec(rng));
        ops.push_back(synthesize(specs.back()));
    }

    auto pick_factor = [&](SplitRng& rng, const AtomicTriple& t, auto&& pred) {
        std::vector<int> ok;
        for (int k = 0; k < t.parts(); ++k)
            if (pred(t.factors[k])) ok.push_back(k);
        return ok.empty() ? -1 : ok[rng.uniform_int(0, static_cast<int>(ok.size()) - 1)];
    };

    int done = 0;
    for (int t = 0; done < pairs; ++t) {
        SplitRng rng = root.stream(t);
        const auto& A = ops[t % ops.size()];
        const int k = pick_factor(rng, A.domain, has_collinear_minimal_pair);
        if (k < 0) continue;
        const auto [w1, w2] = random_collinear_minimal_pair(rng, A.domain.factors[k]);
        const AtomicElement e1 = AtomicElement::zero(A.domain).with_part(k, w1);
        const AtomicElement e2 = AtomicElement::zero(A.domain).with_part(k, w2);
        const AtomicElement f1 = induced_minimal_map(A, e1).second;
        const AtomicElement f2 = induced_minimal_map(A, e2).second;
        if (!are_collinear(f1, f2, 1e-7) || !is_minimal(f1) || !is_minimal(f2))
            ++collinear_failures;
        ++done;
    }
    ctx.add("collinear pairs transported (" + std::to_string(done) + ")", collinear_failures,
            0.0);

    done = 0;
    for (int t = 0; done < pairs; ++t) {
        SplitRng rng = root.stream(200000 + t);
        const auto& A = ops[t % ops.size()];
        const int k =
            pick_factor(rng, A.domain, [](const FactorDescriptor& f) { return f.max_rank() >= 2; });
        if (k < 0) continue;
        const auto [w1, w2] = random_orthogonal_minimal_pair(rng, A.domain.factors[k]);
        const AtomicElement e1 = AtomicElement::zero(A.domain).with_part(k, w1);
        const AtomicElement e2 = AtomicElement::zero(A.domain).with_part(k, w2);
        const AtomicElement f1 = induced_minimal_map(A, e1).second;
        const AtomicElement f2 = induced_minimal_map(A, e2).second;
        if (!are_orthogonal(f1, f2, 1e-7)) ++orthogonal_failures;
        ++done;
    }
    ctx.add("orthogonal pairs transported (" + std::to_string(done) + ")", orthogonal_failures,
            0.0);

    // Peirce-1 transport for minimal e, Peirce-2 transport for rank-2 e
    for (int t = 0; t < 12; ++t) {
        SplitRng rng = root.stream(300000 + t);
        const auto& A = ops[t % ops.size()];
        const int k = rng.uniform_int(0, A.domain.parts() - 1);
        const Element w = random_minimal_tripotent(rng, A.domain.factors[k]);
        const AtomicElement e = AtomicElement::zero(A.domain).with_part(k, w);
        const AtomicElement re = range_tripotent(A.apply(e));
        const Subspace lhs = image_subspace(A, peirce_decompose(e).E(1));
        const Subspace rhs = peirce_decompose(re).E(1);
        peirce1_defect = std::max(
            peirce1_defect,
            std::max(subspace_inclusion_defect(lhs, rhs), subspace_inclusion_defect(rhs, lhs)));

        const int k2 = pick_factor(rng, A.domain,
                                   [](const FactorDescriptor& f) { return f.max_rank() >= 2; });
        if (k2 < 0) continue;
        const auto [w1, w2] = random_orthogonal_minimal_pair(rng, A.domain.factors[k2]);
        const AtomicElement e2 = AtomicElement::zero(A.domain).with_part(k2, w1 + w2);
        const AtomicElement re2 = range_tripotent(A.apply(e2));
        const Subspace lhs2 = image_subspace(A, peirce_decompose(e2).E(2));
        const Subspace rhs2 = peirce_decompose(re2).E(2);
        peirce2_defect = std::max(
            peirce2_defect,
            std::max(subspace_inclusion_defect(lhs2, rhs2), subspace_inclusion_defect(rhs2, lhs2)));
    }
    ctx.add("A(E1(e)) = F1(r(A(e))) principal angle", peirce1_defect, ctx.thr(1e-8));
    ctx.add("A(E2(e)) = F2(r(A(e))) principal angle (rank-2 e)", peirce2_defect, ctx.thr(1e-8));
}

// ---- 8. ttp ---------------------------------------------------------------

void suite_ttp(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed + 8);
    const int pairs = ctx.count(100);
    double sym = 0.0;
    const std::vector<FactorDescriptor> fs = {
        FactorDescriptor::type1(3, 3), FactorDescriptor::type3(3), FactorDescriptor::type2(4),
        FactorDescriptor::spin(5)};
    for (int t = 0; t < pairs; ++t) {
        SplitRng rng = root.stream(t);
        const FactorDescriptor& f = fs[t % fs.size()];
        const Element e = random_minimal_tripotent(rng, f);
        const Element v = random_minimal_tripotent(rng, f);
        sym = std::max(sym, std::abs(ttp(e, v) - std::conj(ttp(v, e))));
    }
    ctx.add("ttp(e,v) = conj(ttp(v,e))", sym, ctx.thr(1e-10));

    double transport = 0.0;
    for (int t = 0; t < pairs; ++t) {
        SplitRng rng = root.stream(100000 + t);
        PreserverSpec spec = random_preserver_spec(rng);
        const RealLinearOperator A = synthesize(spec);
        const int k = rng.uniform_int(0, spec.source.parts() - 1);
        const Element e = random_minimal_tripotent(rng, spec.source.factors[k]);
        const Element v = random_minimal_tripotent(rng, spec.source.factors[k]);
        const AtomicElement ea = AtomicElement::zero(spec.source).with_part(k, e);
        const AtomicElement va = AtomicElement::zero(spec.source).with_part(k, v);
        const cx source = ttp(ea, va);
        const cx target = ttp(induced_minimal_map(A, ea).second, induced_minimal_map(A, va).second);
        const cx want = spec.isos[k].flag == IsoFlag::linear ? source : std::conj(source);
        transport = std::max(transport, std::abs(target - want));
    }
    ctx.add("ttp preserved (linear) / reversed (conjugate) under preservers", transport,
            ctx.thr(1e-8));
}

// ---- 9. hilbert -----------------------------------------------------------

void suite_hilbert(Ctx& ctx) {
    SplitRng root(ctx.cfg.seed + 9);
    const FactorDescriptor h = FactorDescriptor::type1(1, 4);
    const int n = ctx.count(500);
    int equivalence_failures = 0;
    for (int t = 0; t < n; ++t) {
        SplitRng rng = root.stream(t);
        const Element x = random_element(rng, h);
        Element y = random_element(rng, h);
        if (t % 2 == 0) {
            // plant a truncation pair: y = x + z with z Euclidean-orthogonal to x
            const cx c = x.coords.dot(y.coords) / x.coords.squaredNorm();
            y = Element(h, Vec(x.coords + (y.coords - c * x.coords)));
        }
        const bool trunc = is_truncation(x, y, 1e-9);
        // <y|x> = <x|x> in the convention <u|v> = sum u_i conj(v_i)
        const cx yx = x.coords.dot(y.coords);
        const cx xx = x.coords.dot(x.coords);
        const bool inner = std::abs(yx - xx) <= 1e-8 * std::max(1.0, std::abs(xx));
        if (trunc != inner) ++equivalence_failures;
    }
    ctx.add("truncation <=> <y|x> = <x|x> mismatches (" + std::to_string(n) + " samples)",
            equivalence_failures, 0.0);

    double gamma_err = 0.0;
    int flag_failures = 0;
    SplitRng crng = root.stream(900001);
    for (int t = 0; t < 20; ++t) {
        const double gamma = crng.uniform(0.5, 4.0);
        const Mat u = random_unitary(crng, h.n);
        const bool conjugate = crng.uniform() < 0.5;
        const AtomicTriple ht = AtomicTriple::single(h);
        const RealLinearOperator A = build_operator(ht, ht, [&](const AtomicElement& x) {
            Vec v = conjugate ? x.coords.conjugate() : x.coords;
            return AtomicElement(ht, Vec(gamma * (u * v)));
        });
        const HilbertClassification cls = hilbert_case_classify(A, crng.next_u64());
        gamma_err = std::max(gamma_err, std::abs(cls.gamma - gamma) / gamma);
        const IsoFlag want = conjugate ? IsoFlag::conjugate_linear : IsoFlag::linear;
        if (cls.flag != want) ++flag_failures;
    }
    ctx.add("hilbert classification gamma relative error", gamma_err, ctx.thr(1e-10));
    ctx.add("hilbert classification flag failures", flag_failures, 0.0);

    bool rejected = false;
    std::string message;
    try {
        const AtomicTriple c1 = AtomicTriple::single(FactorDescriptor::type1(1, 1));
        hilbert_case_classify(identity_operator(c1));
    } catch (const triple_error& err) {
        rejected = true;
        message = err.what();
    }
    ctx.add_bool("type1(1,1) rejected", rejected, message);
}

// ---- 10. wild-demo --------------------------------------------------------

void suite_wild_demo(Ctx& ctx) {
    const WildDemoReport rep = wild_additive_demo(std::max(100, ctx.count(120)));
    ctx.add_bool("truncation preservation on " + std::to_string(rep.pairs_checked) +
                     " exact pairs (both directions)",
                 rep.preserved_both_directions && rep.pairs_checked >= 100);
    ctx.add_bool("exact R-linearity violation exhibited", rep.linearity_violation_found,
                 rep.violation);
}

}  // namespace

FactorIsomorphism random_factor_isomorphism(SplitRng& rng, const FactorDescriptor& source,
                                            IsoFlag flag) {
    switch (source.kind) {
        case FactorKind::type1: {
            const bool transpose = rng.uniform() < 0.5;
            const int rows = transpose ? source.n : source.m;
            const int cols = transpose ? source.m : source.n;
            Type1Generators g{random_unitary(rng, rows), random_unitary(rng, cols), transpose};
            return make_factor_isomorphism(source, flag, g, rng.next_u64());
        }
        case FactorKind::type2:
        case FactorKind::type3: {
            CongruenceGenerators g{random_unitary(rng, source.n)};
            return make_factor_isomorphism(source, flag, g, rng.next_u64());
        }
        case FactorKind::spin: {
            SpinGenerators g{rng.unit_phase(), random_orthogonal(rng, source.n)};
            return make_factor_isomorphism(source, flag, g, rng.next_u64());
        }
    }
    throw triple_error("random_factor_isomorphism: unknown kind");
}

PreserverSpec random_preserver_spec(SplitRng& rng, int max_factors) {
    static const std::vector<FactorDescriptor> pool = {
        FactorDescriptor::type1(2, 2), FactorDescriptor::type1(2, 3),
        FactorDescriptor::type1(1, 2), FactorDescriptor::type1(1, 3),
        FactorDescriptor::type2(4),    FactorDescriptor::type3(2),
        FactorDescriptor::type3(3),    FactorDescriptor::spin(3),
        FactorDescriptor::spin(4),     FactorDescriptor::spin(5)};
    const int parts = rng.uniform_int(1, max_factors);
    PreserverSpec spec;
    std::vector<FactorDescriptor> sources;
    for (int k = 0; k < parts; ++k)
        sources.push_back(pool[rng.uniform_int(0, static_cast<int>(pool.size()) - 1)]);
    spec.source = AtomicTriple::of(sources);
    spec.sigma.resize(parts);
    for (int k = 0; k < parts; ++k) spec.sigma[k] = k;
    for (int k = parts - 1; k > 0; --k) std::swap(spec.sigma[k], spec.sigma[rng.uniform_int(0, k)]);
    std::vector<FactorDescriptor> targets(parts);
    for (int k = 0; k < parts; ++k) {
        const IsoFlag flag = rng.uniform() < 0.5 ? IsoFlag::linear : IsoFlag::conjugate_linear;
        spec.gammas.push_back(rng.uniform(0.5, 4.0));
        spec.isos.push_back(random_factor_isomorphism(rng, sources[k], flag));
        targets[spec.sigma[k]] = spec.isos[k].target;
    }
    spec.target = AtomicTriple::of(targets);
    return spec;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "axioms",        "peirce",    "theorem-minimal", "lemma-configs", "paper-example",
        "theorem-roundtrip", "transport", "ttp",             "hilbert",       "wild-demo"};
    return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    Ctx ctx;
    ctx.cfg = cfg;
    ctx.rep.suite = name;
    ctx.rep.seed = cfg.seed;
    try {
        if (name == "axioms") suite_axioms(ctx);
        else if (name == "peirce") suite_peirce(ctx);
        else if (name == "theorem-minimal") suite_theorem_minimal(ctx);
        else if (name == "lemma-configs") suite_lemma_configs(ctx);
        else if (name == "paper-example") suite_paper_example(ctx);
        else if (name == "theorem-roundtrip") suite_theorem_roundtrip(ctx);
        else if (name == "transport") suite_transport(ctx);
        else if (name == "ttp") suite_ttp(ctx);
        else if (name == "hilbert") suite_hilbert(ctx);
        else if (name == "wild-demo") suite_wild_demo(ctx);
        else throw triple_error("unknown suite '" + name + "'");
    } catch (const triple_error& err) {
        ctx.rep.error = err.what();
    }
    return ctx.rep;
}

}  // namespace triplekit
