#include "triplekit/truncation.hpp"

#include "triplekit/factors.hpp"
#include "triplekit/peirce.hpp"
#include "triplekit/rng.hpp"

namespace triplekit {

bool is_truncation(const AtomicElement& a, const AtomicElement& b, double tol) {
    require_same_triple(a, b, "is_truncation");
    const AtomicElement aba = triple_product(a, b, a);
    const AtomicElement aaa = triple_product(a, a, a);
    const double na = coord_norm(a), nb = coord_norm(b);
    const double scale = std::max(1.0, na * na * std::max(na, nb));
    const bool direct = coord_norm(aba - aaa) <= tol * scale;
    if (a.is_zero()) return direct;
    // cross-check against P_2(r(a))(b) = a
    const AtomicElement r = range_tripotent(a);
    const AtomicElement lb = triple_product(r, r, b);
    const AtomicElement llb = triple_product(r, r, lb);
    const AtomicElement p2b = (2.0 * llb) - lb;
    const bool via_range = coord_norm(p2b - a) <= std::max(tol, 1e-8) * std::max(1.0, nb + na);
    if (direct != via_range)
        throw triple_error("is_truncation: direct and range-tripotent routes disagree");
    return direct;
}

bool is_truncation(const Element& a, const Element& b, double tol) {
    return is_truncation(AtomicElement::lift(a), AtomicElement::lift(b), tol);
}

Annihilator annihilator(const AtomicElement& a, double tol) {
    if (a.is_zero()) throw triple_error("annihilator: zero input");
    Annihilator ann;
    ann.generator = a;
    ann.subspace = kernel(Q_operator(a), tol);
    if (!ann.subspace.complex_flag)
        throw triple_error("annihilator: kernel is not a complex subspace");
    ann.complex_codim = a.triple.complex_dim() - ann.subspace.real_dim() / 2;
    // second characterization: the kernel of P_2(r(a))
    const AtomicElement r = range_tripotent(a);
    const PeirceDecomposition dec = peirce_decompose(r);
    Subspace ker_p2 = kernel(dec.P(2), tol);
    if (!subspace_equal(ann.subspace, ker_p2, 1e-7))
        throw triple_error("annihilator: ker Q(a) does not match ker P_2(r(a))");
    return ann;
}

Annihilator annihilator(const Element& a, double tol) {
    return annihilator(AtomicElement::lift(a), tol);
}

MaxAnnihilatorResult is_max_annihilator(const AtomicElement& a, int probe_budget, uint64_t seed,
                                        double tol) {
    if (a.is_zero()) throw triple_error("is_max_annihilator: zero input");
    MaxAnnihilatorResult out;
    const Annihilator ann_a = annihilator(a);
    out.codim_a = ann_a.complex_codim;

    const MinimalMultiple mm = is_positive_multiple_of_minimal(a);
    if (mm.is_minimal_multiple) {
        // maximal by the spectral characterization; the probe is a
        // falsification search over random candidates
        SplitRng root(seed);
        for (int p = 0; p < probe_budget; ++p) {
            SplitRng rng = root.stream(p);
            AtomicElement b = random_element(rng, a.triple);
            if (b.is_zero()) continue;
            const Subspace ker_b = kernel(Q_operator(b), 1e-9);
            ++out.probes_run;
            if (ker_b.real_dim() > ann_a.subspace.real_dim() &&
                subspace_included(ann_a.subspace, ker_b, tol))
                throw triple_error("is_max_annihilator: probe found a strict extension of a "
                                   "minimal multiple's annihilator");
        }
        out.is_max = true;
        return out;
    }

    // not a minimal multiple: construct the witness lambda_1 * (minimal <= e_1)
    const SpectralResolution res = spectral_resolve(a);
    const AtomicElement e1 = res.tripotents.front();
    const std::vector<AtomicElement> frame = frame_of_minimals(e1);
    const AtomicElement witness = cx(res.lambdas.front(), 0) * frame.front();
    const Annihilator ann_w = annihilator(witness);
    out.codim_witness = ann_w.complex_codim;
    out.inclusion_defect = subspace_inclusion_defect(ann_a.subspace, ann_w.subspace);
    if (out.inclusion_defect > tol)
        throw triple_error("is_max_annihilator: witness annihilator does not contain ann(a)");
    if (!(out.codim_a > out.codim_witness))
        throw triple_error("is_max_annihilator: witness gives no strict dimension gap");
    out.witness = witness;
    return out;
}

MaxAnnihilatorResult is_max_annihilator(const Element& a, int probe_budget, uint64_t seed,
                                        double tol) {
    return is_max_annihilator(AtomicElement::lift(a), probe_budget, seed, tol);
}

bool linear_dependence_via_annihilators(const AtomicElement& a, const AtomicElement& b,
                                        double tol) {
    require_same_triple(a, b, "linear_dependence_via_annihilators");
    if (a.is_zero() || b.is_zero())
        throw triple_error("linear_dependence_via_annihilators: zero input");
    // a complex multiple of a minimal tripotent is a positive multiple of the
    // phase-adjusted minimal, so the spectral test covers the precondition
    if (!is_positive_multiple_of_minimal(a).is_minimal_multiple ||
        !is_positive_multiple_of_minimal(b).is_minimal_multiple)
        throw triple_error(
            "linear_dependence_via_annihilators: inputs must be multiples of minimal "
            "tripotents");
    const bool kernels_equal = subspace_equal(annihilator(a).subspace,
                                              annihilator(b).subspace, tol);
    // independent route: rank-one span test on the coordinates
    const Vec va = a.coords / a.coords.norm();
    const Vec vb = b.coords / b.coords.norm();
    const cx ip = va.dot(vb);
    const bool span_equal = std::abs(std::abs(ip) - 1.0) <= 1e-8;
    if (kernels_equal != span_equal)
        throw triple_error("linear_dependence_via_annihilators: annihilator and span routes "
                           "disagree");
    return kernels_equal;
}

bool linear_dependence_via_annihilators(const Element& a, const Element& b, double tol) {
    return linear_dependence_via_annihilators(AtomicElement::lift(a), AtomicElement::lift(b),
                                              tol);
}

Subspace peirce1_from_annihilators(const AtomicElement& e, uint64_t seed, double tol) {
    if (!is_tripotent(e) || !is_minimal(e))
        throw triple_error("peirce1_from_annihilators: input must be a minimal tripotent");
    const PeirceDecomposition dec = peirce_decompose(e);
    Subspace result = kernel(Q_operator(e), 1e-9);
    const Subspace& e0 = dec.E(0);
    if (e0.real_dim() > 0) {
        // separating family: minimal tripotents from frames of random E_0(e) elements
        SplitRng root(seed);
        const int needed = e0.real_dim() / 2;
        int collected = 0;
        for (int round = 0; round < needed + 4 && collected < needed; ++round) {
            SplitRng rng = root.stream(round);
            AtomicElement x = random_element(rng, e.triple);
            AtomicElement x0 = e0.project(x);
            if (coord_norm(x0) < 1e-10) continue;
            const AtomicElement r = range_tripotent(x0);
            for (const AtomicElement& v : frame_of_minimals(r)) {
                result = subspace_intersection(result, kernel(Q_operator(v), 1e-9));
                ++collected;
            }
        }
    }
    if (!subspace_equal(result, dec.E(1), std::max(tol, 1e-7)))
        throw triple_error("peirce1_from_annihilators: intersection does not match E_1(e)");
    return result;
}

Subspace peirce1_from_annihilators(const Element& e, uint64_t seed, double tol) {
    return peirce1_from_annihilators(AtomicElement::lift(e), seed, tol);
}

cx ttp(const AtomicElement& e, const AtomicElement& v, double tol) {
    require_same_triple(e, v, "ttp");
    if (!is_minimal(e) || !is_minimal(v))
        throw triple_error("ttp: both arguments must be minimal tripotents");
    // P_2(v)(e) = Q(v)^2(e)
    const AtomicElement qe = triple_product(v, e, v);
    const AtomicElement p2e = triple_product(v, qe, v);
    const cx c = v.coords.dot(p2e.coords) / v.coords.squaredNorm();
    if (coord_norm(p2e - c * v) > tol * std::max(1.0, coord_norm(p2e)))
        throw triple_error("ttp: P_2(v)(e) is not a multiple of v");
    return c;
}

cx ttp(const Element& e, const Element& v, double tol) {
    return ttp(AtomicElement::lift(e), AtomicElement::lift(v), tol);
}

bool characterize_one_dimensional(const AtomicTriple& t, uint64_t seed, int samples) {
    const bool dim_one = t.complex_dim() == 1;
    // verification channel: basis elements plus random samples
    std::vector<AtomicElement> probes;
    for (int k = 0; k < t.complex_dim(); ++k) {
        Vec c = Vec::Zero(t.complex_dim());
        c(k) = cx(1, 0);
        probes.emplace_back(t, std::move(c));
    }
    SplitRng root(seed);
    for (int s = 0; s < samples; ++s) {
        SplitRng rng = root.stream(s);
        probes.push_back(random_element(rng, t));
    }
    bool all_trivial = true;
    for (const auto& a : probes) {
        if (a.is_zero()) continue;
        if (annihilator(a).subspace.real_dim() != 0) {
            all_trivial = false;
            break;
        }
    }
    if (all_trivial != dim_one)
        throw triple_error("characterize_one_dimensional: annihilator probe disagrees with "
                           "the dimension count");
    return dim_one;
}

}  // namespace triplekit
