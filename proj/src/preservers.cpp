#include "triplekit/preservers.hpp"

#include <sstream>

#include "triplekit/factors.hpp"
#include "triplekit/peirce.hpp"
#include "triplekit/rng.hpp"

namespace triplekit {

std::string to_string(IsoFlag flag) {
    return flag == IsoFlag::linear ? "linear" : "conjugate_linear";
}

namespace {

void require_unitary(const Mat& u, const char* what) {
    const Mat d = u * u.adjoint() - Mat::Identity(u.rows(), u.cols());
    if (u.rows() != u.cols() || d.norm() > 1e-10 * std::max<double>(1, u.rows()))
        throw triple_error(std::string(what) + ": matrix is not unitary");
}

void require_orthogonal(const RMat& o, const char* what) {
    const RMat d = o * o.transpose() - RMat::Identity(o.rows(), o.cols());
    if (o.rows() != o.cols() || d.norm() > 1e-10 * std::max<double>(1, o.rows()))
        throw triple_error(std::string(what) + ": matrix is not orthogonal");
}

FactorDescriptor generator_target(const FactorDescriptor& source, const IsoGenerators& gens) {
    if (const auto* t1 = std::get_if<Type1Generators>(&gens)) {
        if (source.kind != FactorKind::type1)
            throw triple_error("factor isomorphism: type1 generators on a non-type1 factor");
        return t1->transpose ? FactorDescriptor::type1(source.n, source.m) : source;
    }
    if (std::holds_alternative<CongruenceGenerators>(gens)) {
        if (source.kind != FactorKind::type2 && source.kind != FactorKind::type3)
            throw triple_error("factor isomorphism: congruence generators need type 2/3");
        return source;
    }
    if (source.kind != FactorKind::spin)
        throw triple_error("factor isomorphism: spin generators on a non-spin factor");
    return source;
}

Element apply_generators(const FactorDescriptor& target, IsoFlag flag,
                         const IsoGenerators& gens, const Element& x_in) {
    Element x = flag == IsoFlag::conjugate_linear ? conj(x_in) : x_in;
    if (const auto* t1 = std::get_if<Type1Generators>(&gens)) {
        Mat m = embed_matrix(x);
        if (t1->transpose) m = m.transpose().eval();
        return project_matrix(Mat(t1->u * m * t1->v), target);
    }
    if (const auto* cg = std::get_if<CongruenceGenerators>(&gens)) {
        const Mat m = embed_matrix(x);
        return project_matrix(Mat(cg->u * m * cg->u.transpose()), target);
    }
    const auto& sp = std::get<SpinGenerators>(gens);
    return Element(target, sp.phase * (sp.orthogonal.cast<cx>() * x.coords));
}

void validate_isomorphism(const FactorIsomorphism& iso, uint64_t seed) {
    const LinearityTag want = iso.flag == IsoFlag::linear ? LinearityTag::complex_linear
                                                          : LinearityTag::conjugate_linear;
    if (classify_linearity(iso.realization.matrix) != want)
        throw triple_error("factor isomorphism: realization linearity does not match flag");
    SplitRng root(seed);
    for (int t = 0; t < 24; ++t) {
        SplitRng rng = root.stream(t);
        const Element x = random_element(rng, iso.source);
        const Element y = random_element(rng, iso.source);
        const Element z = random_element(rng, iso.source);
        const Element fx = iso.realization.apply(x);
        const Element fy = iso.realization.apply(y);
        const Element fz = iso.realization.apply(z);
        const Element lhs = iso.realization.apply(triple_product(x, y, z));
        const Element rhs = triple_product(fx, fy, fz);
        const double scale =
            std::max(1.0, coord_norm(x) * coord_norm(y) * coord_norm(z));
        if (coord_norm(lhs - rhs) > 1e-8 * scale)
            throw triple_error("factor isomorphism: triple product is not preserved");
        const double nx = factor_norm(x);
        if (std::abs(factor_norm(fx) - nx) > 1e-8 * std::max(1.0, nx))
            throw triple_error("factor isomorphism: map is not isometric");
    }
}

}  // namespace

FactorIsomorphism make_factor_isomorphism(const FactorDescriptor& source, IsoFlag flag,
                                          const IsoGenerators& gens, uint64_t seed) {
    if (const auto* t1 = std::get_if<Type1Generators>(&gens)) {
        require_unitary(t1->u, "type1 isomorphism u");
        require_unitary(t1->v, "type1 isomorphism v");
        const int rows = t1->transpose ? source.n : source.m;
        const int cols = t1->transpose ? source.m : source.n;
        if (t1->u.rows() != rows || t1->v.rows() != cols)
            throw triple_error("type1 isomorphism: generator shapes do not fit the factor");
    } else if (const auto* cg = std::get_if<CongruenceGenerators>(&gens)) {
        require_unitary(cg->u, "congruence isomorphism u");
        if (cg->u.rows() != source.n)
            throw triple_error("congruence isomorphism: size mismatch");
    } else {
        const auto& sp = std::get<SpinGenerators>(gens);
        require_orthogonal(sp.orthogonal, "spin isomorphism");
        if (sp.orthogonal.rows() != source.n)
            throw triple_error("spin isomorphism: size mismatch");
        if (std::abs(std::abs(sp.phase) - 1.0) > 1e-10)
            throw triple_error("spin isomorphism: phase must be unimodular");
    }
    FactorIsomorphism iso;
    iso.source = source;
    iso.target = generator_target(source, gens);
    iso.flag = flag;
    iso.generators = gens;
    const AtomicTriple dom = AtomicTriple::single(source);
    const AtomicTriple cod = AtomicTriple::single(iso.target);
    iso.realization = build_operator(
        dom, cod,
        [&](const AtomicElement& x) {
            return AtomicElement::lift(apply_generators(iso.target, flag, gens, x.part(0)));
        });
    validate_isomorphism(iso, seed);
    return iso;
}

FactorIsomorphism make_factor_isomorphism(const FactorDescriptor& source,
                                          const FactorDescriptor& target, IsoFlag flag,
                                          RealLinearOperator realization, uint64_t seed) {
    FactorIsomorphism iso;
    iso.source = source;
    iso.target = target;
    iso.flag = flag;
    iso.realization = std::move(realization);
    if (iso.realization.domain != AtomicTriple::single(source) ||
        iso.realization.codomain != AtomicTriple::single(target))
        throw triple_error("factor isomorphism: realization domain/codomain mismatch");
    validate_isomorphism(iso, seed);
    return iso;
}

RealLinearOperator synthesize(const PreserverSpec& spec) {
    const int parts = spec.source.parts();
    if (spec.target.parts() != parts)
        throw triple_error("synthesize: source and target factor counts differ");
    for (const auto& f : spec.source.factors)
        if (f.complex_dim() < 2)
            throw triple_error("synthesize: source contains a one-dimensional factor (" +
                               to_string(f) + "); the theorem hypothesis excludes it");
    if (static_cast<int>(spec.sigma.size()) != parts ||
        static_cast<int>(spec.gammas.size()) != parts ||
        static_cast<int>(spec.isos.size()) != parts)
        throw triple_error("synthesize: sigma/gammas/isos size mismatch");
    std::vector<int> hit(parts, 0);
    for (int k = 0; k < parts; ++k) {
        const int j = spec.sigma[k];
        if (j < 0 || j >= parts || hit[j]++)
            throw triple_error("synthesize: sigma is not a bijection");
        if (spec.gammas[k] <= 0.0) throw triple_error("synthesize: gamma must be positive");
        if (!(spec.isos[k].source == spec.source.factors[k]) ||
            !(spec.isos[k].target == spec.target.factors[j]))
            throw triple_error("synthesize: isomorphism " + std::to_string(k) +
                               " does not match sigma");
    }
    RMat m = RMat::Zero(spec.target.real_dim(), spec.source.real_dim());
    bool all_linear = true, all_conj = true;
    for (int k = 0; k < parts; ++k) {
        const int j = spec.sigma[k];
        const int r0 = 2 * spec.target.offsets[j], c0 = 2 * spec.source.offsets[k];
        m.block(r0, c0, 2 * spec.target.factors[j].complex_dim(),
                2 * spec.source.factors[k].complex_dim()) =
            spec.gammas[k] * spec.isos[k].realization.matrix;
        all_linear = all_linear && spec.isos[k].flag == IsoFlag::linear;
        all_conj = all_conj && spec.isos[k].flag == IsoFlag::conjugate_linear;
    }
    RealLinearOperator op{spec.source, spec.target, std::move(m), LinearityTag::general_real};
    if (all_linear) op.tag = LinearityTag::complex_linear;
    else if (all_conj) op.tag = LinearityTag::conjugate_linear;
    if (!is_invertible(op)) throw triple_error("synthesize: assembled operator is singular");
    return op;
}

namespace {

AtomicElement random_kernel_vector(SplitRng& rng, const Subspace& ker, double scale) {
    if (ker.real_dim() == 0) return AtomicElement::zero(ker.ambient);
    RVec g(ker.real_dim());
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.normal();
    RVec z = ker.basis * g;
    const double n = z.norm();
    if (n > 0) z *= scale / n;
    return AtomicElement(ker.ambient, unrealify(z));
}

}  // namespace

VerifyReport verify_preserves_truncations(const RealLinearOperator& A, int trials, uint64_t seed,
                                          double tol) {
    if (!is_invertible(A))
        throw triple_error("verify_preserves_truncations: operator is not bijective");
    const RealLinearOperator Ainv = invert(A);
    VerifyReport rep;
    SplitRng root(seed);
    std::ostringstream witness;

    auto positive_direction = [&](const RealLinearOperator& fwd, const AtomicTriple& dom,
                                  int count, int& ran, int& failures, const char* label,
                                  uint64_t salt) {
        for (int t = 0; t < count; ++t) {
            SplitRng rng = root.stream(salt + t);
            AtomicElement a = random_element(rng, dom);
            const Subspace ker = kernel(Q_operator(a), 1e-9);
            const AtomicElement z = random_kernel_vector(rng, ker, coord_norm(a));
            const AtomicElement b = a + z;
            if (!is_truncation(a, b, 1e-8))
                throw triple_error("verify: constructed pair is not a truncation (kernel bug)");
            ++ran;
            const AtomicElement fa = fwd.apply(a);
            const AtomicElement fb = fwd.apply(b);
            const AtomicElement lhs = triple_product(fa, fb, fa);
            const AtomicElement rhs = triple_product(fa, fa, fa);
            const double na = coord_norm(fa), nb = coord_norm(fb);
            const double resid =
                coord_norm(lhs - rhs) / std::max(1.0, na * na * std::max(na, nb));
            if (!is_truncation(fa, fb, tol)) {
                ++failures;
                if (witness.str().empty())
                    witness << label << " trial " << t << ": image pair fails the truncation "
                            << "relation (residual " << resid << ")";
            } else {
                rep.max_residual = std::max(rep.max_residual, resid);
            }
        }
    };

    positive_direction(A, A.domain, trials, rep.positive_trials, rep.positive_failures,
                       "positive", 0x10000000ull);
    positive_direction(Ainv, A.codomain, trials, rep.inverse_trials, rep.inverse_failures,
                       "inverse", 0x20000000ull);

    for (int t = 0; t < trials; ++t) {
        SplitRng rng = root.stream(0x30000000ull + t);
        const AtomicElement a = random_element(rng, A.domain);
        const AtomicElement b = random_element(rng, A.domain);
        if (is_truncation(a, b, 1e-8)) continue;  // astronomically unlikely
        ++rep.negative_trials;
        if (is_truncation(A.apply(a), A.apply(b), tol)) {
            ++rep.negative_failures;
            if (witness.str().empty())
                witness << "negative trial " << t
                        << ": non-truncation pair maps to a truncation pair";
        }
    }
    rep.witness = witness.str();
    rep.pass = rep.positive_failures == 0 && rep.inverse_failures == 0 &&
               rep.negative_failures == 0 && rep.positive_trials > 0;
    return rep;
}

std::pair<double, AtomicElement> induced_minimal_map(const RealLinearOperator& A,
                                                     const AtomicElement& e) {
    if (!is_minimal(e)) throw triple_error("induced_minimal_map: e is not a minimal tripotent");
    const AtomicElement fe = A.apply(e);
    const MinimalMultiple mm = is_positive_multiple_of_minimal(fe);
    if (!mm.is_minimal_multiple)
        throw triple_error("induced_minimal_map: A(e) is not a positive multiple of a minimal "
                           "tripotent; A does not preserve truncations");
    return {mm.scalar, mm.tripotent};
}

namespace {

Element canonical_minimal(const FactorDescriptor& f) {
    switch (f.kind) {
        case FactorKind::type1: return matrix_unit(f, 0, 0);
        case FactorKind::type2: return matrix_unit(f, 0, 1);
        case FactorKind::type3: return matrix_unit(f, 0, 0);
        case FactorKind::spin: {
            Vec c = Vec::Zero(f.n);
            c(0) = cx(0.5, 0);
            c(1) = cx(0, 0.5);
            return Element(f, std::move(c));
        }
    }
    throw triple_error("canonical_minimal: unknown factor kind");
}

bool kinds_match(const FactorDescriptor& s, const FactorDescriptor& t) {
    if (s == t) return true;
    return s.kind == FactorKind::type1 && t.kind == FactorKind::type1 && s.m == t.n &&
           s.n == t.m;
}

int locate_target_block(const AtomicElement& image, double rel_tol = 1e-8) {
    int found = -1;
    const double total = coord_norm(image);
    for (int j = 0; j < image.triple.parts(); ++j) {
        if (coord_norm(image.part(j)) > rel_tol * total) {
            if (found >= 0) return -2;  // spread over several blocks
            found = j;
        }
    }
    return found;
}

}  // namespace

PreserverSpec decompose(const RealLinearOperator& A, double tol, uint64_t seed) {
    if (!is_invertible(A)) throw triple_error("decompose: operator is not bijective");
    for (const auto& f : A.domain.factors)
        if (f.complex_dim() < 2)
            throw triple_error("decompose: source contains a one-dimensional factor (" +
                               to_string(f) + "); the theorem hypothesis excludes it");
    const int parts = A.domain.parts();
    if (A.codomain.parts() != parts)
        throw triple_error("decompose: factor matching failed, source and target factor "
                           "counts differ");

    PreserverSpec spec;
    spec.source = A.domain;
    spec.target = A.codomain;
    spec.sigma.assign(parts, -1);
    spec.gammas.assign(parts, 0.0);
    SplitRng root(seed);

    for (int k = 0; k < parts; ++k) {
        const FactorDescriptor& fk = A.domain.factors[k];
        AtomicElement ek = AtomicElement::zero(A.domain).with_part(k, canonical_minimal(fk));

        // (1) factor matching: sigma(k) hosts the range tripotent of A(e_k)
        const AtomicElement fe = A.apply(ek);
        const int j = locate_target_block(fe);
        if (j < 0)
            throw triple_error("decompose: factor matching failed, A(C_" + std::to_string(k) +
                               ") is not contained in a single target factor");
        spec.sigma[k] = j;
        if (!kinds_match(fk, A.codomain.factors[j]))
            throw triple_error("decompose: matched factors are not isomorphic (" +
                               to_string(fk) + " vs " + to_string(A.codomain.factors[j]) + ")");
        if (fk.max_rank() != A.codomain.factors[j].max_rank())
            throw triple_error("decompose: ranks of matched factors differ");

        // (2) gamma_k = ||A(e_k)||, constant over minimal tripotents of C_k
        const MinimalMultiple mm = is_positive_multiple_of_minimal(fe);
        if (!mm.is_minimal_multiple)
            throw triple_error("decompose: A does not map minimal tripotents of factor " +
                               std::to_string(k) + " to minimal multiples");
        const double gamma = mm.scalar;
        spec.gammas[k] = gamma;
        SplitRng gsampler = root.stream(1000 + k);
        for (int s = 0; s < 8; ++s) {
            const Element v = random_minimal_tripotent(gsampler, fk);
            AtomicElement ve = AtomicElement::zero(A.domain).with_part(k, v);
            const AtomicElement fv = A.apply(ve);
            const MinimalMultiple mv = is_positive_multiple_of_minimal(fv);
            if (!mv.is_minimal_multiple)
                throw triple_error("decompose: A does not map minimal tripotents of factor " +
                                   std::to_string(k) + " to minimal multiples");
            if (locate_target_block(fv) != j)
                throw triple_error("decompose: factor matching is not consistent over "
                                   "minimal tripotents");
            if (std::abs(mv.scalar - gamma) > std::max(tol, 1e-8) * gamma)
                throw triple_error("decompose: gamma is not constant over the minimal "
                                   "tripotents of factor " + std::to_string(k));
        }

        // (3) linearity dichotomy on i e_k
        const AtomicElement fie = A.apply(cx(0, 1) * ek);
        const double lin_resid = coord_norm(fie - cx(0, 1) * fe);
        const double conj_resid = coord_norm(fie - cx(0, -1) * fe);
        IsoFlag flag;
        if (lin_resid <= std::max(tol, 1e-8) * gamma) flag = IsoFlag::linear;
        else if (conj_resid <= std::max(tol, 1e-8) * gamma) flag = IsoFlag::conjugate_linear;
        else
            throw triple_error("decompose: A(i e) is neither i A(e) nor -i A(e) on factor " +
                               std::to_string(k));

        // (4) Phi_k = gamma^{-1} A|_{C_k}; off-block leakage must vanish
        const FactorDescriptor& ft = A.codomain.factors[j];
        const int c0 = 2 * A.domain.offsets[k], cw = 2 * fk.complex_dim();
        const int r0 = 2 * A.codomain.offsets[j], rw = 2 * ft.complex_dim();
        const RMat col_band = A.matrix.middleCols(c0, cw);
        RMat block = col_band.middleRows(r0, rw);
        const double leak = std::sqrt(std::max(0.0, col_band.squaredNorm() - block.squaredNorm()));
        if (leak > std::max(tol, 1e-8) * col_band.norm())
            throw triple_error("decompose: A(C_" + std::to_string(k) +
                               ") leaks outside its target factor");
        RealLinearOperator phi{AtomicTriple::single(fk), AtomicTriple::single(ft),
                               block / gamma, LinearityTag::general_real};
        phi.tag = classify_linearity(phi.matrix);
        FactorIsomorphism iso =
            make_factor_isomorphism(fk, ft, flag, std::move(phi), root.stream(2000 + k).next_u64());

        // TTP preservation (linear flag) or reversal (conjugate flag)
        SplitRng tsampler = root.stream(3000 + k);
        for (int s = 0; s < 50; ++s) {
            const Element e1 = random_minimal_tripotent(tsampler, fk);
            const Element v1 = random_minimal_tripotent(tsampler, fk);
            const cx source_ttp = ttp(AtomicElement::lift(e1), AtomicElement::lift(v1));
            const AtomicElement ae = AtomicElement::lift(iso.realization.apply(e1));
            const AtomicElement av = AtomicElement::lift(iso.realization.apply(v1));
            const cx target_ttp = ttp(range_tripotent(ae), range_tripotent(av));
            const cx want = flag == IsoFlag::linear ? source_ttp : std::conj(source_ttp);
            if (std::abs(target_ttp - want) > std::max(tol, 1e-8))
                throw triple_error(
                    "decompose: transition pseudo-probabilities are not " +
                    std::string(flag == IsoFlag::linear ? "preserved" : "reversed") +
                    " on factor " + std::to_string(k));
        }
        spec.isos.push_back(std::move(iso));
    }

    std::vector<int> hit(parts, 0);
    for (int k = 0; k < parts; ++k)
        if (hit[spec.sigma[k]]++)
            throw triple_error("decompose: sigma is not a bijection");

    // (5) identity principle: the reconstruction must equal A
    const RealLinearOperator rebuilt = synthesize(spec);
    const double diff = (rebuilt.matrix - A.matrix).norm();
    if (diff > std::max(tol, 1e-8) * std::max(1.0, A.matrix.norm()))
        throw triple_error("decompose: reconstruction differs from A (residual " +
                           std::to_string(diff) + ")");
    return spec;
}

HilbertClassification hilbert_case_classify(const RealLinearOperator& A, uint64_t seed,
                                            double tol) {
    if (A.domain.parts() != 1 || A.domain.factors[0].kind != FactorKind::type1 ||
        A.domain.factors[0].m != 1)
        throw triple_error("hilbert_case_classify: domain must be a rank-one factor type1(1,n)");
    const int n = A.domain.factors[0].n;
    if (n == 1)
        throw triple_error("hilbert_case_classify: on type1(1,1) = C every additive surjection "
                           "preserves truncations; no classification exists");
    if (!is_invertible(A)) throw triple_error("hilbert_case_classify: operator is singular");

    const FactorDescriptor f = A.domain.factors[0];
    const Element e1 = Element::basis(f, 0);
    const Element fe1 = A.apply(e1);
    const double gamma = factor_norm(fe1);
    const Element fie = A.apply(cx(0, 1) * e1);
    IsoFlag flag;
    if (coord_norm(fie - cx(0, 1) * fe1) <= tol * gamma) flag = IsoFlag::linear;
    else if (coord_norm(fie - cx(0, -1) * fe1) <= tol * gamma) flag = IsoFlag::conjugate_linear;
    else throw triple_error("hilbert_case_classify: map is neither linear nor conjugate-linear");

    HilbertClassification out;
    out.gamma = gamma;
    out.flag = flag;
    out.isometry = RealLinearOperator{A.domain, A.codomain, A.matrix / gamma,
                                      classify_linearity(A.matrix)};
    // verification: inner products are preserved (conjugated for the
    // conjugate-linear flag), hence Euclidean orthogonality in both directions
    SplitRng root(seed);
    for (int t = 0; t < 64; ++t) {
        SplitRng rng = root.stream(t);
        const Element x = random_element(rng, f);
        const Element y = random_element(rng, f);
        const cx ip = y.coords.dot(x.coords);
        const Element vx = out.isometry.apply(x);
        const Element vy = out.isometry.apply(y);
        const cx vip = vy.coords.dot(vx.coords);
        const cx want = flag == IsoFlag::linear ? ip : std::conj(ip);
        if (std::abs(vip - want) > 1e-8 * std::max(1.0, std::abs(ip)))
            throw triple_error("hilbert_case_classify: the normalized map does not preserve "
                               "inner products; A is not a truncation preserver");
    }
    return out;
}

}  // namespace triplekit
