#include "triplekit/operators.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "triplekit/factors.hpp"
#include "triplekit/rng.hpp"

namespace triplekit {

std::string to_string(LinearityTag tag) {
    switch (tag) {
        case LinearityTag::complex_linear: return "complex_linear";
        case LinearityTag::conjugate_linear: return "conjugate_linear";
        case LinearityTag::general_real: return "general_real";
    }
    return "?";
}

AtomicElement RealLinearOperator::apply(const AtomicElement& x) const {
    if (x.triple != domain) throw triple_error("operator apply: domain mismatch");
    return AtomicElement(codomain, unrealify(matrix * realify(x.coords)));
}

Element RealLinearOperator::apply(const Element& x) const {
    AtomicElement out = apply(AtomicElement::lift(x));
    if (out.triple.parts() != 1) throw triple_error("operator apply: codomain is a sum");
    return out.part(0);
}

RMat multiplication_by_i(int complex_dim) {
    RMat j = RMat::Zero(2 * complex_dim, 2 * complex_dim);
    for (int k = 0; k < complex_dim; ++k) {
        j(2 * k, 2 * k + 1) = -1.0;
        j(2 * k + 1, 2 * k) = 1.0;
    }
    return j;
}

LinearityTag classify_linearity(const RMat& m, double tol) {
    if (m.rows() % 2 || m.cols() % 2) throw triple_error("classify_linearity: odd dimensions");
    const RMat jc = multiplication_by_i(static_cast<int>(m.cols()) / 2);
    const RMat jr = multiplication_by_i(static_cast<int>(m.rows()) / 2);
    const double scale = std::max(1.0, m.norm());
    if ((m * jc - jr * m).norm() <= tol * scale) return LinearityTag::complex_linear;
    if ((m * jc + jr * m).norm() <= tol * scale) return LinearityTag::conjugate_linear;
    return LinearityTag::general_real;
}

RealLinearOperator build_operator(const AtomicTriple& domain, const AtomicTriple& codomain,
                                  const std::function<AtomicElement(const AtomicElement&)>& fn,
                                  LinearityTag expected) {
    const int d = domain.complex_dim();
    RMat m(codomain.real_dim(), 2 * d);
    Vec unit = Vec::Zero(d);
    for (int k = 0; k < d; ++k) {
        unit(k) = cx(1, 0);
        m.col(2 * k) = realify(fn(AtomicElement(domain, unit)).coords);
        unit(k) = cx(0, 1);
        m.col(2 * k + 1) = realify(fn(AtomicElement(domain, unit)).coords);
        unit(k) = cx(0, 0);
    }
    RealLinearOperator op{domain, codomain, std::move(m), LinearityTag::general_real};
    if (expected != LinearityTag::general_real) {
        op.tag = classify_linearity(op.matrix);
        if (op.tag != expected)
            throw triple_error("build_operator: expected " + to_string(expected) + ", found " +
                               to_string(op.tag));
    } else {
        op.tag = classify_linearity(op.matrix);
    }
    return op;
}

RealLinearOperator identity_operator(const AtomicTriple& t) {
    return RealLinearOperator{t, t, RMat::Identity(t.real_dim(), t.real_dim()),
                              LinearityTag::complex_linear};
}

RealLinearOperator compose(const RealLinearOperator& f, const RealLinearOperator& g) {
    if (g.codomain != f.domain) throw triple_error("compose: domain/codomain mismatch");
    RealLinearOperator op{g.domain, f.codomain, f.matrix * g.matrix, LinearityTag::general_real};
    op.tag = classify_linearity(op.matrix);
    return op;
}

RealLinearOperator invert(const RealLinearOperator& op) {
    if (op.matrix.rows() != op.matrix.cols()) throw triple_error("invert: non-square operator");
    Eigen::FullPivLU<RMat> lu(op.matrix);
    if (!lu.isInvertible()) throw triple_error("invert: singular operator");
    RealLinearOperator out{op.codomain, op.domain, lu.inverse(), op.tag};
    return out;
}

double operator_norm(const RealLinearOperator& op) {
    if (op.matrix.size() == 0) return 0.0;
    Eigen::JacobiSVD<RMat> svd(op.matrix);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool is_invertible(const RealLinearOperator& op, double tol) {
    if (op.matrix.rows() != op.matrix.cols()) return false;
    Eigen::JacobiSVD<RMat> svd(op.matrix);
    const auto& s = svd.singularValues();
    return s.size() > 0 && s(s.size() - 1) > tol * s(0);
}

RealLinearOperator L_operator(const AtomicElement& a, const AtomicElement& b) {
    require_same_triple(a, b, "L_operator");
    return build_operator(
        a.triple, a.triple, [&](const AtomicElement& x) { return triple_product(a, b, x); },
        LinearityTag::complex_linear);
}

RealLinearOperator Q_operator(const AtomicElement& a) {
    if (a.is_zero()) {
        // the zero map commutes and anticommutes with J; tag it conjugate-linear
        RealLinearOperator op{a.triple, a.triple,
                              RMat::Zero(a.triple.real_dim(), a.triple.real_dim()),
                              LinearityTag::conjugate_linear};
        return op;
    }
    return build_operator(
        a.triple, a.triple, [&](const AtomicElement& x) { return triple_product(a, x, a); },
        LinearityTag::conjugate_linear);
}

RealLinearOperator L_operator(const Element& a, const Element& b) {
    return L_operator(AtomicElement::lift(a), AtomicElement::lift(b));
}

RealLinearOperator Q_operator(const Element& a) { return Q_operator(AtomicElement::lift(a)); }

int Subspace::complex_dim() const {
    if (!complex_flag) throw triple_error("complex_dim of a non-complex subspace");
    return real_dim() / 2;
}

bool Subspace::contains(const AtomicElement& x, double tol) const {
    if (x.triple != ambient) throw triple_error("Subspace::contains: triple mismatch");
    const RVec r = realify(x.coords);
    const double n = r.norm();
    if (n == 0.0) return true;
    return (r - basis * (basis.transpose() * r)).norm() <= tol * n;
}

AtomicElement Subspace::project(const AtomicElement& x) const {
    if (x.triple != ambient) throw triple_error("Subspace::project: triple mismatch");
    const RVec r = realify(x.coords);
    return AtomicElement(ambient, unrealify(basis * (basis.transpose() * r)));
}

namespace {

bool detect_complex_flag(const RMat& basis, int complex_dim, double tol = 1e-10) {
    if (basis.cols() == 0) return true;
    const RMat j = multiplication_by_i(complex_dim);
    const RMat jb = j * basis;
    return (jb - basis * (basis.transpose() * jb)).norm() <= tol * jb.norm() + 1e-14;
}

}  // namespace

Subspace full_subspace(const AtomicTriple& t) {
    return Subspace{t, RMat::Identity(t.real_dim(), t.real_dim()), true};
}

Subspace subspace_from_span(const AtomicTriple& t, const RMat& span_columns, double tol) {
    Subspace s{t, RMat(t.real_dim(), 0), true};
    if (span_columns.cols() == 0) return s;
    if (span_columns.rows() != t.real_dim())
        throw triple_error("subspace_from_span: row count mismatch");
    Eigen::JacobiSVD<RMat> svd(span_columns, Eigen::ComputeThinU);
    const auto& sig = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sig.size(); ++i)
        if (sig(i) > tol * std::max(1.0, sig(0))) ++rank;
    s.basis = svd.matrixU().leftCols(rank);
    s.complex_flag = detect_complex_flag(s.basis, t.complex_dim());
    return s;
}

Subspace subspace_from_elements(const std::vector<AtomicElement>& elems, double tol) {
    if (elems.empty()) throw triple_error("subspace_from_elements: empty family");
    const AtomicTriple& t = elems.front().triple;
    RMat span(t.real_dim(), elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].triple != t) throw triple_error("subspace_from_elements: mixed triples");
        span.col(static_cast<Eigen::Index>(i)) = realify(elems[i].coords);
    }
    return subspace_from_span(t, span, tol);
}

Subspace kernel(const RealLinearOperator& op, double tol) {
    Eigen::JacobiSVD<RMat> svd(op.matrix, Eigen::ComputeFullV);
    const auto& sig = svd.singularValues();
    const double smax = sig.size() ? sig(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sig.size(); ++i)
        if (sig(i) > tol * std::max(smax, 1e-300)) ++rank;
    Subspace s{op.domain, svd.matrixV().rightCols(op.matrix.cols() - rank), false};
    if (smax == 0.0) s.basis = RMat::Identity(op.matrix.cols(), op.matrix.cols());
    s.complex_flag = detect_complex_flag(s.basis, op.domain.complex_dim());
    return s;
}

Subspace range(const RealLinearOperator& op, double tol) {
    Eigen::JacobiSVD<RMat> svd(op.matrix, Eigen::ComputeThinU);
    const auto& sig = svd.singularValues();
    const double smax = sig.size() ? sig(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sig.size(); ++i)
        if (sig(i) > tol * std::max(smax, 1e-300)) ++rank;
    Subspace s{op.codomain, svd.matrixU().leftCols(rank), false};
    s.complex_flag = detect_complex_flag(s.basis, op.codomain.complex_dim());
    return s;
}

double subspace_inclusion_defect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw triple_error("subspace comparison: ambient mismatch");
    if (s1.basis.cols() == 0) return 0.0;
    const RMat resid = s1.basis - s2.basis * (s2.basis.transpose() * s1.basis);
    Eigen::JacobiSVD<RMat> svd(resid);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool subspace_included(const Subspace& s1, const Subspace& s2, double tol) {
    return subspace_inclusion_defect(s1, s2) <= tol;
}

bool subspace_equal(const Subspace& s1, const Subspace& s2, double tol) {
    return s1.basis.cols() == s2.basis.cols() && subspace_included(s1, s2, tol) &&
           subspace_included(s2, s1, tol);
}

Subspace subspace_intersection(const Subspace& s1, const Subspace& s2, double tol) {
    if (s1.ambient != s2.ambient) throw triple_error("subspace intersection: ambient mismatch");
    if (s1.basis.cols() == 0 || s2.basis.cols() == 0)
        return Subspace{s1.ambient, RMat(s1.ambient.real_dim(), 0), true};
    // Columns of B1 u with singular value ~1 in B1^T B2 lie in both spaces.
    Eigen::JacobiSVD<RMat> svd(RMat(s1.basis.transpose() * s2.basis), Eigen::ComputeFullU);
    const auto& sig = svd.singularValues();
    int count = 0;
    for (Eigen::Index i = 0; i < sig.size(); ++i)
        if (sig(i) >= 1.0 - tol) ++count;
    RMat span = s1.basis * svd.matrixU().leftCols(count);
    return subspace_from_span(s1.ambient, span);
}

Subspace image_subspace(const RealLinearOperator& op, const Subspace& s, double tol) {
    if (s.ambient != op.domain) throw triple_error("image_subspace: ambient mismatch");
    return subspace_from_span(op.codomain, RMat(op.matrix * s.basis), tol);
}

JordanReport check_jordan_identity(const FactorDescriptor& factor, int trials, uint64_t seed,
                                   double tol) {
    SplitRng root(seed);
    JordanReport report;
    report.trials = trials;
    report.threshold = tol;
    for (int t = 0; t < trials; ++t) {
        SplitRng rng = root.stream(t);
        const Element w = random_element(rng, factor);
        const Element v = random_element(rng, factor);
        const Element x = random_element(rng, factor);
        const Element y = random_element(rng, factor);
        const Element z = random_element(rng, factor);
        const Element lhs = triple_product(w, v, triple_product(x, y, z));
        const Element rhs = triple_product(triple_product(w, v, x), y, z) -
                            triple_product(x, triple_product(v, w, y), z) +
                            triple_product(x, y, triple_product(w, v, z));
        const double scale = std::max(1e-300, coord_norm(w) * coord_norm(v) * coord_norm(x) *
                                                  coord_norm(y) * coord_norm(z));
        report.max_residual = std::max(report.max_residual, coord_norm(lhs - rhs) / scale);
    }
    report.pass = report.max_residual <= tol;
    return report;
}

}  // namespace triplekit
