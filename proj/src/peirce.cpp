#include "triplekit/peirce.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "triplekit/factors.hpp"

namespace triplekit {

namespace {

double cube_residual(const AtomicElement& e) {
    return coord_norm(triple_product(e, e, e) - e);
}

// P0, P1, P2 as polynomials in the realified L(e,e).
std::array<RMat, 3> peirce_polynomials(const RMat& l) {
    const RMat l2 = l * l;
    const RMat id = RMat::Identity(l.rows(), l.cols());
    return {2.0 * l2 - 3.0 * l + id, -4.0 * l2 + 4.0 * l, 2.0 * l2 - l};
}

void check_eigenvalue_grid(const RMat& l, double grid_tol) {
    Eigen::EigenSolver<RMat> es(l, /*computeEigenvectors=*/false);
    const auto& vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        const double re = vals(i).real();
        const double im = vals(i).imag();
        const double off = std::min({std::abs(re), std::abs(re - 0.5), std::abs(re - 1.0)});
        if (std::abs(im) > grid_tol || off > grid_tol)
            throw triple_error("peirce_decompose: eigenvalue " + std::to_string(re) + "+" +
                               std::to_string(im) + "i of L(e,e) is off the {0,1/2,1} grid");
    }
}

}  // namespace

double tripotent_residual(const AtomicElement& e) { return cube_residual(e); }

bool is_tripotent(const AtomicElement& e, double tol) {
    const double n = coord_norm(e);
    return cube_residual(e) <= tol * std::max(1.0, n * n * n);
}

bool is_tripotent(const Element& e, double tol) {
    return is_tripotent(AtomicElement::lift(e), tol);
}

PeirceDecomposition peirce_decompose(const AtomicElement& e, double tol, double grid_tol) {
    if (!is_tripotent(e, tol))
        throw triple_error("peirce_decompose: input is not a tripotent (residual " +
                           std::to_string(cube_residual(e)) + ")");
    const RealLinearOperator l = L_operator(e, e);
    check_eigenvalue_grid(l.matrix, grid_tol);
    auto polys = peirce_polynomials(l.matrix);

    PeirceDecomposition dec;
    dec.tripotent = e;
    for (int j = 0; j < 3; ++j) {
        RealLinearOperator pj{e.triple, e.triple, polys[j], LinearityTag::complex_linear};
        dec.subspaces[j] = subspace_from_span(e.triple, polys[j], 1e-7);
        if (dec.subspaces[j].real_dim() % 2 != 0)
            throw triple_error("peirce_decompose: odd real dimension in Peirce space");
        if (!dec.subspaces[j].complex_flag)
            throw triple_error("peirce_decompose: Peirce space is not complex-closed");
        dec.complex_dims[j] = dec.subspaces[j].real_dim() / 2;
        dec.projections[j] = std::move(pj);
    }
    const int total = dec.complex_dims[0] + dec.complex_dims[1] + dec.complex_dims[2];
    if (total != e.triple.complex_dim())
        throw triple_error("peirce_decompose: Peirce dimensions do not fill the space");
    const RMat sum = polys[0] + polys[1] + polys[2];
    if ((sum - RMat::Identity(sum.rows(), sum.cols())).norm() > 1e-10 * sum.rows())
        throw triple_error("peirce_decompose: projections do not sum to the identity");
    return dec;
}

PeirceDecomposition peirce_decompose(const Element& e, double tol, double grid_tol) {
    return peirce_decompose(AtomicElement::lift(e), tol, grid_tol);
}

namespace {

// dim E_2(e) in complex units, via the rank of the polynomial projector.
int peirce2_complex_dim(const AtomicElement& e) {
    const RealLinearOperator l = L_operator(e, e);
    auto polys = peirce_polynomials(l.matrix);
    Subspace s = subspace_from_span(e.triple, polys[2], 1e-7);
    return s.real_dim() / 2;
}

}  // namespace

bool is_minimal(const AtomicElement& e, double tol) {
    if (!is_tripotent(e, tol))
        throw triple_error("is_minimal: input is not a tripotent");
    if (e.is_zero()) return false;
    return peirce2_complex_dim(e) == 1;
}

bool is_minimal(const Element& e, double tol) { return is_minimal(AtomicElement::lift(e), tol); }

namespace {

int rank_of_part(const Element& e, double tol) {
    if (e.coords.norm() == 0.0) return 0;
    if (e.factor.kind == FactorKind::spin)
        return is_minimal(e, tol) ? 1 : 2;
    Eigen::JacobiSVD<Mat> svd(embed_matrix(e));
    int matrix_rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 0.5) ++matrix_rank;
    // type 2 minimal tripotents have matrix rank two
    return e.factor.kind == FactorKind::type2 ? matrix_rank / 2 : matrix_rank;
}

}  // namespace

int rank_tripotent(const AtomicElement& e, double tol) {
    if (!is_tripotent(e, tol))
        throw triple_error("rank_tripotent: input is not a tripotent");
    int r = 0;
    for (int k = 0; k < e.triple.parts(); ++k) r += rank_of_part(e.part(k), tol);
    return r;
}

int rank_tripotent(const Element& e, double tol) {
    return rank_tripotent(AtomicElement::lift(e), tol);
}

TripotentCert certify_tripotent(const AtomicElement& e, double tol) {
    TripotentCert cert;
    cert.element = e;
    cert.cube_residual = cube_residual(e);
    const double n = coord_norm(e);
    if (cert.cube_residual > tol * std::max(1.0, n * n * n))
        throw triple_error("certify_tripotent: input is not a tripotent");
    PeirceDecomposition dec = peirce_decompose(e, tol);
    cert.peirce_dims = dec.complex_dims;
    cert.rank = rank_tripotent(e, tol);
    cert.minimal = !e.is_zero() && dec.complex_dims[2] == 1;
    return cert;
}

namespace {

void validate_frame(const Element& e, const std::vector<Element>& frame, double tol) {
    Element sum = Element::zero(e.factor);
    for (const auto& f : frame) {
        if (!is_tripotent(f, 1e-8) || !is_minimal(f, 1e-8))
            throw triple_error("frame_of_minimals: constructed part is not a minimal tripotent");
        sum = sum + f;
    }
    for (size_t i = 0; i < frame.size(); ++i)
        for (size_t j = i + 1; j < frame.size(); ++j)
            if (!are_orthogonal(frame[i], frame[j], 1e-8))
                throw triple_error("frame_of_minimals: parts are not mutually orthogonal");
    if (coord_norm(sum - e) > std::max(tol, 1e-9) * std::max(1.0, coord_norm(e)))
        throw triple_error("frame_of_minimals: parts do not sum to the tripotent");
}

std::vector<Element> frame_type1(const Element& e) {
    Eigen::JacobiSVD<Mat> svd(embed_matrix(e), Eigen::ComputeFullU | Eigen::ComputeFullV);
    std::vector<Element> frame;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 0.5) {
            Mat part = svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
            frame.push_back(project_matrix(part, e.factor));
        }
    return frame;
}

// Realified matrix of the conjugate-linear map x -> a * conj(x) on C^n.
RMat conj_map_realified(const Mat& a) {
    const int n = static_cast<int>(a.cols());
    RMat m(2 * a.rows(), 2 * n);
    Vec unit = Vec::Zero(n);
    for (int k = 0; k < n; ++k) {
        unit(k) = cx(1, 0);
        m.col(2 * k) = realify(a * unit.conjugate());
        unit(k) = cx(0, 1);
        m.col(2 * k + 1) = realify(a * unit.conjugate());
        unit(k) = cx(0, 0);
    }
    return m;
}

// Orthonormal complex basis of the column space of a projection p.
Mat complex_range_basis(const Mat& p, double tol = 1e-8) {
    Eigen::JacobiSVD<Mat> svd(p, Eigen::ComputeThinU);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++rank;
    return svd.matrixU().leftCols(rank);
}

// Type 3: e is a symmetric partial isometry; T x = e conj(x) is a conjugation
// of range(e e^†) and its fixed vectors w_i give e = sum_i w_i w_i^T.
std::vector<Element> frame_type3(const Element& e) {
    const Mat a = embed_matrix(e);
    const int n = static_cast<int>(a.rows());
    const Mat p = a * a.adjoint();
    const Mat rb = complex_range_basis(p);       // n x r complex
    const int r = static_cast<int>(rb.cols());
    if (r == 0) return {};
    // T in the coordinates of rb, realified: x -> rb^† (a conj(rb x))
    RMat t(2 * r, 2 * r);
    Vec unit = Vec::Zero(r);
    for (int k = 0; k < r; ++k) {
        unit(k) = cx(1, 0);
        t.col(2 * k) = realify(rb.adjoint() * (a * (rb * unit).conjugate()));
        unit(k) = cx(0, 1);
        t.col(2 * k + 1) = realify(rb.adjoint() * (a * (rb * unit).conjugate()));
        unit(k) = cx(0, 0);
    }
    // fixed space of the involution: kernel of (T - I), dimension r
    Eigen::JacobiSVD<RMat> svd(RMat(t - RMat::Identity(2 * r, 2 * r)), Eigen::ComputeFullV);
    RMat fixed = svd.matrixV().rightCols(r);
    std::vector<Element> frame;
    for (int i = 0; i < r; ++i) {
        const Vec w = rb * unrealify(fixed.col(i));
        frame.push_back(project_matrix(Mat(w * w.transpose()), e.factor));
    }
    return frame;
}

// Type 2: T x = e conj(x) satisfies T^2 = -1 on range(e e^†); pairing an
// orthonormal vector with its T-image peels off one minimal tripotent.
std::vector<Element> frame_type2(const Element& e) {
    const Mat a = embed_matrix(e);
    const Mat p = a * a.adjoint();
    Mat basis = complex_range_basis(p);
    std::vector<Element> frame;
    while (basis.cols() > 0) {
        if (basis.cols() == 1) throw triple_error("frame_of_minimals: type 2 pairing failed");
        const Vec xi = basis.col(0);
        const Vec eta = a * xi.conjugate();  // unit, orthogonal to xi
        frame.push_back(
            project_matrix(Mat(eta * xi.transpose() - xi * eta.transpose()), e.factor));
        // project span{xi, eta} out of the remaining columns, then re-orthonormalize
        Mat rem(basis.rows(), basis.cols() - 1);
        for (Eigen::Index c = 1; c < basis.cols(); ++c) {
            Vec v = basis.col(c);
            v -= xi * xi.dot(v);
            v -= eta * eta.dot(v);
            rem.col(c - 1) = v;
        }
        Eigen::JacobiSVD<Mat> svd(rem, Eigen::ComputeThinU);
        int rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-8) ++rank;
        if (rank != basis.cols() - 2)
            throw triple_error("frame_of_minimals: type 2 peeling failed");
        basis = svd.matrixU().leftCols(rank);
    }
    return frame;
}

std::vector<Element> frame_spin(const Element& e, double tol) {
    if (is_minimal(e, 1e-8)) return {e};
    // rank-2 spin tripotent: e = mu * x with x a real unit vector, mu^2 = <e|conj e>
    const cx mu2 = spin_inner(e.coords, e.coords.conjugate());
    const cx mu = std::sqrt(mu2);
    Vec x = e.coords / mu;
    if (x.imag().norm() > 1e-7)
        throw triple_error("frame_of_minimals: spin tripotent is not a phased real vector");
    RVec xr = x.real();
    xr.normalize();
    // deterministic real unit vector orthogonal to x
    int i0 = 0;
    for (int i = 1; i < xr.size(); ++i)
        if (std::abs(xr(i)) < std::abs(xr(i0))) i0 = i;
    RVec s = RVec::Zero(xr.size());
    s(i0) = 1.0;
    s -= xr * xr.dot(s);
    s.normalize();
    const Vec xc = xr.cast<cx>(), sc = s.cast<cx>();
    Element e_plus(e.factor, Vec(0.5 * mu * (xc + cx(0, 1) * sc)));
    Element e_minus(e.factor, Vec(0.5 * mu * (xc - cx(0, 1) * sc)));
    (void)tol;
    return {e_plus, e_minus};
}

}  // namespace

std::vector<Element> frame_of_minimals(const Element& e, double tol) {
    if (!is_tripotent(e, tol))
        throw triple_error("frame_of_minimals: input is not a tripotent");
    std::vector<Element> frame;
    if (e.coords.norm() == 0.0) return frame;
    switch (e.factor.kind) {
        case FactorKind::type1: frame = frame_type1(e); break;
        case FactorKind::type2: frame = frame_type2(e); break;
        case FactorKind::type3: frame = frame_type3(e); break;
        case FactorKind::spin: frame = frame_spin(e, tol); break;
    }
    validate_frame(e, frame, tol);
    return frame;
}

std::vector<AtomicElement> frame_of_minimals(const AtomicElement& e, double tol) {
    if (!is_tripotent(e, tol))
        throw triple_error("frame_of_minimals: input is not a tripotent");
    std::vector<AtomicElement> out;
    for (int k = 0; k < e.triple.parts(); ++k) {
        const Element part = e.part(k);
        if (part.coords.norm() == 0.0) continue;
        for (const Element& f : frame_of_minimals(part, tol)) {
            AtomicElement lifted = AtomicElement::zero(e.triple);
            out.push_back(lifted.with_part(k, f));
        }
    }
    return out;
}

bool are_orthogonal(const AtomicElement& x, const AtomicElement& y, double tol) {
    require_same_triple(x, y, "are_orthogonal");
    const double sx = coord_norm(x), sy = coord_norm(y);
    if (sx == 0.0 || sy == 0.0) return true;
    return operator_norm(L_operator(x, y)) <= tol * sx * sy;
}

bool are_orthogonal(const Element& x, const Element& y, double tol) {
    return are_orthogonal(AtomicElement::lift(x), AtomicElement::lift(y), tol);
}

namespace {

// ||P_j(e) x - x|| <= tol ||x||, with P_j evaluated as a polynomial in L(e,e).
bool in_peirce_space(const AtomicElement& e, const AtomicElement& x, int j, double tol) {
    const AtomicElement lx = triple_product(e, e, x);
    const AtomicElement llx = triple_product(e, e, lx);
    AtomicElement px = AtomicElement::zero(x.triple);
    switch (j) {
        case 0: px = (2.0 * llx) - (3.0 * lx) + x; break;
        case 1: px = (-4.0 * llx) + (4.0 * lx); break;
        case 2: px = (2.0 * llx) - lx; break;
        default: throw triple_error("in_peirce_space: bad index");
    }
    return coord_norm(px - x) <= tol * std::max(1.0, coord_norm(x));
}

}  // namespace

bool are_collinear(const AtomicElement& e, const AtomicElement& v, double tol) {
    if (!is_tripotent(e) || !is_tripotent(v))
        throw triple_error("are_collinear: inputs must be tripotents");
    return in_peirce_space(v, e, 1, tol) && in_peirce_space(e, v, 1, tol);
}

bool are_collinear(const Element& e, const Element& v, double tol) {
    return are_collinear(AtomicElement::lift(e), AtomicElement::lift(v), tol);
}

bool governs(const AtomicElement& u, const AtomicElement& w, double tol) {
    if (!is_tripotent(u) || !is_tripotent(w))
        throw triple_error("governs: inputs must be tripotents");
    return in_peirce_space(u, w, 2, tol) && in_peirce_space(w, u, 1, tol);
}

bool governs(const Element& u, const Element& w, double tol) {
    return governs(AtomicElement::lift(u), AtomicElement::lift(w), tol);
}

bool leq(const AtomicElement& e, const AtomicElement& u, double tol) {
    if (!is_tripotent(e) || !is_tripotent(u))
        throw triple_error("leq: inputs must be tripotents");
    const AtomicElement diff = u - e;
    if (diff.is_zero(tol)) return true;
    return is_tripotent(diff, std::max(tol, kTripotentTol)) && are_orthogonal(diff, e, tol);
}

bool leq(const Element& e, const Element& u, double tol) {
    return leq(AtomicElement::lift(e), AtomicElement::lift(u), tol);
}

bool compatible(const AtomicElement& e, const AtomicElement& v, double tol) {
    if (!is_tripotent(e) || !is_tripotent(v))
        throw triple_error("compatible: inputs must be tripotents");
    const RealLinearOperator le = L_operator(e, e);
    const RealLinearOperator lv = L_operator(v, v);
    auto pe = peirce_polynomials(le.matrix);
    auto pv = peirce_polynomials(lv.matrix);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if ((pe[j] * pv[k] - pv[k] * pe[j]).norm() > tol) return false;
    return true;
}

bool compatible(const Element& e, const Element& v, double tol) {
    return compatible(AtomicElement::lift(e), AtomicElement::lift(v), tol);
}

}  // namespace triplekit
