#include "triplekit/factors.hpp"

#include <Eigen/SVD>

namespace triplekit {

namespace {

Mat embed_type1(const Element& x) {
    Mat a(x.factor.m, x.factor.n);
    int k = 0;
    for (int i = 0; i < x.factor.m; ++i)
        for (int j = 0; j < x.factor.n; ++j) a(i, j) = x.coords(k++);
    return a;
}

Mat embed_type2(const Element& x) {
    const int n = x.factor.n;
    Mat a = Mat::Zero(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = x.coords(k);
            a(j, i) = -x.coords(k);
            ++k;
        }
    return a;
}

Mat embed_type3(const Element& x) {
    const int n = x.factor.n;
    Mat a(n, n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            a(i, j) = x.coords(k);
            a(j, i) = x.coords(k);
            ++k;
        }
    return a;
}

Vec extract_type1(const Mat& m, int rows, int cols) {
    Vec c(rows * cols);
    int k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) c(k++) = m(i, j);
    return c;
}

Vec extract_type2(const Mat& m) {
    const int n = static_cast<int>(m.rows());
    Vec c(n * (n - 1) / 2);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c(k++) = m(i, j);
    return c;
}

Vec extract_type3(const Mat& m) {
    const int n = static_cast<int>(m.rows());
    Vec c(n * (n + 1) / 2);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) c(k++) = m(i, j);
    return c;
}

Mat cstar_product(const Mat& a, const Mat& b, const Mat& c) {
    return 0.5 * (a * b.adjoint() * c + c * b.adjoint() * a);
}

}  // namespace

cx spin_inner(const Vec& x, const Vec& y) { return y.dot(x); }  // Eigen dot conjugates lhs

Element triple_product(const Element& x, const Element& y, const Element& z) {
    require_same_factor(x, y, "triple_product");
    require_same_factor(x, z, "triple_product");
    switch (x.factor.kind) {
        case FactorKind::type1: {
            Mat p = cstar_product(embed_type1(x), embed_type1(y), embed_type1(z));
            return Element(x.factor, extract_type1(p, x.factor.m, x.factor.n));
        }
        case FactorKind::type2: {
            Mat p = cstar_product(embed_type2(x), embed_type2(y), embed_type2(z));
            return Element(x.factor, extract_type2(p));
        }
        case FactorKind::type3: {
            Mat p = cstar_product(embed_type3(x), embed_type3(y), embed_type3(z));
            return Element(x.factor, extract_type3(p));
        }
        case FactorKind::spin: {
            const cx xy = spin_inner(x.coords, y.coords);
            const cx zy = spin_inner(z.coords, y.coords);
            const cx xz = spin_inner(x.coords, z.coords.conjugate());
            Vec out = xy * z.coords + zy * x.coords - xz * y.coords.conjugate();
            return Element(x.factor, std::move(out));
        }
    }
    throw triple_error("triple_product: unknown factor kind");
}

AtomicElement triple_product(const AtomicElement& x, const AtomicElement& y,
                             const AtomicElement& z) {
    require_same_triple(x, y, "triple_product");
    require_same_triple(x, z, "triple_product");
    AtomicElement out = AtomicElement::zero(x.triple);
    for (int k = 0; k < x.triple.parts(); ++k)
        out = out.with_part(k, triple_product(x.part(k), y.part(k), z.part(k)));
    return out;
}

double factor_norm(const Element& x) {
    if (x.factor.kind == FactorKind::spin) {
        const double sigma = spin_inner(x.coords, x.coords).real();
        const double tau = std::abs(spin_inner(x.coords, x.coords.conjugate()));
        const double gap = std::max(0.0, sigma * sigma - tau * tau);
        return std::sqrt(sigma + std::sqrt(gap));
    }
    Mat a = embed_matrix(x);
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double sum_norm(const AtomicElement& x) {
    double best = 0.0;
    for (int k = 0; k < x.triple.parts(); ++k) best = std::max(best, factor_norm(x.part(k)));
    return best;
}

Mat embed_matrix(const Element& x) {
    switch (x.factor.kind) {
        case FactorKind::type1: return embed_type1(x);
        case FactorKind::type2: return embed_type2(x);
        case FactorKind::type3: return embed_type3(x);
        case FactorKind::spin:
            throw triple_error("embed_matrix: spin factors have no matrix embedding");
    }
    throw triple_error("embed_matrix: unknown factor kind");
}

Element project_matrix(const Mat& m, const FactorDescriptor& factor, double tol) {
    const double scale = std::max(1.0, m.norm());
    switch (factor.kind) {
        case FactorKind::type1:
            if (m.rows() != factor.m || m.cols() != factor.n)
                throw triple_error("project_matrix: shape mismatch for " + to_string(factor));
            return Element(factor, extract_type1(m, factor.m, factor.n));
        case FactorKind::type2: {
            if (m.rows() != factor.n || m.cols() != factor.n)
                throw triple_error("project_matrix: shape mismatch for " + to_string(factor));
            const double viol = (m + m.transpose()).norm();
            if (viol > tol * scale)
                throw triple_error("project_matrix: matrix is not antisymmetric (residual " +
                                   std::to_string(viol) + ")");
            return Element(factor, extract_type2(m));
        }
        case FactorKind::type3: {
            if (m.rows() != factor.n || m.cols() != factor.n)
                throw triple_error("project_matrix: shape mismatch for " + to_string(factor));
            const double viol = (m - m.transpose()).norm();
            if (viol > tol * scale)
                throw triple_error("project_matrix: matrix is not symmetric (residual " +
                                   std::to_string(viol) + ")");
            return Element(factor, extract_type3(m));
        }
        case FactorKind::spin:
            throw triple_error("project_matrix: spin factors have no matrix embedding");
    }
    throw triple_error("project_matrix: unknown factor kind");
}

Element matrix_unit(const FactorDescriptor& factor, int i, int j) {
    switch (factor.kind) {
        case FactorKind::type1: {
            if (i < 0 || i >= factor.m || j < 0 || j >= factor.n)
                throw triple_error("matrix_unit: index out of range");
            return Element::basis(factor, i * factor.n + j);
        }
        case FactorKind::type2: {
            Mat m = Mat::Zero(factor.n, factor.n);
            if (i == j || i < 0 || j < 0 || i >= factor.n || j >= factor.n)
                throw triple_error("matrix_unit: bad type2 index");
            m(i, j) = 1.0;
            m(j, i) = -1.0;
            return Element(factor, extract_type2(m));
        }
        case FactorKind::type3: {
            Mat m = Mat::Zero(factor.n, factor.n);
            if (i < 0 || j < 0 || i >= factor.n || j >= factor.n)
                throw triple_error("matrix_unit: bad type3 index");
            m(i, j) = 1.0;
            m(j, i) = 1.0;
            return Element(factor, extract_type3(m));
        }
        case FactorKind::spin:
            throw triple_error("matrix_unit: not defined for spin factors");
    }
    throw triple_error("matrix_unit: unknown factor kind");
}

Element identity_element(const FactorDescriptor& factor) {
    if (factor.kind == FactorKind::type1 && factor.m == factor.n)
        return project_matrix(Mat::Identity(factor.n, factor.n), factor);
    if (factor.kind == FactorKind::type3)
        return project_matrix(Mat::Identity(factor.n, factor.n), factor);
    throw triple_error("identity_element: factor has no identity matrix");
}

}  // namespace triplekit
