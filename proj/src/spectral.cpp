#include "triplekit/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "triplekit/factors.hpp"
#include "triplekit/peirce.hpp"

namespace triplekit {

AtomicElement SpectralResolution::reconstruct() const {
    AtomicElement out = AtomicElement::zero(generator.triple);
    for (int i = 0; i < size(); ++i) out = out + cx(lambdas[i], 0) * tripotents[i];
    return out;
}

namespace {

// Orthonormal real basis of the span of the odd powers of a.
RMat odd_power_basis(const AtomicElement& a) {
    const int rd = a.triple.real_dim();
    const int cap = a.triple.complex_dim();
    std::vector<RVec> raw;
    AtomicElement p = a;
    raw.push_back(realify(p.coords).normalized());
    RMat basis;
    int rank = 0;
    for (int it = 0; it < cap + 1; ++it) {
        RMat span(rd, raw.size());
        for (size_t i = 0; i < raw.size(); ++i) span.col(static_cast<Eigen::Index>(i)) = raw[i];
        Eigen::JacobiSVD<RMat> svd(span, Eigen::ComputeThinU);
        int r = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-10 * svd.singularValues()(0)) ++r;
        if (r == rank) {
            basis = svd.matrixU().leftCols(r);
            break;
        }
        rank = r;
        basis = svd.matrixU().leftCols(r);
        p = triple_product(a, p, a);  // next odd power, normalized for conditioning
        const double n = coord_norm(p);
        if (n == 0.0) break;
        p = cx(1.0 / n, 0) * p;
        raw.push_back(realify(p.coords));
    }
    return basis;
}

}  // namespace

namespace {

SpectralResolution resolve_impl(const AtomicElement& a, double tol, bool full_checks) {
    if (a.is_zero()) throw triple_error("spectral_resolve: zero input");
    const RMat basis = odd_power_basis(a);
    const int m = static_cast<int>(basis.cols());
    const RealLinearOperator l = L_operator(a, a);
    const RMat compressed = basis.transpose() * l.matrix * basis;

    Eigen::EigenSolver<RMat> es(compressed);
    std::vector<double> mus(m);
    for (int i = 0; i < m; ++i) {
        const auto v = es.eigenvalues()(i);
        if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v.real())))
            throw triple_error("spectral_resolve: complex eigenvalue of L(a,a) restriction");
        mus[i] = v.real();
    }
    std::sort(mus.begin(), mus.end(), std::greater<double>());
    // merge clusters closer than kClusterTol relative to the largest eigenvalue
    const double merge = kClusterTol * std::max(mus.front(), 1e-300);
    std::vector<double> reps;
    std::vector<int> counts;
    for (double mu : mus) {
        if (!reps.empty() && reps.back() - mu < merge) {
            reps.back() = (reps.back() * counts.back() + mu) / (counts.back() + 1);
            ++counts.back();
        } else {
            reps.push_back(mu);
            counts.push_back(1);
        }
    }

    SpectralResolution res;
    res.generator = a;
    const RVec a_comp = basis.transpose() * realify(a.coords);
    for (size_t c = 0; c < reps.size(); ++c) {
        if (reps[c] <= merge) continue;  // numerical zero mode
        // Lagrange spectral projector onto the cluster
        RMat proj = RMat::Identity(m, m);
        for (size_t o = 0; o < reps.size(); ++o) {
            if (o == c) continue;
            proj = proj * (compressed - reps[o] * RMat::Identity(m, m)) / (reps[c] - reps[o]);
        }
        const RVec comp = basis * (proj * a_comp);
        const double lambda = std::sqrt(reps[c]);
        AtomicElement e(a.triple, unrealify(comp) / cx(lambda, 0));
        res.lambdas.push_back(lambda);
        res.tripotents.push_back(std::move(e));
    }
    if (res.lambdas.empty()) throw triple_error("spectral_resolve: no positive spectrum found");

    // post-conditions: tripotency, mutual orthogonality, reconstruction
    for (const auto& e : res.tripotents)
        if (!is_tripotent(e, 1e-7))
            throw triple_error("spectral_resolve: component is not a tripotent");
    for (size_t i = 0; i < res.tripotents.size(); ++i)
        for (size_t j = i + 1; j < res.tripotents.size(); ++j) {
            const auto &ei = res.tripotents[i], &ej = res.tripotents[j];
            if (full_checks) {
                if (!are_orthogonal(ei, ej, 1e-7))
                    throw triple_error("spectral_resolve: components are not orthogonal");
            } else {
                // cheap surrogate on hot paths: {ei,ej,ei} = 0 = {ej,ei,ej}
                if (coord_norm(triple_product(ei, ej, ei)) > 1e-7 ||
                    coord_norm(triple_product(ej, ei, ej)) > 1e-7)
                    throw triple_error("spectral_resolve: components are not orthogonal");
            }
        }
    const double resid = coord_norm(res.reconstruct() - a);
    if (resid > std::max(tol, 1e-8) * std::max(1.0, coord_norm(a)))
        throw triple_error("spectral_resolve: reconstruction residual " + std::to_string(resid));
    return res;
}

}  // namespace

SpectralResolution spectral_resolve(const AtomicElement& a, double tol) {
    return resolve_impl(a, tol, /*full_checks=*/true);
}

SpectralResolution spectral_resolve(const Element& a, double tol) {
    return spectral_resolve(AtomicElement::lift(a), tol);
}

AtomicElement range_tripotent(const AtomicElement& a, double tol) {
    SpectralResolution res = resolve_impl(a, tol, /*full_checks=*/false);
    AtomicElement r = AtomicElement::zero(a.triple);
    for (const auto& e : res.tripotents) r = r + e;
    if (!is_tripotent(r, 1e-7))
        throw triple_error("range_tripotent: sum of spectral tripotents is not a tripotent");
    return r;
}

Element range_tripotent(const Element& a, double tol) {
    return range_tripotent(AtomicElement::lift(a), tol).part(0);
}

MinimalMultiple is_positive_multiple_of_minimal(const AtomicElement& a, double tol) {
    if (a.is_zero()) throw triple_error("is_positive_multiple_of_minimal: zero input");
    MinimalMultiple out;
    SpectralResolution res = resolve_impl(a, tol, /*full_checks=*/false);
    if (res.size() != 1) return out;
    if (!is_minimal(res.tripotents[0], 1e-7)) return out;
    out.is_minimal_multiple = true;
    out.scalar = res.lambdas[0];
    out.tripotent = res.tripotents[0];
    return out;
}

MinimalMultiple is_positive_multiple_of_minimal(const Element& a, double tol) {
    return is_positive_multiple_of_minimal(AtomicElement::lift(a), tol);
}

}  // namespace triplekit
