#include "triplekit/rng.hpp"

#include <cmath>

#include <Eigen/QR>

#include "triplekit/factors.hpp"

namespace triplekit {

namespace {

// splitmix64 step; portable and deterministic, unlike std:: distributions.
uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    uint64_t x = z;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

SplitRng SplitRng::stream(uint64_t index) const {
    return SplitRng(mix(state_ + 0x632be59bd9b4e019ull * (index + 1)));
}

uint64_t SplitRng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double SplitRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SplitRng::uniform_int(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

double SplitRng::normal() {
    // Box-Muller; one value per call keeps streams simple to reason about.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

cx SplitRng::normal_cx() { return cx(normal(), normal()) / std::sqrt(2.0); }

cx SplitRng::unit_phase() {
    const double t = 2.0 * M_PI * uniform();
    return cx(std::cos(t), std::sin(t));
}

Element random_element(SplitRng& rng, const FactorDescriptor& f) {
    Vec c(f.complex_dim());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.normal_cx();
    return Element(f, std::move(c));
}

AtomicElement random_element(SplitRng& rng, const AtomicTriple& t) {
    Vec c(t.complex_dim());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.normal_cx();
    return AtomicElement(t, std::move(c));
}

Mat random_unitary(SplitRng& rng, int n) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal_cx();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        cx d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0) ? d / a : cx(1, 0);
    }
    return q;
}

RMat random_orthogonal(SplitRng& rng, int n) {
    RMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<RMat> qr(g);
    RMat q = qr.householderQ();
    RMat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);
    return q;
}

namespace {

Element spin_minimal(const Vec& f, const Vec& g, cx phase) {
    // phase * (f + i g)/2 with f, g real orthonormal.
    Vec c = 0.5 * phase * (f + cx(0, 1) * g);
    return Element(FactorDescriptor::spin(static_cast<int>(f.size())), std::move(c));
}

}  // namespace

Element random_tripotent(SplitRng& rng, const FactorDescriptor& f, int rank) {
    if (rank < 1 || rank > f.max_rank())
        throw triple_error("random_tripotent: rank out of range for " + to_string(f));
    switch (f.kind) {
        case FactorKind::type1: {
            Mat u = random_unitary(rng, f.m);
            Mat v = random_unitary(rng, f.n);
            Mat e = Mat::Zero(f.m, f.n);
            for (int r = 0; r < rank; ++r) e += u.col(r) * v.col(r).adjoint();
            return project_matrix(e, f);
        }
        case FactorKind::type2: {
            Mat u = random_unitary(rng, f.n);
            Mat e = Mat::Zero(f.n, f.n);
            for (int r = 0; r < rank; ++r) {
                const auto a = u.col(2 * r), b = u.col(2 * r + 1);
                e += a * b.transpose() - b * a.transpose();
            }
            return project_matrix(e, f);
        }
        case FactorKind::type3: {
            Mat u = random_unitary(rng, f.n);
            Mat e = Mat::Zero(f.n, f.n);
            for (int r = 0; r < rank; ++r) e += u.col(r) * u.col(r).transpose();
            return project_matrix(e, f);
        }
        case FactorKind::spin: {
            RMat o = random_orthogonal(rng, f.n);
            if (rank == 1) return spin_minimal(o.col(0), o.col(1), rng.unit_phase());
            // rank 2: phase * (real unit vector)
            Vec c = rng.unit_phase() * o.col(0).cast<cx>();
            return Element(f, std::move(c));
        }
    }
    throw triple_error("random_tripotent: unknown factor kind");
}

Element random_tripotent(SplitRng& rng, const FactorDescriptor& f) {
    return random_tripotent(rng, f, rng.uniform_int(1, f.max_rank()));
}

Element random_minimal_tripotent(SplitRng& rng, const FactorDescriptor& f) {
    return random_tripotent(rng, f, 1);
}

bool has_collinear_minimal_pair(const FactorDescriptor& f) {
    switch (f.kind) {
        case FactorKind::type1: return f.m >= 2 || f.n >= 2;
        case FactorKind::type2: return f.n >= 3;
        case FactorKind::type3: return false;  // type 3 minimals are never collinear
        case FactorKind::spin: return f.n >= 4;
    }
    return false;
}

std::pair<Element, Element> random_collinear_minimal_pair(SplitRng& rng,
                                                          const FactorDescriptor& f) {
    if (!has_collinear_minimal_pair(f))
        throw triple_error("no collinear minimal pair exists in " + to_string(f));
    switch (f.kind) {
        case FactorKind::type1: {
            Mat u = random_unitary(rng, f.m);
            Mat v = random_unitary(rng, f.n);
            const bool share_row = f.n >= 2 && (f.m < 2 || rng.uniform() < 0.5);
            Mat e1, e2;
            if (share_row) {
                e1 = u.col(0) * v.col(0).adjoint();
                e2 = u.col(0) * v.col(1).adjoint();
            } else {
                e1 = u.col(0) * v.col(0).adjoint();
                e2 = u.col(1) * v.col(0).adjoint();
            }
            return {project_matrix(e1, f), project_matrix(e2, f)};
        }
        case FactorKind::type2: {
            Mat u = random_unitary(rng, f.n);
            const auto a = u.col(0), b = u.col(1), c = u.col(2);
            Mat e1 = a * b.transpose() - b * a.transpose();
            Mat e2 = a * c.transpose() - c * a.transpose();
            return {project_matrix(e1, f), project_matrix(e2, f)};
        }
        case FactorKind::spin: {
            RMat o = random_orthogonal(rng, f.n);
            return {spin_minimal(o.col(0), o.col(1), rng.unit_phase()),
                    spin_minimal(o.col(2), o.col(3), rng.unit_phase())};
        }
        default: break;
    }
    throw triple_error("random_collinear_minimal_pair: unsupported factor");
}

std::pair<Element, Element> random_orthogonal_minimal_pair(SplitRng& rng,
                                                           const FactorDescriptor& f) {
    if (f.max_rank() < 2)
        throw triple_error("no orthogonal minimal pair exists in " + to_string(f));
    switch (f.kind) {
        case FactorKind::type1: {
            Mat u = random_unitary(rng, f.m);
            Mat v = random_unitary(rng, f.n);
            return {project_matrix(Mat(u.col(0) * v.col(0).adjoint()), f),
                    project_matrix(Mat(u.col(1) * v.col(1).adjoint()), f)};
        }
        case FactorKind::type2: {
            Mat u = random_unitary(rng, f.n);
            const auto a = u.col(0), b = u.col(1), c = u.col(2), d = u.col(3);
            Mat e1 = a * b.transpose() - b * a.transpose();
            Mat e2 = c * d.transpose() - d * c.transpose();
            return {project_matrix(e1, f), project_matrix(e2, f)};
        }
        case FactorKind::type3: {
            Mat u = random_unitary(rng, f.n);
            Mat e1 = u.col(0) * u.col(0).transpose();
            Mat e2 = u.col(1) * u.col(1).transpose();
            return {project_matrix(e1, f), project_matrix(e2, f)};
        }
        case FactorKind::spin: {
            RMat o = random_orthogonal(rng, f.n);
            Vec fv = o.col(0).cast<cx>(), gv = o.col(1).cast<cx>();
            Element e1 = spin_minimal(o.col(0), o.col(1), rng.unit_phase());
            // conjugate partner (f - i g)/2 with an independent phase
            Vec c2 = 0.5 * rng.unit_phase() * (fv - cx(0, 1) * gv);
            return {e1, Element(f, std::move(c2))};
        }
    }
    throw triple_error("random_orthogonal_minimal_pair: unsupported factor");
}

}  // namespace triplekit
