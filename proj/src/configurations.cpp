#include "triplekit/configurations.hpp"

#include "triplekit/factors.hpp"

namespace triplekit {

void ConfigReport::add(const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    checks.push_back({name, residual, ok});
    pass = pass && ok;
}

namespace {

double tripotent_resid(const Element& e) {
    return coord_norm(triple_product(e, e, e) - e);
}

double orthogonality_resid(const Element& x, const Element& y) {
    return operator_norm(L_operator(x, y));
}

// distance of x from the half-eigenspace of L(v,v); both must be tripotents
double collinearity_resid(const Element& x, const Element& v) {
    const Element l = triple_product(v, v, x);
    const Element ll = triple_product(v, v, l);
    const Element p1 = (-4.0 * ll) + (4.0 * l);
    return coord_norm(p1 - x);
}

double governs_resid(const Element& u, const Element& w) {
    // w in E_2(u): P_2(u) w = w
    const Element l = triple_product(u, u, w);
    const Element ll = triple_product(u, u, l);
    const Element p2 = (2.0 * ll) - l;
    const double r1 = coord_norm(p2 - w);
    return std::max(r1, collinearity_resid(u, w));
}

}  // namespace

ConfigReport validate_quadrangle(const Quadrangle& q, double tol) {
    ConfigReport r;
    r.add("u1 tripotent", tripotent_resid(q.u1), tol);
    r.add("u2 tripotent", tripotent_resid(q.u2), tol);
    r.add("u3 tripotent", tripotent_resid(q.u3), tol);
    r.add("u4 tripotent", tripotent_resid(q.u4), tol);
    r.add("u1 _|_ u3", orthogonality_resid(q.u1, q.u3), tol);
    r.add("u2 _|_ u4", orthogonality_resid(q.u2, q.u4), tol);
    r.add("u1 T u2", std::max(collinearity_resid(q.u1, q.u2), collinearity_resid(q.u2, q.u1)),
          tol);
    r.add("u2 T u3", std::max(collinearity_resid(q.u2, q.u3), collinearity_resid(q.u3, q.u2)),
          tol);
    r.add("u3 T u4", std::max(collinearity_resid(q.u3, q.u4), collinearity_resid(q.u4, q.u3)),
          tol);
    r.add("u4 T u1", std::max(collinearity_resid(q.u4, q.u1), collinearity_resid(q.u1, q.u4)),
          tol);
    r.add("u4 = 2{u1,u2,u3}",
          coord_norm(q.u4 - 2.0 * triple_product(q.u1, q.u2, q.u3)), tol);
    return r;
}

ConfigReport validate_trangle(const Trangle& t, double tol) {
    ConfigReport r;
    r.add("w1 tripotent", tripotent_resid(t.w1), tol);
    r.add("u tripotent", tripotent_resid(t.u), tol);
    r.add("w2 tripotent", tripotent_resid(t.w2), tol);
    r.add("w1 _|_ w2", orthogonality_resid(t.w1, t.w2), tol);
    r.add("u governs w1", governs_resid(t.u, t.w1), tol);
    r.add("u governs w2", governs_resid(t.u, t.w2), tol);
    r.add("w1 = Q(u) w2", coord_norm(t.w1 - triple_product(t.u, t.w2, t.u)), tol);
    return r;
}

namespace {

void require_valid(const ConfigReport& r, const char* what) {
    if (!r.pass) {
        std::string msg = std::string(what) + ": configuration invalid (";
        for (const auto& c : r.checks)
            if (!c.pass) msg += c.name + " residual " + std::to_string(c.residual) + "; ";
        msg += ")";
        throw triple_error(msg);
    }
}

void check_minimal_combo(const Element& v, bool ends_minimal) {
    if (!is_tripotent(v, 1e-8))
        throw triple_error("configuration combo: result is not a tripotent");
    if (ends_minimal && !is_minimal(v, 1e-8))
        throw triple_error("configuration combo: result should be minimal but is not");
}

}  // namespace

Element quadrangle_combo(const Quadrangle& q, cx a, cx b, cx c, cx d, double tol) {
    const double unit = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (std::abs(unit - 1.0) > tol)
        throw triple_error("quadrangle_combo: coefficients are not on the unit sphere");
    if (std::abs(a * d - b * c) > tol)
        throw triple_error("quadrangle_combo: constraint a d - b c = 0 violated");
    require_valid(validate_quadrangle(q), "quadrangle_combo");
    const Element v = a * q.u1 + b * q.u2 + c * q.u4 + d * q.u3;
    check_minimal_combo(v, is_minimal(q.u1) && is_minimal(q.u3));
    return v;
}

Element quadrangle_orthocomplement(const Quadrangle& q, cx a, cx b, cx c, cx d, double tol) {
    const double unit = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    if (std::abs(unit - 1.0) > tol)
        throw triple_error("quadrangle_orthocomplement: coefficients are not on the unit sphere");
    if (std::abs(a * d - b * c) > tol)
        throw triple_error("quadrangle_orthocomplement: constraint a d - b c = 0 violated");
    require_valid(validate_quadrangle(q), "quadrangle_orthocomplement");
    const Element vt = std::conj(d) * q.u1 + (-std::conj(c)) * q.u2 + (-std::conj(b)) * q.u4 +
                       std::conj(a) * q.u3;
    if (!is_tripotent(vt, 1e-8))
        throw triple_error("quadrangle_orthocomplement: companion is not a tripotent");
    const Element v = a * q.u1 + b * q.u2 + c * q.u4 + d * q.u3;
    if (!are_orthogonal(v, vt, 1e-8))
        throw triple_error("quadrangle_orthocomplement: companion is not orthogonal to v");
    return vt;
}

Element trangle_combo(const Trangle& t, cx a, cx b, cx d, double tol) {
    const double unit = std::norm(a) + 2.0 * std::norm(b) + std::norm(d);
    if (std::abs(unit - 1.0) > tol)
        throw triple_error("trangle_combo: coefficients are not on the constraint sphere");
    if (std::abs(a * d - b * b) > tol)
        throw triple_error("trangle_combo: constraint a d - b^2 = 0 violated");
    require_valid(validate_trangle(t), "trangle_combo");
    const Element v = a * t.w1 + b * t.u + d * t.w2;
    check_minimal_combo(v, is_minimal(t.w1) && is_minimal(t.w2));
    return v;
}

Quadrangle standard_quadrangle(const FactorDescriptor& f) {
    switch (f.kind) {
        case FactorKind::type1: {
            if (f.m < 2 || f.n < 2)
                throw triple_error("standard_quadrangle: " + to_string(f) +
                                   " has rank 1 or no quadrangle");
            return Quadrangle{matrix_unit(f, 0, 0), matrix_unit(f, 0, 1), matrix_unit(f, 1, 1),
                              matrix_unit(f, 1, 0)};
        }
        case FactorKind::type2: {
            if (f.n < 4)
                throw triple_error("standard_quadrangle: " + to_string(f) +
                                   " hosts no quadrangle of minimal tripotents");
            // (a12, a13, a34, a24) with a_ij = E_ij - E_ji
            return Quadrangle{matrix_unit(f, 0, 1), matrix_unit(f, 0, 2), matrix_unit(f, 2, 3),
                              matrix_unit(f, 1, 3)};
        }
        case FactorKind::type3:
            throw triple_error("standard_quadrangle: type 3 minimal tripotents form trangles, "
                               "not quadrangles");
        case FactorKind::spin: {
            if (f.n < 4)
                throw triple_error("standard_quadrangle: spin quadrangles need dimension >= 4");
            Vec e1 = Vec::Zero(f.n), e2 = Vec::Zero(f.n), e3 = Vec::Zero(f.n), e4 = Vec::Zero(f.n);
            e1(0) = cx(0.5, 0);
            e1(1) = cx(0, 0.5);
            e2(2) = cx(0.5, 0);
            e2(3) = cx(0, 0.5);
            e3(0) = cx(0.5, 0);
            e3(1) = cx(0, -0.5);
            e4(2) = cx(-0.5, 0);
            e4(3) = cx(0, 0.5);
            return Quadrangle{Element(f, e1), Element(f, e2), Element(f, e3), Element(f, e4)};
        }
    }
    throw triple_error("standard_quadrangle: unknown factor kind");
}

Trangle standard_trangle(const FactorDescriptor& f) {
    switch (f.kind) {
        case FactorKind::type3: {
            if (f.n < 2) throw triple_error("standard_trangle: type3(1) has rank 1");
            return Trangle{matrix_unit(f, 0, 0), matrix_unit(f, 0, 1), matrix_unit(f, 1, 1)};
        }
        case FactorKind::spin: {
            Vec w1 = Vec::Zero(f.n), u = Vec::Zero(f.n), w2 = Vec::Zero(f.n);
            w1(0) = cx(0.5, 0);
            w1(1) = cx(0, 0.5);
            u(2) = cx(0, 1);
            w2(0) = cx(0.5, 0);
            w2(1) = cx(0, -0.5);
            return Trangle{Element(f, w1), Element(f, u), Element(f, w2)};
        }
        default:
            throw triple_error("standard_trangle: trangles live in type 3 and spin factors");
    }
}

std::array<cx, 4> sample_quadrangle_coeffs(SplitRng& rng) {
    cx a = rng.normal_cx(), b = rng.normal_cx(), c = rng.normal_cx(), d;
    if (std::abs(a) > 0.2) {
        d = b * c / a;
    } else {
        // degenerate branch: a = 0 forces b c = 0; zero the smaller of b, c
        a = cx(0, 0);
        if (std::abs(b) < std::abs(c)) b = cx(0, 0);
        else c = cx(0, 0);
        d = rng.normal_cx();
    }
    const double s = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    return {a / s, b / s, c / s, d / s};
}

std::array<cx, 3> sample_trangle_coeffs(SplitRng& rng) {
    // (a, b, d) = (p^2, p q, q^2)/s satisfies a d = b^2 for any complex p, q
    const cx p = rng.normal_cx(), q = rng.normal_cx();
    cx a = p * p, b = p * q, d = q * q;
    const double s = std::sqrt(std::norm(a) + 2.0 * std::norm(b) + std::norm(d));
    if (s == 0.0) return {cx(1, 0), cx(0, 0), cx(0, 0)};
    return {a / s, b / s, d / s};
}

}  // namespace triplekit
