#include "triplekit/exactcheck.hpp"

#include <sstream>

#include "triplekit/factors.hpp"

namespace triplekit {

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}

std::string to_string(const GaussianRational& a) {
    std::ostringstream os;
    os << a.re.str();
    if (a.im != 0) os << (a.im > 0 ? "+" : "") << a.im.str() << "i";
    return os.str();
}

ExactElement::ExactElement(FactorDescriptor f, std::vector<GaussianRational> c)
    : factor(f), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != factor.complex_dim())
        throw triple_error("exact element coordinate length mismatch");
}

ExactElement ExactElement::zero(const FactorDescriptor& f) {
    return ExactElement(f, std::vector<GaussianRational>(f.complex_dim()));
}

ExactElement ExactElement::from_double(const Element& e) {
    std::vector<GaussianRational> c(e.coords.size());
    for (Eigen::Index i = 0; i < e.coords.size(); ++i)
        c[static_cast<size_t>(i)] =
            GaussianRational(Rational(e.coords(i).real()), Rational(e.coords(i).imag()));
    return ExactElement(e.factor, std::move(c));
}

Element ExactElement::to_double() const {
    Vec c(coords.size());
    for (size_t i = 0; i < coords.size(); ++i)
        c(static_cast<Eigen::Index>(i)) = cx(static_cast<double>(coords[i].re),
                                             static_cast<double>(coords[i].im));
    return Element(factor, std::move(c));
}

bool ExactElement::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

ExactElement operator+(const ExactElement& a, const ExactElement& b) {
    if (!(a.factor == b.factor)) throw triple_error("exact +: factor mismatch");
    ExactElement out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = out.coords[i] + b.coords[i];
    return out;
}

ExactElement operator-(const ExactElement& a, const ExactElement& b) {
    if (!(a.factor == b.factor)) throw triple_error("exact -: factor mismatch");
    ExactElement out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = out.coords[i] - b.coords[i];
    return out;
}

ExactElement operator*(const GaussianRational& lambda, const ExactElement& a) {
    ExactElement out = a;
    for (auto& c : out.coords) c = lambda * c;
    return out;
}

namespace {

using ExactMat = std::vector<std::vector<GaussianRational>>;

ExactMat zeros(int r, int c) { return ExactMat(r, std::vector<GaussianRational>(c)); }

ExactMat embed(const ExactElement& x) {
    const auto& f = x.factor;
    switch (f.kind) {
        case FactorKind::type1: {
            ExactMat m = zeros(f.m, f.n);
            int k = 0;
            for (int i = 0; i < f.m; ++i)
                for (int j = 0; j < f.n; ++j) m[i][j] = x.coords[k++];
            return m;
        }
        case FactorKind::type2: {
            ExactMat m = zeros(f.n, f.n);
            int k = 0;
            for (int i = 0; i < f.n; ++i)
                for (int j = i + 1; j < f.n; ++j) {
                    m[i][j] = x.coords[k];
                    m[j][i] = -x.coords[k];
                    ++k;
                }
            return m;
        }
        case FactorKind::type3: {
            ExactMat m = zeros(f.n, f.n);
            int k = 0;
            for (int i = 0; i < f.n; ++i)
                for (int j = i; j < f.n; ++j) {
                    m[i][j] = x.coords[k];
                    m[j][i] = x.coords[k];
                    ++k;
                }
            return m;
        }
        case FactorKind::spin: throw triple_error("exact embed: spin has no matrix embedding");
    }
    throw triple_error("exact embed: unknown kind");
}

ExactElement extract(const ExactMat& m, const FactorDescriptor& f) {
    std::vector<GaussianRational> c;
    switch (f.kind) {
        case FactorKind::type1:
            for (int i = 0; i < f.m; ++i)
                for (int j = 0; j < f.n; ++j) c.push_back(m[i][j]);
            break;
        case FactorKind::type2:
            for (int i = 0; i < f.n; ++i)
                for (int j = i + 1; j < f.n; ++j) c.push_back(m[i][j]);
            break;
        case FactorKind::type3:
            for (int i = 0; i < f.n; ++i)
                for (int j = i; j < f.n; ++j) c.push_back(m[i][j]);
            break;
        case FactorKind::spin: throw triple_error("exact extract: spin unsupported");
    }
    return ExactElement(f, std::move(c));
}

ExactMat mul(const ExactMat& a, const ExactMat& b) {
    const size_t r = a.size(), inner = b.size(), c = b[0].size();
    ExactMat out = zeros(static_cast<int>(r), static_cast<int>(c));
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < c; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

ExactMat adjoint(const ExactMat& a) {
    ExactMat out = zeros(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j].conjugate();
    return out;
}

ExactMat add(const ExactMat& a, const ExactMat& b) {
    ExactMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

GaussianRational half() { return GaussianRational(Rational(1, 2)); }

}  // namespace

ExactElement exact_triple_product(const ExactElement& x, const ExactElement& y,
                                  const ExactElement& z) {
    if (!(x.factor == y.factor) || !(x.factor == z.factor))
        throw triple_error("exact_triple_product: factor mismatch");
    if (x.factor.kind == FactorKind::spin) {
        GaussianRational xy, zy, xz;
        for (int i = 0; i < x.factor.n; ++i) {
            xy = xy + x.coords[i] * y.coords[i].conjugate();
            zy = zy + z.coords[i] * y.coords[i].conjugate();
            xz = xz + x.coords[i] * z.coords[i];  // <x | conj z>
        }
        std::vector<GaussianRational> c(x.factor.n);
        for (int i = 0; i < x.factor.n; ++i)
            c[i] = xy * z.coords[i] + zy * x.coords[i] - xz * y.coords[i].conjugate();
        return ExactElement(x.factor, std::move(c));
    }
    const ExactMat a = embed(x), bs = adjoint(embed(y)), cm = embed(z);
    const ExactMat p = add(mul(mul(a, bs), cm), mul(mul(cm, bs), a));
    ExactElement out = extract(p, x.factor);
    for (auto& coeff : out.coords) coeff = half() * coeff;
    return out;
}

namespace {

struct QuadrangleExact {
    ExactElement u1, u2, u3, u4;
};

QuadrangleExact standard_quadrangle_exact(int n) {
    const FactorDescriptor f = FactorDescriptor::type1(n, n);
    auto unit = [&](int i, int j) {
        ExactElement e = ExactElement::zero(f);
        e.coords[i * n + j] = GaussianRational(1);
        return e;
    };
    return {unit(0, 0), unit(0, 1), unit(1, 1), unit(1, 0)};
}

void check_quadrangle_constraints(const std::array<GaussianRational, 4>& p) {
    const auto& [a, b, c, d] = p;
    Rational unit = a.norm2() + b.norm2() + c.norm2() + d.norm2();
    if (unit != 1)
        throw triple_error("certify_quadrangle_lemma: point is not on the unit sphere");
    if (!((a * d - b * c).is_zero()))
        throw triple_error("certify_quadrangle_lemma: constraint a d - b c = 0 violated");
}

}  // namespace

LemmaCertificate certify_quadrangle_lemma(
    const std::vector<std::array<GaussianRational, 4>>& points) {
    LemmaCertificate cert;
    cert.lemma = "quadrangle";
    for (const auto& p : points) {
        check_quadrangle_constraints(p);
        const auto& [a, b, c, d] = p;
        PointCertificate pc;
        pc.coeffs = {a, b, c, d};
        pc.cube_identity = true;
        pc.second_identity = true;
        for (int n : {2, 3}) {
            const QuadrangleExact q = standard_quadrangle_exact(n);
            const ExactElement v = a * q.u1 + b * q.u2 + c * q.u4 + d * q.u3;
            const ExactElement vt = d.conjugate() * q.u1 + (-c.conjugate()) * q.u2 +
                                    (-b.conjugate()) * q.u4 + a.conjugate() * q.u3;
            pc.cube_identity =
                pc.cube_identity && (exact_triple_product(v, v, v) - v).is_zero();
            pc.second_identity = pc.second_identity && exact_triple_product(v, v, vt).is_zero();
        }
        cert.all_ok = cert.all_ok && pc.cube_identity && pc.second_identity;
        cert.points.push_back(std::move(pc));
    }
    return cert;
}

LemmaCertificate certify_trangle_lemma(
    const std::vector<std::array<GaussianRational, 3>>& points) {
    const FactorDescriptor f = FactorDescriptor::type3(2);
    // standard trangle (E11, E12 + E21, E22) in coordinates (a, b, d)
    ExactElement w1 = ExactElement::zero(f), u = ExactElement::zero(f),
                 w2 = ExactElement::zero(f);
    w1.coords[0] = GaussianRational(1);
    u.coords[1] = GaussianRational(1);
    w2.coords[2] = GaussianRational(1);

    LemmaCertificate cert;
    cert.lemma = "trangle";
    // proof identity u = 2 {w1, u, w2}, once per certificate
    const ExactElement two_w1uw2 =
        GaussianRational(2) * exact_triple_product(w1, u, w2);
    const bool trangle_identity = (two_w1uw2 - u).is_zero();

    for (const auto& p : points) {
        const auto& [a, b, d] = p;
        Rational unit = a.norm2() + 2 * b.norm2() + d.norm2();
        if (unit != 1)
            throw triple_error("certify_trangle_lemma: point is not on the constraint sphere");
        if (!((a * d - b * b).is_zero()))
            throw triple_error("certify_trangle_lemma: constraint a d - b^2 = 0 violated");
        PointCertificate pc;
        pc.coeffs = {a, b, d};
        const ExactElement v = a * w1 + b * u + d * w2;
        pc.cube_identity = (exact_triple_product(v, v, v) - v).is_zero();
        pc.second_identity = trangle_identity;
        cert.all_ok = cert.all_ok && pc.cube_identity && pc.second_identity;
        cert.points.push_back(std::move(pc));
    }
    return cert;
}

std::vector<std::array<GaussianRational, 4>> default_quadrangle_points() {
    using G = GaussianRational;
    const Rational h(1, 2);
    std::vector<std::array<G, 4>> pts;
    pts.push_back({G(h), G(h), G(h), G(h)});
    pts.push_back({G(Rational(3, 5)), G(Rational(4, 5)), G(0), G(0)});
    pts.push_back({G(1), G(0), G(0), G(0)});
    pts.push_back({G(0), G(1), G(0), G(0)});
    pts.push_back({G(0), G(0), G(0), G(1)});
    // products (ac, ad, bc, bd) of Pythagorean pairs (a,b) x (c,d)
    auto product_point = [](Rational a, Rational b, Rational c, Rational d) {
        return std::array<G, 4>{G(a * c), G(a * d), G(b * c), G(b * d)};
    };
    pts.push_back(product_point(Rational(3, 5), Rational(4, 5), Rational(5, 13), Rational(12, 13)));
    pts.push_back(product_point(Rational(8, 17), Rational(15, 17), Rational(3, 5), Rational(4, 5)));
    pts.push_back(product_point(Rational(5, 13), Rational(12, 13), Rational(8, 17), Rational(15, 17)));
    pts.push_back(product_point(Rational(7, 25), Rational(24, 25), Rational(3, 5), Rational(4, 5)));
    // complex points: (i a c, a d, i b c, b d) keeps both constraints
    pts.push_back({G(0, Rational(9, 25)), G(Rational(12, 25)), G(0, Rational(12, 25)),
                   G(Rational(16, 25))});
    pts.push_back({G(0, Rational(1, 2)), G(Rational(1, 2)), G(0, Rational(1, 2)),
                   G(Rational(1, 2))});
    pts.push_back({G(0, Rational(3, 13)), G(Rational(36, 65)), G(0, Rational(4, 13)),
                   G(Rational(48, 65))});
    return pts;
}

std::vector<std::array<GaussianRational, 3>> default_trangle_points() {
    using G = GaussianRational;
    std::vector<std::array<G, 3>> pts;
    // (p^2, p q, q^2) / (|p|^2 + |q|^2) for Gaussian-rational p, q
    auto family = [](const G& p, const G& q) {
        const Rational s = p.norm2() + q.norm2();
        const GaussianRational inv(Rational(1) / s);
        return std::array<G, 3>{inv * (p * p), inv * (p * q), inv * (q * q)};
    };
    pts.push_back({G(Rational(1, 2)), G(Rational(1, 2)), G(Rational(1, 2))});
    pts.push_back({G(1), G(0), G(0)});
    pts.push_back({G(0), G(0), G(1)});
    pts.push_back(family(G(1), G(2)));
    pts.push_back(family(G(1), G(3)));
    pts.push_back(family(G(2), G(3)));
    pts.push_back(family(G(1), G(0, 1)));       // q = i
    pts.push_back(family(G(1, 1), G(1)));       // p = 1 + i
    pts.push_back(family(G(2, 1), G(1)));       // p = 2 + i
    pts.push_back(family(G(1), G(1, 2)));       // q = 1 + 2i
    pts.push_back({G(Rational(1, 2)), G(Rational(-1, 2)), G(Rational(1, 2))});
    return pts;
}

namespace {

// (p1 + q1 sqrt2) + i (p2 + q2 sqrt2), all rational: a dense Q-submodule of C
// closed under multiplication and conjugation.
struct ModulePoint {
    Rational p1, q1, p2, q2;

    bool operator==(const ModulePoint& o) const {
        return p1 == o.p1 && q1 == o.q1 && p2 == o.p2 && q2 == o.q2;
    }
    bool is_zero() const { return p1 == 0 && q1 == 0 && p2 == 0 && q2 == 0; }
};

ModulePoint wild_f(const ModulePoint& x) {
    // swap the (1, sqrt2) coordinates in both real and imaginary parts
    return {x.q1, x.p1, x.q2, x.p2};
}

// In C a truncation pair means {x,y,x} = {x,x,x}, i.e. x^2 conj(y) = x^2 conj(x);
// equivalently x = 0 or y = x.
bool is_truncation_in_C(const ModulePoint& x, const ModulePoint& y) {
    return x.is_zero() || x == y;
}

}  // namespace

WildDemoReport wild_additive_demo(int min_pairs) {
    WildDemoReport rep;
    std::vector<ModulePoint> sample;
    const Rational vals[] = {Rational(0), Rational(1), Rational(-1), Rational(1, 2),
                             Rational(2)};
    for (const auto& p1 : vals)
        for (const auto& q1 : vals)
            for (const auto& p2 : {Rational(0), Rational(1), Rational(-3, 2)})
                sample.push_back({p1, q1, p2, q1 - p2});

    bool ok = true;
    int pairs = 0;
    for (size_t i = 0; i < sample.size() && pairs < min_pairs + 64; ++i) {
        for (size_t j = 0; j < sample.size() && pairs < min_pairs + 64; ++j) {
            const ModulePoint &x = sample[i], &y = sample[j];
            // make sure genuine truncation pairs are represented
            const bool before = is_truncation_in_C(x, y);
            const bool after = is_truncation_in_C(wild_f(x), wild_f(y));
            ok = ok && (before == after);
            ++pairs;
        }
    }
    // explicit truncation pairs (x, x) and (0, y)
    for (const auto& x : sample) {
        ok = ok && is_truncation_in_C(wild_f(x), wild_f(x));
        ok = ok && is_truncation_in_C(ModulePoint{}, wild_f(x));
        ++pairs;
    }
    rep.pairs_checked = pairs;
    rep.preserved_both_directions = ok;

    // R-linearity violation: sqrt2 * 1 = (0,1,0,0); f of it is (1,0,0,0) = 1,
    // while sqrt2 * f(1) = sqrt2 * sqrt2 = 2. Exact mismatch 1 != 2.
    const ModulePoint one{1, 0, 0, 0};
    const ModulePoint sqrt2_times_one{0, 1, 0, 0};
    const ModulePoint lhs = wild_f(sqrt2_times_one);           // f(sqrt2 * 1)
    const ModulePoint f_one = wild_f(one);                     // f(1) = sqrt2
    const ModulePoint rhs{2 * f_one.q1, f_one.p1, 2 * f_one.q2, f_one.p2};  // sqrt2 * f(1)
    rep.linearity_violation_found = !(lhs == rhs);
    rep.violation =
        "f(sqrt2*1) = 1 but sqrt2*f(1) = 2 in module coordinates (1,0,0,0) vs (2,0,0,0)";
    return rep;
}

}  // namespace triplekit
