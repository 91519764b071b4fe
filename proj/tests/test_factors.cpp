#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triplekit/factors.hpp"
#include "triplekit/json_io.hpp"
#include "triplekit/rng.hpp"

using namespace triplekit;

namespace {

const FactorDescriptor m22 = FactorDescriptor::type1(2, 2);

Element mu(int i, int j) { return matrix_unit(m22, i, j); }

}  // namespace

TEST_CASE("tripotent cube in M2") {
    const Element e11 = mu(0, 0);
    CHECK(coord_norm(triple_product(e11, e11, e11) - e11) == doctest::Approx(0.0));
}

TEST_CASE("paper pair: {e,w,e} = 0 and {w,e,w} = E22") {
    const Element e = mu(0, 0);
    const Element w = mu(0, 1) + mu(1, 0);
    CHECK(coord_norm(triple_product(e, w, e)) == 0.0);
    CHECK(coord_norm(triple_product(w, e, w) - mu(1, 1)) == 0.0);
}

TEST_CASE("spin minimal tripotent cube") {
    const FactorDescriptor sp = FactorDescriptor::spin(3);
    Vec c(3);
    c << cx(0.5, 0), cx(0, 0.5), cx(0, 0);
    const Element e(sp, c);
    CHECK(coord_norm(triple_product(e, e, e) - e) < 1e-15);
}

TEST_CASE("factor norms") {
    // diag(3,1) has operator norm 3
    Vec d(4);
    d << cx(3, 0), cx(0, 0), cx(0, 0), cx(1, 0);
    CHECK(factor_norm(Element(m22, d)) == doctest::Approx(3.0));

    const FactorDescriptor sp = FactorDescriptor::spin(3);
    Vec u = Vec::Zero(3);
    u(0) = cx(1, 0);
    CHECK(factor_norm(Element(sp, u)) == doctest::Approx(1.0));

    // (sqrt2, sqrt2 i, 0) = 2 sqrt2 * (1,i,0)/2; the spin formula gives
    // sigma = 4, tau = 0, so ||x||^2 = 4 + sqrt(16) = 8
    Vec x = Vec::Zero(3);
    x(0) = cx(std::sqrt(2.0), 0);
    x(1) = cx(0, std::sqrt(2.0));
    CHECK(factor_norm(Element(sp, x)) == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("sum norm is the max over parts") {
    const AtomicTriple t =
        AtomicTriple::of({m22, FactorDescriptor::type3(2), FactorDescriptor::spin(3)});
    SplitRng rng(3);
    AtomicElement x = random_element(rng, t);
    double expected = 0.0;
    for (int k = 0; k < t.parts(); ++k) expected = std::max(expected, factor_norm(x.part(k)));
    CHECK(sum_norm(x) == doctest::Approx(expected));
    CHECK(sum_norm(AtomicElement::zero(t)) == 0.0);
    // single factor sum matches factor_norm
    const AtomicElement single = AtomicElement::lift(x.part(0));
    CHECK(sum_norm(single) == doctest::Approx(factor_norm(x.part(0))));
}

TEST_CASE("embed/project round trips and constraint rejection") {
    const FactorDescriptor t3 = FactorDescriptor::type3(2);
    Vec c(3);
    c << cx(1, 2), cx(-0.5, 0), cx(3, 0);
    const Element a(t3, c);
    const Mat m = embed_matrix(a);
    CHECK(m(0, 1) == m(1, 0));
    CHECK(coord_norm(project_matrix(m, t3) - a) == 0.0);

    const FactorDescriptor t2 = FactorDescriptor::type2(3);
    Vec c2(3);
    c2 << cx(1, 0), cx(0, 2), cx(-1, 1);
    const Element b(t2, c2);
    const Mat m2 = embed_matrix(b);
    CHECK((m2 + m2.transpose()).norm() == 0.0);
    CHECK(coord_norm(project_matrix(m2, t2) - b) == 0.0);

    Mat bad(2, 2);
    bad << cx(0, 0), cx(1, 0), cx(2, 0), cx(0, 0);
    CHECK_THROWS_AS(project_matrix(bad, t3), triple_error);
    CHECK_THROWS_AS(embed_matrix(Element::zero(FactorDescriptor::spin(3))), triple_error);
}

TEST_CASE("triple product symmetry, linearity, closure, Gelfand-Naimark") {
    SplitRng root(17);
    const std::vector<FactorDescriptor> kinds = {
        FactorDescriptor::type1(3, 2), FactorDescriptor::type2(5), FactorDescriptor::type3(4),
        FactorDescriptor::spin(8)};
    for (const auto& f : kinds) {
        for (int t = 0; t < 40; ++t) {
            SplitRng rng = root.stream(t);
            const Element x = random_element(rng, f);
            const Element y = random_element(rng, f);
            const Element z = random_element(rng, f);
            const double scale =
                std::max(1.0, coord_norm(x) * coord_norm(y) * coord_norm(z));
            // outer symmetry
            CHECK(coord_norm(triple_product(x, y, z) - triple_product(z, y, x)) <=
                  1e-10 * scale);
            // linearity in slots 1 and 3, conjugate-linearity in slot 2
            const cx lam = rng.normal_cx();
            CHECK(coord_norm(triple_product(lam * x, y, z) - lam * triple_product(x, y, z)) <=
                  1e-10 * std::abs(lam) * scale);
            CHECK(coord_norm(triple_product(x, lam * y, z) -
                             std::conj(lam) * triple_product(x, y, z)) <=
                  1e-10 * std::abs(lam) * scale);
            // Gelfand-Naimark
            const double nx = factor_norm(x);
            if (nx > 1e-6)
                CHECK(std::abs(factor_norm(triple_product(x, x, x)) - nx * nx * nx) <=
                      1e-8 * nx * nx * nx);
        }
    }
}

TEST_CASE("types 2/3 closure before projection") {
    SplitRng root(23);
    for (const auto& f : {FactorDescriptor::type2(5), FactorDescriptor::type3(4)}) {
        for (int t = 0; t < 25; ++t) {
            SplitRng rng = root.stream(t);
            const Mat a = embed_matrix(random_element(rng, f));
            const Mat b = embed_matrix(random_element(rng, f));
            const Mat c = embed_matrix(random_element(rng, f));
            const Mat p = 0.5 * (a * b.adjoint() * c + c * b.adjoint() * a);
            const Mat sym = f.kind == FactorKind::type2 ? Mat(p + p.transpose())
                                                        : Mat(p - p.transpose());
            CHECK(sym.norm() <= 1e-12 * std::max(1.0, p.norm()));
        }
    }
}

TEST_CASE("element json round trip is bit exact") {
    SplitRng rng(5);
    for (const auto& f : {FactorDescriptor::type1(2, 3), FactorDescriptor::spin(4)}) {
        const Element x = random_element(rng, f);
        const njson j = njson::parse(to_json(x).dump());
        const Element back = element_from_json(j);
        CHECK(back.factor == x.factor);
        for (Eigen::Index i = 0; i < x.coords.size(); ++i) {
            CHECK(back.coords(i).real() == x.coords(i).real());
            CHECK(back.coords(i).imag() == x.coords(i).imag());
        }
    }
    const AtomicTriple t = AtomicTriple::of({m22, FactorDescriptor::type2(3)});
    const AtomicElement x = random_element(rng, t);
    const AtomicElement back = atomic_element_from_json(njson::parse(to_json(x).dump()));
    CHECK(coord_norm(back - x) == 0.0);
}

TEST_CASE("factor mismatch raises") {
    const Element a = mu(0, 0);
    const Element b = Element::zero(FactorDescriptor::type1(2, 3));
    CHECK_THROWS_AS(triple_product(a, b, a), triple_error);
}

TEST_CASE("spin factor requires dimension three") {
    CHECK_THROWS_AS(FactorDescriptor::spin(2), triple_error);
}
