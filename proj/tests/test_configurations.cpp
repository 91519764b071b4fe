#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triplekit/configurations.hpp"
#include "triplekit/factors.hpp"

using namespace triplekit;

namespace {
const FactorDescriptor m22 = FactorDescriptor::type1(2, 2);
Element mu(int i, int j) { return matrix_unit(m22, i, j); }
}  // namespace

TEST_CASE("standard configurations validate") {
    for (const auto& f : {FactorDescriptor::type1(2, 2), FactorDescriptor::type1(3, 3),
                          FactorDescriptor::type2(4), FactorDescriptor::spin(4),
                          FactorDescriptor::spin(5)})
        CHECK(validate_quadrangle(standard_quadrangle(f)).pass);
    for (const auto& f : {FactorDescriptor::type3(2), FactorDescriptor::type3(3),
                          FactorDescriptor::spin(3), FactorDescriptor::spin(5)})
        CHECK(validate_trangle(standard_trangle(f)).pass);
}

TEST_CASE("standard configuration rejections") {
    CHECK_THROWS_AS(standard_quadrangle(FactorDescriptor::type1(1, 5)), triple_error);
    CHECK_THROWS_AS(standard_quadrangle(FactorDescriptor::type3(3)), triple_error);
    CHECK_THROWS_AS(standard_quadrangle(FactorDescriptor::spin(3)), triple_error);
    CHECK_THROWS_AS(standard_trangle(FactorDescriptor::type1(2, 2)), triple_error);
    CHECK_THROWS_AS(standard_trangle(FactorDescriptor::type3(1)), triple_error);
}

TEST_CASE("M2 quadrangle and a broken one") {
    const Quadrangle q{mu(0, 0), mu(0, 1), mu(1, 1), mu(1, 0)};
    CHECK(validate_quadrangle(q).pass);
    // u2 not orthogonal to u4
    const Quadrangle bad{mu(0, 0), mu(0, 1), mu(1, 1), mu(0, 1)};
    CHECK(!validate_quadrangle(bad).pass);
}

TEST_CASE("quadrangle combos") {
    const Quadrangle q = standard_quadrangle(m22);
    // all-half coefficients give the minimal projection (1,1;1,1)/2
    const Element v = quadrangle_combo(q, 0.5, 0.5, 0.5, 0.5);
    const Element expect = 0.5 * (mu(0, 0) + mu(0, 1) + mu(1, 0) + mu(1, 1));
    CHECK(coord_norm(v - expect) <= 1e-12);

    // (3/5, 4/5, 0, 0): a unit row vector
    const Element v2 = quadrangle_combo(q, 0.6, 0.8, 0.0, 0.0);
    CHECK(coord_norm(v2 - (0.6 * mu(0, 0) + 0.8 * mu(0, 1))) <= 1e-12);
    CHECK(is_minimal(v2));

    // (1,0,0,0) returns u1
    CHECK(coord_norm(quadrangle_combo(q, 1, 0, 0, 0) - q.u1) == 0.0);

    CHECK_THROWS_AS(quadrangle_combo(q, 0.9, 0.1, 0.3, 0.2), triple_error);
}

TEST_CASE("quadrangle orthocomplement") {
    const Quadrangle q = standard_quadrangle(m22);
    const Element vt = quadrangle_orthocomplement(q, 0.5, 0.5, 0.5, 0.5);
    const Element expect = 0.5 * (mu(0, 0) + mu(1, 1)) - 0.5 * (mu(0, 1) + mu(1, 0));
    CHECK(coord_norm(vt - expect) <= 1e-12);
    CHECK(coord_norm(quadrangle_orthocomplement(q, 1, 0, 0, 0) - q.u3) == 0.0);
    CHECK(coord_norm(quadrangle_orthocomplement(q, 0, 1, 0, 0) + q.u4) == 0.0);
}

TEST_CASE("trangle combos on S2") {
    const Trangle t = standard_trangle(FactorDescriptor::type3(2));
    const Element vplus = trangle_combo(t, 0.5, 0.5, 0.5);
    const Element vminus = trangle_combo(t, 0.5, -0.5, 0.5);
    CHECK(is_minimal(vplus));
    CHECK(is_minimal(vminus));
    CHECK(are_orthogonal(vplus, vminus));
    CHECK(coord_norm(trangle_combo(t, 1, 0, 0) - t.w1) == 0.0);
    CHECK_THROWS_AS(trangle_combo(t, 0, 1, 0), triple_error);  // a d != b^2
}

TEST_CASE("trangle proof identity u = 2{w1,u,w2}") {
    for (const auto& f : {FactorDescriptor::type3(2), FactorDescriptor::type3(3),
                          FactorDescriptor::spin(4)}) {
        const Trangle t = standard_trangle(f.kind == FactorKind::spin ? f
                                                                      : FactorDescriptor::type3(f.n));
        CHECK(coord_norm(t.u - 2.0 * triple_product(t.w1, t.u, t.w2)) <= 1e-12);
    }
}

TEST_CASE("random constrained combos stay (minimal) tripotents") {
    SplitRng rng(11);
    const Quadrangle q = standard_quadrangle(m22);
    const Trangle tr = standard_trangle(FactorDescriptor::type3(2));
    for (int t = 0; t < 60; ++t) {
        const auto [a, b, c, d] = sample_quadrangle_coeffs(rng);
        const Element v = a * q.u1 + b * q.u2 + c * q.u4 + d * q.u3;
        CHECK(coord_norm(triple_product(v, v, v) - v) <= 1e-10);
        const Element vt = std::conj(d) * q.u1 - std::conj(c) * q.u2 - std::conj(b) * q.u4 +
                           std::conj(a) * q.u3;
        CHECK(coord_norm(triple_product(v, v, vt)) <= 1e-10);
        CHECK(is_minimal(v, 1e-8));

        const auto [ta, tb, td] = sample_trangle_coeffs(rng);
        const Element tv = ta * tr.w1 + tb * tr.u + td * tr.w2;
        CHECK(coord_norm(triple_product(tv, tv, tv) - tv) <= 1e-10);
        CHECK(is_minimal(tv, 1e-8));
    }
}

TEST_CASE("spin quadrangle combos propagate minimality") {
    SplitRng rng(13);
    const Quadrangle q = standard_quadrangle(FactorDescriptor::spin(5));
    for (int t = 0; t < 30; ++t) {
        const auto [a, b, c, d] = sample_quadrangle_coeffs(rng);
        const Element v = a * q.u1 + b * q.u2 + c * q.u4 + d * q.u3;
        CHECK(coord_norm(triple_product(v, v, v) - v) <= 1e-10);
        CHECK(is_minimal(v, 1e-8));
    }
}
