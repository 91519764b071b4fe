#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "triplekit/factors.hpp"
#include "triplekit/peirce.hpp"
#include "triplekit/rng.hpp"

using namespace triplekit;

namespace {
const FactorDescriptor m22 = FactorDescriptor::type1(2, 2);
Element mu(int i, int j) { return matrix_unit(m22, i, j); }
}  // namespace

TEST_CASE("is_tripotent basics") {
    CHECK(is_tripotent(mu(0, 0)));
    CHECK(!is_tripotent(2.0 * mu(0, 0)));
    // (e1+e2+e3+e4)/2 is a minimal tripotent
    const Element w = 0.5 * (mu(0, 0) + mu(0, 1) + mu(1, 0) + mu(1, 1));
    CHECK(is_tripotent(w));
    CHECK(is_minimal(w));
    // spin minimal
    const FactorDescriptor sp = FactorDescriptor::spin(3);
    Vec c(3);
    c << cx(0.5, 0), cx(0, 0.5), cx(0, 0);
    CHECK(is_tripotent(Element(sp, c)));
}

TEST_CASE("peirce dimensions in M2") {
    const PeirceDecomposition dec = peirce_decompose(mu(0, 0));
    CHECK(dec.complex_dims[0] == 1);
    CHECK(dec.complex_dims[1] == 2);
    CHECK(dec.complex_dims[2] == 1);
    // E0 = span{E22}, E2 = span{E11}
    CHECK(dec.E(0).contains(AtomicElement::lift(mu(1, 1))));
    CHECK(dec.E(2).contains(AtomicElement::lift(mu(0, 0))));
    CHECK(dec.E(1).contains(AtomicElement::lift(mu(0, 1))));
    CHECK(dec.E(1).contains(AtomicElement::lift(mu(1, 0))));

    const PeirceDecomposition full = peirce_decompose(identity_element(m22));
    CHECK(full.complex_dims == std::array<int, 3>{0, 0, 4});
}

TEST_CASE("rank-two spin tripotents are unitary: E2 is everything") {
    const FactorDescriptor sp = FactorDescriptor::spin(3);
    Vec u = Vec::Zero(3);
    u(0) = cx(1, 0);
    const PeirceDecomposition dec = peirce_decompose(Element(sp, u));
    CHECK(dec.complex_dims == std::array<int, 3>{0, 0, 3});
    CHECK(!is_minimal(Element(sp, u)));
    CHECK(rank_tripotent(Element(sp, u)) == 2);
}

TEST_CASE("peirce_decompose rejects non-tripotents") {
    CHECK_THROWS_AS(peirce_decompose(2.0 * mu(0, 0)), triple_error);
}

TEST_CASE("minimality and rank") {
    CHECK(is_minimal(mu(0, 0)));
    CHECK(rank_tripotent(mu(0, 0)) == 1);
    CHECK(!is_minimal(identity_element(m22)));
    CHECK(rank_tripotent(identity_element(m22)) == 2);
    // spin minimal has rank 1
    const FactorDescriptor sp = FactorDescriptor::spin(3);
    Vec c(3);
    c << cx(0.5, 0), cx(0, 0.5), cx(0, 0);
    CHECK(is_minimal(Element(sp, c)));
    CHECK(rank_tripotent(Element(sp, c)) == 1);
    // type 2 minimal tripotents have matrix rank two but triple rank one
    const FactorDescriptor t2 = FactorDescriptor::type2(4);
    const Element a12 = matrix_unit(t2, 0, 1);
    CHECK(is_minimal(a12));
    CHECK(rank_tripotent(a12) == 1);
}

TEST_CASE("frames of minimals") {
    const auto frame = frame_of_minimals(identity_element(m22));
    CHECK(frame.size() == 2);

    const FactorDescriptor sp = FactorDescriptor::spin(3);
    Vec u = Vec::Zero(3);
    u(0) = cx(1, 0);
    const auto sframe = frame_of_minimals(Element(sp, u));
    REQUIRE(sframe.size() == 2);
    Vec expected = Vec::Zero(3);
    expected(0) = cx(0.5, 0);
    expected(1) = cx(0, 0.5);
    const double d1 = (sframe[0].coords - expected).norm();
    const double d2 = (sframe[1].coords - expected).norm();
    CHECK(std::min(d1, d2) <= 1e-12);

    const Element e = mu(0, 0);
    const auto single = frame_of_minimals(e);
    REQUIRE(single.size() == 1);
    CHECK(coord_norm(single[0] - e) <= 1e-12);
}

TEST_CASE("random frames re-sum and are orthogonal across all kinds") {
    SplitRng root(77);
    const std::vector<FactorDescriptor> kinds = {
        FactorDescriptor::type1(4, 3), FactorDescriptor::type2(5), FactorDescriptor::type3(4),
        FactorDescriptor::spin(6)};
    for (const auto& f : kinds) {
        for (int r = 1; r <= f.max_rank(); ++r) {
            SplitRng rng = root.stream(f.complex_dim() * 10 + r);
            const Element e = random_tripotent(rng, f, r);
            const auto frame = frame_of_minimals(e);
            CHECK(static_cast<int>(frame.size()) == r);
            Element sum = Element::zero(f);
            for (const auto& g : frame) sum = sum + g;
            CHECK(coord_norm(sum - e) <= 1e-9);
            for (size_t i = 0; i < frame.size(); ++i)
                for (size_t j = i + 1; j < frame.size(); ++j)
                    CHECK(operator_norm(L_operator(frame[i], frame[j])) <= 1e-9);
        }
    }
}

TEST_CASE("binary relations") {
    CHECK(are_orthogonal(mu(0, 0), mu(1, 1)));
    CHECK(!are_orthogonal(mu(0, 0), mu(0, 1)));
    CHECK(are_orthogonal(mu(0, 0), Element::zero(m22)));

    CHECK(are_collinear(mu(0, 0), mu(0, 1)));
    CHECK(!are_collinear(mu(0, 0), mu(1, 1)));

    // S2: u = offdiag(1) governs e = diag(1,0)
    const FactorDescriptor s2 = FactorDescriptor::type3(2);
    const Element e = matrix_unit(s2, 0, 0);
    const Element u = matrix_unit(s2, 0, 1);
    CHECK(governs(u, e));
    CHECK(!governs(e, u));

    CHECK(leq(mu(0, 0), identity_element(m22)));
    CHECK(!leq(mu(0, 0), mu(0, 1)));
    CHECK(leq(mu(0, 0), mu(0, 0)));

    CHECK(compatible(mu(0, 0), mu(1, 1)));
    CHECK(compatible(mu(0, 0), identity_element(m22)));
}

TEST_CASE("peirce rules on random tripotents") {
    SplitRng root(123);
    for (const auto& f : {FactorDescriptor::type1(3, 2), FactorDescriptor::spin(5)}) {
        SplitRng rng = root.stream(f.complex_dim());
        const Element e = random_tripotent(rng, f);
        const PeirceDecomposition dec = peirce_decompose(e);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                for (int k = 0; k <= 2; ++k) {
                    const AtomicElement xi =
                        dec.P(i).apply(AtomicElement::lift(random_element(rng, f)));
                    const AtomicElement xj =
                        dec.P(j).apply(AtomicElement::lift(random_element(rng, f)));
                    const AtomicElement xk =
                        dec.P(k).apply(AtomicElement::lift(random_element(rng, f)));
                    const AtomicElement p = triple_product(xi, xj, xk);
                    const double scale =
                        std::max(1.0, coord_norm(xi) * coord_norm(xj) * coord_norm(xk));
                    const int g = i - j + k;
                    if (g >= 0 && g <= 2)
                        CHECK(coord_norm(p - dec.P(g).apply(p)) <= 1e-9 * scale);
                    else
                        CHECK(coord_norm(p) <= 1e-9 * scale);
                }
    }
}

TEST_CASE("orthogonality implies M-orthogonality of norms") {
    SplitRng root(321);
    for (const auto& f : {FactorDescriptor::type1(3, 3), FactorDescriptor::type3(3)}) {
        for (int t = 0; t < 20; ++t) {
            SplitRng rng = root.stream(t);
            const Element e = random_tripotent(rng, f, 1);
            const PeirceDecomposition dec = peirce_decompose(e);
            const AtomicElement x =
                dec.P(2).apply(AtomicElement::lift(random_element(rng, f)));
            const AtomicElement y =
                dec.P(0).apply(AtomicElement::lift(random_element(rng, f)));
            const double nx = factor_norm(x.part(0)), ny = factor_norm(y.part(0));
            const double nsum = factor_norm((x + y).part(0));
            CHECK(std::abs(nsum - std::max(nx, ny)) <= 1e-8 * std::max(1.0, std::max(nx, ny)));
        }
    }
}

TEST_CASE("minimal tripotents have one-dimensional P2 range") {
    SplitRng rng(55);
    for (const auto& f : {FactorDescriptor::type1(3, 3), FactorDescriptor::type2(4)}) {
        const Element e = random_minimal_tripotent(rng, f);
        const PeirceDecomposition dec = peirce_decompose(e);
        CHECK(dec.complex_dims[2] == 1);
    }
}
