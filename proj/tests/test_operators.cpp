#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "triplekit/factors.hpp"
#include "triplekit/operators.hpp"
#include "triplekit/peirce.hpp"
#include "triplekit/rng.hpp"

using namespace triplekit;

namespace {
const FactorDescriptor m22 = FactorDescriptor::type1(2, 2);
Element mu(int i, int j) { return matrix_unit(m22, i, j); }
}  // namespace

TEST_CASE("L(E11,E11) spectrum on M2 is {1, 1/2, 1/2, 0}") {
    const RealLinearOperator l = L_operator(mu(0, 0), mu(0, 0));
    CHECK(l.tag == LinearityTag::complex_linear);
    Eigen::EigenSolver<RMat> es(l.matrix);
    std::vector<double> vals;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        vals.push_back(es.eigenvalues()(i).real());
    std::sort(vals.begin(), vals.end());
    // realified: each complex eigenvalue appears twice
    const std::vector<double> expected = {0, 0, 0.5, 0.5, 0.5, 0.5, 1, 1};
    REQUIRE(vals.size() == expected.size());
    for (size_t i = 0; i < vals.size(); ++i) CHECK(vals[i] == doctest::Approx(expected[i]));
}

TEST_CASE("L vanishes on orthogonal pairs and on zero") {
    CHECK(operator_norm(L_operator(mu(0, 0), mu(1, 1))) <= 1e-12);
    CHECK(operator_norm(L_operator(Element::zero(m22), mu(0, 0))) == 0.0);
}

TEST_CASE("Q examples") {
    // Q(E11) kills the symmetric off-diagonal
    const Element w = mu(0, 1) + mu(1, 0);
    CHECK(coord_norm(Q_operator(mu(0, 0)).apply(w)) <= 1e-15);

    // S2 trangle: Q(u)(e11) = e22
    const FactorDescriptor s2 = FactorDescriptor::type3(2);
    const Element e = matrix_unit(s2, 0, 0);
    const Element u = matrix_unit(s2, 0, 1);
    const Element etil = matrix_unit(s2, 1, 1);
    CHECK(coord_norm(Q_operator(u).apply(e) - etil) <= 1e-15);

    // conjugate-linearity
    SplitRng rng(2);
    const Element a = random_element(rng, m22);
    const Element b = random_element(rng, m22);
    const cx lam = rng.normal_cx();
    const RealLinearOperator q = Q_operator(a);
    CHECK(q.tag == LinearityTag::conjugate_linear);
    CHECK(coord_norm(q.apply(lam * b) - std::conj(lam) * q.apply(b)) <= 1e-10);
}

TEST_CASE("kernel dimensions of Q") {
    // ker Q(E11) in M2 = {x : x11 = 0}, complex dimension 3
    const Subspace k1 = kernel(Q_operator(mu(0, 0)));
    CHECK(k1.complex_flag);
    CHECK(k1.real_dim() == 6);

    // Q(I) x = x^*, injective
    const Subspace k2 = kernel(Q_operator(identity_element(m22)));
    CHECK(k2.real_dim() == 0);

    // zero operator: full space
    const Subspace k3 = kernel(Q_operator(Element::zero(m22)));
    CHECK(k3.real_dim() == 8);
    CHECK(k3.complex_flag);
}

TEST_CASE("kernels of Q are complex subspaces") {
    SplitRng root(9);
    for (const auto& f : {FactorDescriptor::type1(2, 3), FactorDescriptor::type2(4),
                          FactorDescriptor::spin(5)}) {
        for (int t = 0; t < 10; ++t) {
            SplitRng rng = root.stream(t);
            const Element a = random_element(rng, f);
            CHECK(kernel(Q_operator(a)).complex_flag);
        }
    }
}

TEST_CASE("jordan identity holds in all models") {
    CHECK(check_jordan_identity(FactorDescriptor::type1(3, 2), 100, 1).pass);
    CHECK(check_jordan_identity(FactorDescriptor::spin(4), 100, 2).pass);
    CHECK(check_jordan_identity(FactorDescriptor::type2(4), 100, 3).pass);
    CHECK(check_jordan_identity(FactorDescriptor::type3(3), 100, 4).pass);
}

TEST_CASE("operator norm basics") {
    const AtomicTriple t = AtomicTriple::single(m22);
    CHECK(operator_norm(identity_operator(t)) == doctest::Approx(1.0));
    RealLinearOperator two = identity_operator(t);
    two.matrix *= 2.0;
    CHECK(operator_norm(two) == doctest::Approx(2.0));
    two.matrix *= 0.0;
    CHECK(operator_norm(two) == 0.0);
}

TEST_CASE("Q(e)^2 equals P2(e) for tripotents") {
    SplitRng root(31);
    for (const auto& f : {FactorDescriptor::type1(3, 3), FactorDescriptor::spin(5),
                          FactorDescriptor::type3(3)}) {
        SplitRng rng = root.stream(f.complex_dim());
        const Element e = random_tripotent(rng, f);
        const RealLinearOperator q = Q_operator(e);
        const PeirceDecomposition dec = peirce_decompose(e);
        CHECK((q.matrix * q.matrix - dec.P(2).matrix).norm() <= 1e-9 * q.matrix.rows());
    }
}

TEST_CASE("subspace utilities") {
    const AtomicTriple t = AtomicTriple::single(m22);
    const Subspace full = full_subspace(t);
    CHECK(full.complex_dim() == 4);
    SplitRng rng(4);
    const AtomicElement x = random_element(rng, t);
    CHECK(full.contains(x));
    const Subspace one = subspace_from_elements({x});
    CHECK(one.real_dim() == 1);
    CHECK(subspace_included(one, full));
    CHECK(!subspace_included(full, one));
    const Subspace meet = subspace_intersection(one, full);
    CHECK(meet.real_dim() == 1);
    CHECK(subspace_equal(meet, one));
}

TEST_CASE("classify_linearity detects the three classes") {
    const AtomicTriple t = AtomicTriple::single(m22);
    CHECK(classify_linearity(RMat::Identity(8, 8)) == LinearityTag::complex_linear);
    // conjugation matrix
    const RealLinearOperator conj_op = build_operator(
        t, t, [&](const AtomicElement& x) { return conj(x); });
    CHECK(conj_op.tag == LinearityTag::conjugate_linear);
    RMat mixed = RMat::Identity(8, 8);
    mixed(0, 1) = 0.3;  // breaks both commutation relations
    CHECK(classify_linearity(mixed) == LinearityTag::general_real);
}
