#pragma once

// Canonical truncation preservers between atomic triples: block maps
// x -> (gamma_k Phi_k(pi_k(x))) with sigma a factor bijection, gamma_k > 0
// and Phi_k a linear or conjugate-linear isometric triple isomorphism.
// synthesize builds the block operator from a spec, verify_preserves_truncations
// samples the truncation relation in both directions, and decompose recovers
// the spec from a verified operator (factor matching, scalars, linearity
// dichotomy, triple-isomorphism check, transition pseudo-probability check,
// reconstruction equality).

#include <optional>
#include <variant>

#include "triplekit/truncation.hpp"

namespace triplekit {

enum class IsoFlag { linear, conjugate_linear };

std::string to_string(IsoFlag flag);

// x -> u x v, optionally transposed (x -> u x^t v, swapping the shape)
struct Type1Generators {
    Mat u, v;
    bool transpose = false;
};

// types 2/3: x -> u x u^t
struct CongruenceGenerators {
    Mat u;
};

// spin: x -> phase * O x with O real orthogonal (complexified)
struct SpinGenerators {
    cx phase{1.0, 0.0};
    RMat orthogonal;
};

using IsoGenerators = std::variant<Type1Generators, CongruenceGenerators, SpinGenerators>;

struct FactorIsomorphism {
    FactorDescriptor source, target;
    IsoFlag flag = IsoFlag::linear;
    RealLinearOperator realization;  // conjugation already folded in
    std::optional<IsoGenerators> generators;
};

// Builds the realization from generators (conjugate flag pre-conjugates the
// argument) and verifies the triple-isomorphism and isometry invariants on
// random samples. Throws when the generator data is not unitary/orthogonal.
FactorIsomorphism make_factor_isomorphism(const FactorDescriptor& source, IsoFlag flag,
                                          const IsoGenerators& gens, uint64_t seed = 7);

// Wraps an already-realized block map and verifies the same invariants.
FactorIsomorphism make_factor_isomorphism(const FactorDescriptor& source,
                                          const FactorDescriptor& target, IsoFlag flag,
                                          RealLinearOperator realization, uint64_t seed = 7);

struct PreserverSpec {
    AtomicTriple source, target;
    std::vector<int> sigma;      // sigma[k] = target block receiving source factor k
    std::vector<double> gammas;  // positive
    std::vector<FactorIsomorphism> isos;
};

// Requires every source factor to have complex dimension >= 2 and sigma to be
// a bijection; the result carries tag general_real when flags are mixed.
RealLinearOperator synthesize(const PreserverSpec& spec);

struct VerifyReport {
    int positive_trials = 0, positive_failures = 0;
    int inverse_trials = 0, inverse_failures = 0;
    int negative_trials = 0, negative_failures = 0;
    double max_residual = 0.0;  // largest |{a,b,a}-{a,a,a}| seen on a passing trial
    bool pass = false;
    std::string witness;  // description of the first failing trial, if any
};

// Positive trials: b = a + z with z in ker Q(a) must stay a truncation pair
// under A; same through A^{-1}; negative trials: non-truncation pairs must
// stay non-truncations. Throws on a singular A.
VerifyReport verify_preserves_truncations(const RealLinearOperator& A, int trials,
                                          uint64_t seed, double tol = 1e-8);

// For a verified preserver and minimal e: A(e) = gamma f with f minimal.
std::pair<double, AtomicElement> induced_minimal_map(const RealLinearOperator& A,
                                                     const AtomicElement& e);

// Recovers a PreserverSpec from a verified preserver; every assertion failure
// names the step that broke. Round-trip contract:
// ||synthesize(decompose(A)) - A|| <= tol.
PreserverSpec decompose(const RealLinearOperator& A, double tol = 1e-8, uint64_t seed = 11);

struct HilbertClassification {
    double gamma = 0.0;
    IsoFlag flag = IsoFlag::linear;
    RealLinearOperator isometry;  // gamma^{-1} A, complex-linear after deconjugation
};

// Rank-one case: A on type1(1,n), n >= 2, surjective and truncation
// preserving in one direction is gamma * (linear or conjugate-linear
// isometry). n = 1 is rejected: every additive bijection on C preserves
// truncations, so no classification is possible.
HilbertClassification hilbert_case_classify(const RealLinearOperator& A, uint64_t seed = 5,
                                            double tol = 1e-8);

}  // namespace triplekit
