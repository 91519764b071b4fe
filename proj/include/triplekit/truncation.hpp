#pragma once

// Truncations and inner quadratic annihilators. a is a truncation of b when
// {a,b,a} = {a,a,a}, equivalently b = a + z with z in the kernel of Q(a),
// equivalently P_2(r(a))(b) = a. The annihilator of a is that kernel; a
// nonzero a is a positive multiple of a minimal tripotent exactly when its
// annihilator is maximal among single-element annihilators.

#include "triplekit/spectral.hpp"

namespace triplekit {

bool is_truncation(const AtomicElement& a, const AtomicElement& b, double tol = 1e-9);
bool is_truncation(const Element& a, const Element& b, double tol = 1e-9);

struct Annihilator {
    AtomicElement generator;
    Subspace subspace;  // kernel of Q(generator), complex-closed
    int complex_codim = 0;
};

// Kernel of Q(a); cross-checked against the kernel of P_2(r(a)).
Annihilator annihilator(const AtomicElement& a, double tol = 1e-9);
Annihilator annihilator(const Element& a, double tol = 1e-9);

struct MaxAnnihilatorResult {
    bool is_max = false;
    // present when is_max is false: a witness b with ann(a) strictly inside ann(b)
    std::optional<AtomicElement> witness;
    int codim_a = 0;
    int codim_witness = 0;
    int probes_run = 0;
    double inclusion_defect = 0.0;  // sin of the largest principal angle of ann(a) in ann(b)
};

// Decides maximality via the spectral characterization and cross-checks it:
// when maximal, a randomized probe over probe_budget candidates must find no
// strict extension; when not, the witness lambda_1 * (minimal below e_1) is
// constructed and verified by principal angles.
MaxAnnihilatorResult is_max_annihilator(const AtomicElement& a, int probe_budget, uint64_t seed,
                                        double tol = 1e-8);
MaxAnnihilatorResult is_max_annihilator(const Element& a, int probe_budget, uint64_t seed,
                                        double tol = 1e-8);

// For nonzero multiples of minimal tripotents: linear dependence is
// equivalent to equality of the annihilators; both routes are evaluated and
// must agree.
bool linear_dependence_via_annihilators(const AtomicElement& a, const AtomicElement& b,
                                        double tol = 1e-8);
bool linear_dependence_via_annihilators(const Element& a, const Element& b, double tol = 1e-8);

// E_1(e) of a minimal tripotent as an intersection of annihilator kernels:
// ann(e) meets ann(v) over a separating family of minimal tripotents v
// orthogonal to e. Verified against the Peirce-1 space.
Subspace peirce1_from_annihilators(const AtomicElement& e, uint64_t seed = 1234,
                                   double tol = 1e-8);
Subspace peirce1_from_annihilators(const Element& e, uint64_t seed = 1234, double tol = 1e-8);

// Triple transition pseudo-probability: the unique c with P_2(v)(e) = c v.
cx ttp(const AtomicElement& e, const AtomicElement& v, double tol = 1e-8);
cx ttp(const Element& e, const Element& v, double tol = 1e-8);

// E = C iff every nonzero element has trivial annihilator; verified on the
// basis plus random samples and checked against the dimension count.
bool characterize_one_dimensional(const AtomicTriple& t, uint64_t seed = 99, int samples = 8);

}  // namespace triplekit
