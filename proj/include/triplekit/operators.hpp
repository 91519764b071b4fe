#pragma once

// Real-linear operators on realified coordinates. Complex- and
// conjugate-linear maps share one representation: a real matrix of size
// 2 dim(cod) x 2 dim(dom) acting on interleaved [Re, Im, Re, Im, ...]
// coordinates. Linearity class is detected from commutation with the
// multiplication-by-i operator J: MJ = JM for complex-linear maps and
// MJ = -JM for conjugate-linear ones.

#include <functional>
#include <optional>

#include "triplekit/types.hpp"

namespace triplekit {

enum class LinearityTag { complex_linear, conjugate_linear, general_real };

std::string to_string(LinearityTag tag);

struct RealLinearOperator {
    AtomicTriple domain;
    AtomicTriple codomain;
    RMat matrix;  // real_dim(cod) x real_dim(dom)
    LinearityTag tag = LinearityTag::general_real;

    AtomicElement apply(const AtomicElement& x) const;
    Element apply(const Element& x) const;  // singleton domains only
};

// Block multiplication-by-i on a realified space of complex dimension d.
RMat multiplication_by_i(int complex_dim);

// Classifies a realified matrix by its J-commutator, relative tolerance 1e-10.
LinearityTag classify_linearity(const RMat& m, double tol = 1e-10);

// Assembles an operator from evaluations of a real-linear map on basis
// vectors; `tag` is verified, not trusted (general_real skips the check).
RealLinearOperator build_operator(const AtomicTriple& domain, const AtomicTriple& codomain,
                                  const std::function<AtomicElement(const AtomicElement&)>& fn,
                                  LinearityTag expected = LinearityTag::general_real);

RealLinearOperator identity_operator(const AtomicTriple& t);
RealLinearOperator compose(const RealLinearOperator& f, const RealLinearOperator& g);  // f o g
RealLinearOperator invert(const RealLinearOperator& op);
double operator_norm(const RealLinearOperator& op);  // largest singular value
bool is_invertible(const RealLinearOperator& op, double tol = 1e-10);

// L(a,b): x -> {a,b,x}; complex-linear. Q(a): x -> {a,x,a}; conjugate-linear.
RealLinearOperator L_operator(const AtomicElement& a, const AtomicElement& b);
RealLinearOperator Q_operator(const AtomicElement& a);
RealLinearOperator L_operator(const Element& a, const Element& b);
RealLinearOperator Q_operator(const Element& a);

// Subspace of a realified space, stored as an orthonormal real basis.
// complex_flag records (and is computed as) closure under J.
struct Subspace {
    AtomicTriple ambient;
    RMat basis;  // real_dim x r, orthonormal columns
    bool complex_flag = false;

    int real_dim() const { return static_cast<int>(basis.cols()); }
    int complex_dim() const;  // real_dim/2; throws when not complex-closed
    bool contains(const AtomicElement& x, double tol = 1e-8) const;
    AtomicElement project(const AtomicElement& x) const;
};

Subspace full_subspace(const AtomicTriple& t);
Subspace subspace_from_span(const AtomicTriple& t, const RMat& span_columns, double tol = 1e-10);
Subspace subspace_from_elements(const std::vector<AtomicElement>& elems, double tol = 1e-10);

// Numerical kernel: right singular vectors with sigma < tol * sigma_max.
Subspace kernel(const RealLinearOperator& op, double tol = 1e-9);
Subspace range(const RealLinearOperator& op, double tol = 1e-9);

// sin of the largest principal angle between S1 and its projection into S2;
// 0 when S1 is contained in S2.
double subspace_inclusion_defect(const Subspace& s1, const Subspace& s2);
bool subspace_included(const Subspace& s1, const Subspace& s2, double tol = 1e-8);
bool subspace_equal(const Subspace& s1, const Subspace& s2, double tol = 1e-8);
Subspace subspace_intersection(const Subspace& s1, const Subspace& s2, double tol = 1e-8);
Subspace image_subspace(const RealLinearOperator& op, const Subspace& s, double tol = 1e-10);

struct JordanReport {
    int trials = 0;
    double max_residual = 0.0;  // relative to the scale of each sample
    bool pass = false;
    double threshold = 0.0;
};

// Monte-Carlo check of the Jordan identity
//   L(w,v){x,y,z} = {L(w,v)x,y,z} - {x,L(v,w)y,z} + {x,y,L(w,v)z}
// over random 5-tuples in the factor.
JordanReport check_jordan_identity(const FactorDescriptor& factor, int trials, uint64_t seed,
                                   double tol = 1e-9);

}  // namespace triplekit
