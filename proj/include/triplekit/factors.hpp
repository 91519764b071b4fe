#pragma once

// Triple products and norms of the four classical Cartan factor types.
//
// Types 1-3 carry the C*-triple product {a,b,c} = (a b* c + c b* a)/2, with
// types 2/3 evaluated through their embedding as full matrices. The spin
// factor carries {x,y,z} = <x|y>z + <z|y>x - <x|conj(z)> conj(y) with the
// entrywise conjugation of the canonical basis, and the norm
// ||x||^2 = <x|x> + sqrt(<x|x>^2 - |<x|conj(x)>|^2).

#include "triplekit/types.hpp"

namespace triplekit {

// {x,y,z}: linear in x and z, conjugate-linear in y. Throws on factor mismatch.
Element triple_product(const Element& x, const Element& y, const Element& z);

// Componentwise product on a direct sum.
AtomicElement triple_product(const AtomicElement& x, const AtomicElement& y,
                             const AtomicElement& z);

// Factor norm: operator norm (largest singular value) for types 1-3, the
// closed spin formula for type 4. Satisfies ||{x,x,x}|| = ||x||^3.
double factor_norm(const Element& x);

// l_inf-sum norm: max of the part norms.
double sum_norm(const AtomicElement& x);

// Hermitian inner product of spin coordinates, linear in the first slot.
cx spin_inner(const Vec& x, const Vec& y);

// Full-matrix embedding for types 1-3 (type 1: m x n, types 2/3: n x n).
// Throws for spin factors.
Mat embed_matrix(const Element& x);

// Inverse of embed_matrix. Rejects matrices that violate the symmetry
// constraint of types 2/3 by more than tol (relative to the matrix norm).
Element project_matrix(const Mat& m, const FactorDescriptor& factor, double tol = 1e-9);

// Matrix unit helpers in canonical coordinates.
Element matrix_unit(const FactorDescriptor& factor, int i, int j);  // types 1-3
Element identity_element(const FactorDescriptor& factor);           // square type 1 / type 3

}  // namespace triplekit
