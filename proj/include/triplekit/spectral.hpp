#pragma once

// Spectral resolution inside the subtriple generated by a single element.
// The odd powers a, {a,a,a}, {a,{a,a,a},a}, ... span a subspace V on which
// L(a,a) acts with eigenvalues lambda_i^2; the eigencomponents of a divided
// by lambda_i recover the spectral tripotents, so a = sum_i lambda_i e_i
// with lambda_1 > lambda_2 > ... > 0 and mutually orthogonal tripotents e_i.

#include "triplekit/operators.hpp"

namespace triplekit {

inline constexpr double kClusterTol = 1e-7;

struct SpectralResolution {
    AtomicElement generator;
    std::vector<double> lambdas;          // strictly decreasing, positive
    std::vector<AtomicElement> tripotents;  // mutually orthogonal

    int size() const { return static_cast<int>(lambdas.size()); }
    AtomicElement reconstruct() const;
};

// Throws on zero input. Eigenvalues of L(a,a)|_V closer than kClusterTol
// relative to the largest are merged into one joint tripotent.
SpectralResolution spectral_resolve(const AtomicElement& a, double tol = 1e-9);
SpectralResolution spectral_resolve(const Element& a, double tol = 1e-9);

// r(a) = sum of the spectral tripotents: the smallest tripotent with a
// positive in E_2(r(a)).
AtomicElement range_tripotent(const AtomicElement& a, double tol = 1e-9);
Element range_tripotent(const Element& a, double tol = 1e-9);

struct MinimalMultiple {
    bool is_minimal_multiple = false;
    double scalar = 0.0;
    AtomicElement tripotent;
};

// True iff the resolution has exactly one spectral value and its tripotent is
// minimal; returns (lambda_1, e_1) in that case.
MinimalMultiple is_positive_multiple_of_minimal(const AtomicElement& a, double tol = 1e-9);
MinimalMultiple is_positive_multiple_of_minimal(const Element& a, double tol = 1e-9);

}  // namespace triplekit
