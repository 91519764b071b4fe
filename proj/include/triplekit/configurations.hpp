#pragma once

// Quadrangles (u1,u2,u3,u4) and trangles (w1,u,w2) of tripotents, their
// validators, and the constrained linear combinations that stay tripotent:
//   quadrangle: v = a u1 + b u2 + c u4 + d u3 with |a|^2+|b|^2+|c|^2+|d|^2 = 1
//               and a d - b c = 0,
//   trangle:    v = a w1 + b u + d w2 with |a|^2 + 2|b|^2 + |d|^2 = 1 and
//               a d - b^2 = 0.

#include <array>

#include "triplekit/peirce.hpp"
#include "triplekit/rng.hpp"

namespace triplekit {

struct Quadrangle {
    Element u1, u2, u3, u4;
};

struct Trangle {
    Element w1, u, w2;
};

struct RelationCheck {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct ConfigReport {
    std::vector<RelationCheck> checks;
    bool pass = true;
    void add(const std::string& name, double residual, double tol);
};

// Each defining relation is reported with its residual.
ConfigReport validate_quadrangle(const Quadrangle& q, double tol = 1e-8);
ConfigReport validate_trangle(const Trangle& t, double tol = 1e-8);

inline constexpr double kCoeffConstraintTol = 1e-10;

// v = a u1 + b u2 + c u4 + d u3; constraint violation throws; the result is
// post-verified to be a tripotent (and minimal when u1, u3 are minimal).
Element quadrangle_combo(const Quadrangle& q, cx a, cx b, cx c, cx d,
                         double tol = kCoeffConstraintTol);

// The orthogonal companion conj(d) u1 - conj(c) u2 - conj(b) u4 + conj(a) u3.
Element quadrangle_orthocomplement(const Quadrangle& q, cx a, cx b, cx c, cx d,
                                   double tol = kCoeffConstraintTol);

Element trangle_combo(const Trangle& t, cx a, cx b, cx d, double tol = kCoeffConstraintTol);

// Canonical configurations from basis elements. Quadrangles exist in type 1
// (m,n >= 2), type 2 (n >= 4) and spin (n >= 4); trangles in type 3 (n >= 2)
// and spin (n >= 3).
Quadrangle standard_quadrangle(const FactorDescriptor& f);
Trangle standard_trangle(const FactorDescriptor& f);

// Random coefficient tuples on the constraint varieties.
std::array<cx, 4> sample_quadrangle_coeffs(SplitRng& rng);
std::array<cx, 3> sample_trangle_coeffs(SplitRng& rng);

}  // namespace triplekit
