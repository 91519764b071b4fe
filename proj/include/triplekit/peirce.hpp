#pragma once

// Tripotents and their Peirce structure. For a tripotent e the operator
// L(e,e) has spectrum inside {0, 1/2, 1}; the Peirce projections are the
// spectral projections, computed here as fixed polynomials in L(e,e):
//   P0 = 2L^2 - 3L + I,   P1 = -4L^2 + 4L,   P2 = 2L^2 - L.
// A tripotent is minimal when dim E_2(e) = 1.

#include <array>

#include "triplekit/operators.hpp"

namespace triplekit {

inline constexpr double kTripotentTol = 1e-9;
inline constexpr double kEigenvalueGridTol = 1e-6;

bool is_tripotent(const AtomicElement& e, double tol = kTripotentTol);
bool is_tripotent(const Element& e, double tol = kTripotentTol);
double tripotent_residual(const AtomicElement& e);  // ||{e,e,e} - e||

struct PeirceDecomposition {
    AtomicElement tripotent;
    std::array<RealLinearOperator, 3> projections;  // P0, P1, P2
    std::array<Subspace, 3> subspaces;              // E0, E1, E2
    std::array<int, 3> complex_dims{};

    const RealLinearOperator& P(int j) const { return projections.at(j); }
    const Subspace& E(int j) const { return subspaces.at(j); }
};

// Throws for non-tripotent input and when an eigenvalue of L(e,e) lies
// farther than grid_tol from {0, 1/2, 1} (bad input or numerical breakdown).
PeirceDecomposition peirce_decompose(const AtomicElement& e,
                                     double tol = kTripotentTol,
                                     double grid_tol = kEigenvalueGridTol);
PeirceDecomposition peirce_decompose(const Element& e, double tol = kTripotentTol,
                                     double grid_tol = kEigenvalueGridTol);

bool is_minimal(const AtomicElement& e, double tol = kTripotentTol);
bool is_minimal(const Element& e, double tol = kTripotentTol);

// Triple rank: the number of mutually orthogonal minimal tripotents that sum
// to e (for type 2 this is half the matrix rank of the embedding).
int rank_tripotent(const AtomicElement& e, double tol = kTripotentTol);
int rank_tripotent(const Element& e, double tol = kTripotentTol);

struct TripotentCert {
    AtomicElement element;
    double cube_residual = 0.0;
    std::array<int, 3> peirce_dims{};  // complex dims (d0, d1, d2)
    int rank = 0;
    bool minimal = false;
};

TripotentCert certify_tripotent(const AtomicElement& e, double tol = kTripotentTol);

// Mutually orthogonal minimal tripotents summing to e; length equals the
// rank. The construction is validated against its post-conditions.
std::vector<Element> frame_of_minimals(const Element& e, double tol = kTripotentTol);
std::vector<AtomicElement> frame_of_minimals(const AtomicElement& e, double tol = kTripotentTol);

// Binary relations. orthogonal: L(x,y) = 0; collinear: each tripotent lies in
// the other's Peirce-1 space; governs(u,w): w in E_2(u) and u in E_1(w);
// leq(e,u): u - e is a tripotent orthogonal to e; compatible: all Peirce
// projections of the two tripotents commute.
bool are_orthogonal(const AtomicElement& x, const AtomicElement& y, double tol = 1e-8);
bool are_orthogonal(const Element& x, const Element& y, double tol = 1e-8);
bool are_collinear(const AtomicElement& e, const AtomicElement& v, double tol = 1e-8);
bool are_collinear(const Element& e, const Element& v, double tol = 1e-8);
bool governs(const AtomicElement& u, const AtomicElement& w, double tol = 1e-8);
bool governs(const Element& u, const Element& w, double tol = 1e-8);
bool leq(const AtomicElement& e, const AtomicElement& u, double tol = 1e-8);
bool leq(const Element& e, const Element& u, double tol = 1e-8);
bool compatible(const AtomicElement& e, const AtomicElement& v, double tol = 1e-8);
bool compatible(const Element& e, const Element& v, double tol = 1e-8);

}  // namespace triplekit
