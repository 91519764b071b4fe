#pragma once

// Exact Gaussian-rational backend. Certifies algebraic identities (tripotent
// cubes, orthogonality products, the quadrangle/trangle combination lemma,
// and the Q-linear wild-map demo) with zero residual, independent of the
// floating-point path. Norms are excluded: only identities are certified.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>

#include "triplekit/types.hpp"

namespace triplekit {

using Rational = boost::multiprecision::cpp_rational;

struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conjugate() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
bool operator==(const GaussianRational& a, const GaussianRational& b);
std::string to_string(const GaussianRational& a);  // "p/q" or "p/q+r/s i"

struct ExactElement {
    FactorDescriptor factor;
    std::vector<GaussianRational> coords;

    ExactElement() = default;
    ExactElement(FactorDescriptor f, std::vector<GaussianRational> c);

    static ExactElement zero(const FactorDescriptor& f);
    static ExactElement from_double(const Element& e);  // exact binary rationals
    Element to_double() const;
    bool is_zero() const;
};

ExactElement operator+(const ExactElement& a, const ExactElement& b);
ExactElement operator-(const ExactElement& a, const ExactElement& b);
ExactElement operator*(const GaussianRational& lambda, const ExactElement& a);

ExactElement exact_triple_product(const ExactElement& x, const ExactElement& y,
                                  const ExactElement& z);

// One certified coefficient point of the combination lemma.
struct PointCertificate {
    std::vector<GaussianRational> coeffs;
    bool cube_identity = false;   // {v,v,v} = v exactly
    bool second_identity = false; // {v,v,vt} = 0 (quadrangle) / u = 2{w1,u,w2} (trangle)
};

struct LemmaCertificate {
    std::string lemma;
    std::vector<PointCertificate> points;
    bool all_ok = true;
};

// Quadrangle lemma on the standard quadrangles of type1(2,2) and type1(3,3):
// for each exact point (a,b,c,d) with |a|^2+|b|^2+|c|^2+|d|^2 = 1 and
// a d = b c, certifies {v,v,v} = v and {v,v,vt} = 0 with zero residual.
// Throws when a point violates a constraint.
LemmaCertificate certify_quadrangle_lemma(
    const std::vector<std::array<GaussianRational, 4>>& points);

// Trangle lemma on the standard type3(2) trangle: |a|^2 + 2|b|^2 + |d|^2 = 1,
// a d = b^2; certifies {v,v,v} = v and u = 2{w1,u,w2}.
LemmaCertificate certify_trangle_lemma(
    const std::vector<std::array<GaussianRational, 3>>& points);

// Built-in exact point families (>= 10 points each).
std::vector<std::array<GaussianRational, 4>> default_quadrangle_points();
std::vector<std::array<GaussianRational, 3>> default_trangle_points();

// The Q-linear demo on C: f swaps the coordinates of p + q sqrt(2) in each of
// the real and imaginary parts. f is an additive bijection preserving
// truncations in both directions (in C: a truncation pair means x = 0 or
// y = x) yet fails R-linearity at sqrt(2) * 1.
struct WildDemoReport {
    int pairs_checked = 0;
    bool preserved_both_directions = false;
    bool linearity_violation_found = false;
    std::string violation;  // exact description of the sqrt(2)-scaling mismatch
};

WildDemoReport wild_additive_demo(int min_pairs = 120);

}  // namespace triplekit
