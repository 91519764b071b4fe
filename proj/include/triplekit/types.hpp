#pragma once

// Cartan factor descriptors and element storage for finite-dimensional
// JB*-triples. A factor is one of: rectangular matrices (type 1),
// antisymmetric matrices (type 2), symmetric matrices (type 3), or a spin
// factor (type 4). Finite l_inf-sums of factors are handled by AtomicTriple.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace triplekit {

using cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

class triple_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FactorKind { type1, type2, type3, spin };

std::string to_string(FactorKind kind);

struct FactorDescriptor {
    FactorKind kind = FactorKind::type1;
    int m = 0;  // rows, type 1 only
    int n = 0;  // cols for type 1; matrix size for types 2/3; vector dim for spin

    static FactorDescriptor type1(int m, int n);
    static FactorDescriptor type2(int n);
    static FactorDescriptor type3(int n);
    static FactorDescriptor spin(int n);

    // Number of independent complex coordinates in the canonical basis:
    // mn, n(n-1)/2, n(n+1)/2, n respectively.
    int complex_dim() const;

    // Largest number of mutually orthogonal minimal tripotents.
    int max_rank() const;

    bool operator==(const FactorDescriptor&) const = default;
};

std::string to_string(const FactorDescriptor& f);

// Element of a single factor. Canonical basis order: type 1 row-major;
// type 3 upper triangle row-major; type 2 strict upper triangle row-major;
// spin plain coordinates. The realified layout used for operators and file
// I/O interleaves real and imaginary parts: [Re c0, Im c0, Re c1, ...].
struct Element {
    FactorDescriptor factor;
    Vec coords;

    Element() = default;
    Element(FactorDescriptor f, Vec c);

    static Element zero(const FactorDescriptor& f);
    static Element basis(const FactorDescriptor& f, int k);

    bool is_zero(double tol = 0.0) const;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(cx lambda, const Element& a);
Element conj(const Element& a);
double coord_norm(const Element& a);  // Euclidean norm of the coordinates

// Finite l_inf-sum of Cartan factors.
struct AtomicTriple {
    std::vector<FactorDescriptor> factors;
    std::vector<int> offsets;  // prefix sums of complex dims, size factors+1

    static AtomicTriple of(std::vector<FactorDescriptor> fs);
    static AtomicTriple single(const FactorDescriptor& f);

    int parts() const { return static_cast<int>(factors.size()); }
    int complex_dim() const { return offsets.empty() ? 0 : offsets.back(); }
    int real_dim() const { return 2 * complex_dim(); }

    bool operator==(const AtomicTriple& o) const { return factors == o.factors; }
    bool operator!=(const AtomicTriple& o) const { return !(*this == o); }
};

std::string to_string(const AtomicTriple& t);

// Element of a direct sum, stored as one flat coordinate vector; part(k)
// materializes the k-th block as an Element.
struct AtomicElement {
    AtomicTriple triple;
    Vec coords;

    AtomicElement() = default;
    AtomicElement(AtomicTriple t, Vec c);

    static AtomicElement zero(const AtomicTriple& t);
    static AtomicElement from_parts(const AtomicTriple& t, const std::vector<Element>& parts);
    static AtomicElement lift(const Element& e);

    Element part(int k) const;
    std::vector<Element> parts_vector() const;
    AtomicElement with_part(int k, const Element& e) const;

    bool is_zero(double tol = 0.0) const;
};

AtomicElement operator+(const AtomicElement& a, const AtomicElement& b);
AtomicElement operator-(const AtomicElement& a, const AtomicElement& b);
AtomicElement operator*(cx lambda, const AtomicElement& a);
AtomicElement conj(const AtomicElement& a);
double coord_norm(const AtomicElement& a);

// Realified coordinates: interleaved [Re c0, Im c0, Re c1, Im c1, ...].
RVec realify(const Vec& v);
Vec unrealify(const RVec& r);

void require_same_factor(const Element& a, const Element& b, const char* op);
void require_same_triple(const AtomicElement& a, const AtomicElement& b, const char* op);

}  // namespace triplekit
