#include "triplekit/types.hpp"

#include <sstream>

namespace triplekit {

std::string to_string(FactorKind kind) {
    switch (kind) {
        case FactorKind::type1: return "type1";
        case FactorKind::type2: return "type2";
        case FactorKind::type3: return "type3";
        case FactorKind::spin: return "type4";
    }
    return "?";
}

FactorDescriptor FactorDescriptor::type1(int m, int n) {
    if (m < 1 || n < 1) throw triple_error("type1 factor needs m,n >= 1");
    return FactorDescriptor{FactorKind::type1, m, n};
}

FactorDescriptor FactorDescriptor::type2(int n) {
    if (n < 2) throw triple_error("type2 factor needs n >= 2");
    return FactorDescriptor{FactorKind::type2, 0, n};
}

FactorDescriptor FactorDescriptor::type3(int n) {
    if (n < 1) throw triple_error("type3 factor needs n >= 1");
    return FactorDescriptor{FactorKind::type3, 0, n};
}

FactorDescriptor FactorDescriptor::spin(int n) {
    if (n < 3) throw triple_error("spin factor needs n >= 3");
    return FactorDescriptor{FactorKind::spin, 0, n};
}

int FactorDescriptor::complex_dim() const {
    switch (kind) {
        case FactorKind::type1: return m * n;
        case FactorKind::type2: return n * (n - 1) / 2;
        case FactorKind::type3: return n * (n + 1) / 2;
        case FactorKind::spin: return n;
    }
    return 0;
}

int FactorDescriptor::max_rank() const {
    switch (kind) {
        case FactorKind::type1: return std::min(m, n);
        case FactorKind::type2: return n / 2;
        case FactorKind::type3: return n;
        case FactorKind::spin: return 2;
    }
    return 0;
}

std::string to_string(const FactorDescriptor& f) {
    std::ostringstream os;
    switch (f.kind) {
        case FactorKind::type1: os << "type1(" << f.m << "," << f.n << ")"; break;
        case FactorKind::type2: os << "type2(" << f.n << ")"; break;
        case FactorKind::type3: os << "type3(" << f.n << ")"; break;
        case FactorKind::spin: os << "spin(" << f.n << ")"; break;
    }
    return os.str();
}

Element::Element(FactorDescriptor f, Vec c) : factor(f), coords(std::move(c)) {
    if (coords.size() != factor.complex_dim())
        throw triple_error("element coordinate length does not match " + to_string(factor));
}

Element Element::zero(const FactorDescriptor& f) {
    return Element(f, Vec::Zero(f.complex_dim()));
}

Element Element::basis(const FactorDescriptor& f, int k) {
    if (k < 0 || k >= f.complex_dim()) throw triple_error("basis index out of range");
    Vec c = Vec::Zero(f.complex_dim());
    c(k) = cx(1.0, 0.0);
    return Element(f, std::move(c));
}

bool Element::is_zero(double tol) const { return coords.norm() <= tol; }

Element operator+(const Element& a, const Element& b) {
    require_same_factor(a, b, "operator+");
    return Element(a.factor, a.coords + b.coords);
}

Element operator-(const Element& a, const Element& b) {
    require_same_factor(a, b, "operator-");
    return Element(a.factor, a.coords - b.coords);
}

Element operator*(cx lambda, const Element& a) { return Element(a.factor, lambda * a.coords); }

Element conj(const Element& a) { return Element(a.factor, a.coords.conjugate()); }

double coord_norm(const Element& a) { return a.coords.norm(); }

AtomicTriple AtomicTriple::of(std::vector<FactorDescriptor> fs) {
    if (fs.empty()) throw triple_error("atomic triple needs at least one factor");
    AtomicTriple t;
    t.factors = std::move(fs);
    t.offsets.resize(t.factors.size() + 1);
    t.offsets[0] = 0;
    for (size_t k = 0; k < t.factors.size(); ++k)
        t.offsets[k + 1] = t.offsets[k] + t.factors[k].complex_dim();
    return t;
}

AtomicTriple AtomicTriple::single(const FactorDescriptor& f) { return of({f}); }

std::string to_string(const AtomicTriple& t) {
    std::string s;
    for (size_t k = 0; k < t.factors.size(); ++k) {
        if (k) s += " + ";
        s += to_string(t.factors[k]);
    }
    return s;
}

AtomicElement::AtomicElement(AtomicTriple t, Vec c) : triple(std::move(t)), coords(std::move(c)) {
    if (coords.size() != triple.complex_dim())
        throw triple_error("atomic element coordinate length does not match triple");
}

AtomicElement AtomicElement::zero(const AtomicTriple& t) {
    return AtomicElement(t, Vec::Zero(t.complex_dim()));
}

AtomicElement AtomicElement::from_parts(const AtomicTriple& t, const std::vector<Element>& parts) {
    if (static_cast<int>(parts.size()) != t.parts())
        throw triple_error("part count does not match triple");
    Vec c(t.complex_dim());
    for (int k = 0; k < t.parts(); ++k) {
        if (!(parts[k].factor == t.factors[k]))
            throw triple_error("part " + std::to_string(k) + " factor mismatch");
        c.segment(t.offsets[k], t.factors[k].complex_dim()) = parts[k].coords;
    }
    return AtomicElement(t, std::move(c));
}

AtomicElement AtomicElement::lift(const Element& e) {
    return AtomicElement(AtomicTriple::single(e.factor), e.coords);
}

Element AtomicElement::part(int k) const {
    if (k < 0 || k >= triple.parts()) throw triple_error("part index out of range");
    return Element(triple.factors[k],
                   coords.segment(triple.offsets[k], triple.factors[k].complex_dim()));
}

std::vector<Element> AtomicElement::parts_vector() const {
    std::vector<Element> out;
    out.reserve(triple.parts());
    for (int k = 0; k < triple.parts(); ++k) out.push_back(part(k));
    return out;
}

AtomicElement AtomicElement::with_part(int k, const Element& e) const {
    if (k < 0 || k >= triple.parts()) throw triple_error("part index out of range");
    if (!(e.factor == triple.factors[k])) throw triple_error("with_part: factor mismatch");
    AtomicElement out = *this;
    out.coords.segment(triple.offsets[k], triple.factors[k].complex_dim()) = e.coords;
    return out;
}

bool AtomicElement::is_zero(double tol) const { return coords.norm() <= tol; }

AtomicElement operator+(const AtomicElement& a, const AtomicElement& b) {
    require_same_triple(a, b, "operator+");
    return AtomicElement(a.triple, a.coords + b.coords);
}

AtomicElement operator-(const AtomicElement& a, const AtomicElement& b) {
    require_same_triple(a, b, "operator-");
    return AtomicElement(a.triple, a.coords - b.coords);
}

AtomicElement operator*(cx lambda, const AtomicElement& a) {
    return AtomicElement(a.triple, lambda * a.coords);
}

AtomicElement conj(const AtomicElement& a) { return AtomicElement(a.triple, a.coords.conjugate()); }

double coord_norm(const AtomicElement& a) { return a.coords.norm(); }

RVec realify(const Vec& v) {
    RVec r(2 * v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        r(2 * i) = v(i).real();
        r(2 * i + 1) = v(i).imag();
    }
    return r;
}

Vec unrealify(const RVec& r) {
    if (r.size() % 2 != 0) throw triple_error("realified vector has odd length");
    Vec v(r.size() / 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cx(r(2 * i), r(2 * i + 1));
    return v;
}

void require_same_factor(const Element& a, const Element& b, const char* op) {
    if (!(a.factor == b.factor))
        throw triple_error(std::string(op) + ": factor mismatch (" + to_string(a.factor) +
                           " vs " + to_string(b.factor) + ")");
}

void require_same_triple(const AtomicElement& a, const AtomicElement& b, const char* op) {
    if (a.triple != b.triple) throw triple_error(std::string(op) + ": triple mismatch");
}

}  // namespace triplekit
