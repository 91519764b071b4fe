#pragma once

// Seeded randomness for the verification suites. One splittable generator:
// per-trial streams are derived from (seed, counter) so that suites can be
// reordered or parallelized without changing any stream's output.

#include <cstdint>

#include "triplekit/types.hpp"

namespace triplekit {

class SplitRng {
public:
    explicit SplitRng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) { next_u64(); }

    // Independent stream derived by counter; drawing from the child does not
    // advance the parent.
    SplitRng stream(uint64_t index) const;

    uint64_t next_u64();
    double uniform();                 // [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds
    double normal();
    cx normal_cx();
    cx unit_phase();

private:
    uint64_t state_;
};

// Gaussian coordinates, entrywise scale 1.
Element random_element(SplitRng& rng, const FactorDescriptor& f);
AtomicElement random_element(SplitRng& rng, const AtomicTriple& t);

Mat random_unitary(SplitRng& rng, int n);
RMat random_orthogonal(SplitRng& rng, int n);

// Random tripotent of the given triple rank (1 <= rank <= f.max_rank()).
Element random_tripotent(SplitRng& rng, const FactorDescriptor& f, int rank);
Element random_tripotent(SplitRng& rng, const FactorDescriptor& f);  // random rank
Element random_minimal_tripotent(SplitRng& rng, const FactorDescriptor& f);

// Minimal tripotent pairs in special position. Collinear pairs exist for
// type 1 (m or n >= 2), type 2 (n >= 3) and spin (n >= 4); orthogonal pairs
// for every factor of rank >= 2. Throws when the factor cannot host one.
std::pair<Element, Element> random_collinear_minimal_pair(SplitRng& rng,
                                                          const FactorDescriptor& f);
std::pair<Element, Element> random_orthogonal_minimal_pair(SplitRng& rng,
                                                           const FactorDescriptor& f);
bool has_collinear_minimal_pair(const FactorDescriptor& f);

}  // namespace triplekit
