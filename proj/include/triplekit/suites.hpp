#pragma once

// Named verification suites. Each suite gathers a family of randomized or
// exact checks with pinned thresholds and reports one residual per check;
// the CLI `suite` command and the acceptance runner are thin wrappers.

#include <optional>

#include "triplekit/json_io.hpp"

namespace triplekit {

struct RunConfig {
    uint64_t seed = 2024;
    std::optional<double> tol;  // overrides every threshold in the suite
    std::optional<int> trials;  // overrides the per-suite default trial count
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::string error;  // non-empty when the suite aborted

    bool pass() const;
    njson to_json() const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

// Random canonical preserver between random small atomic triples; used by the
// round-trip, transport and ttp suites and by the tests.
PreserverSpec random_preserver_spec(SplitRng& rng, int max_factors = 3);
FactorIsomorphism random_factor_isomorphism(SplitRng& rng, const FactorDescriptor& source,
                                            IsoFlag flag);

}  // namespace triplekit
