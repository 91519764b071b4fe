// Acceptance runner: executes every verification suite at its pinned
// thresholds and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>

#include "triplekit/suites.hpp"

using namespace triplekit;

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.seed = 2024;
    if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);

    const std::vector<std::pair<std::string, std::string>> criteria = {
        {"axioms", "Jordan identity and Gelfand-Naimark on random triples"},
        {"peirce", "Peirce spectrum, rules, and projection sum"},
        {"theorem-minimal", "minimal multiples <=> maximal annihilators"},
        {"lemma-configs", "quadrangle/trangle combination lemma (float + exact)"},
        {"paper-example", "e=diag(1,0), w=offdiag(1) annihilator asymmetry (exact)"},
        {"theorem-roundtrip", "main theorem synth/verify/decompose round-trip"},
        {"transport", "collinearity/orthogonality/Peirce transport"},
        {"ttp", "transition pseudo-probability symmetry and transport"},
        {"hilbert", "rank-one Hilbert case"},
        {"wild-demo", "Q-linear wild map on C (exact)"},
    };

    int failures = 0;
    int index = 0;
    for (const auto& [name, blurb] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        const SuiteReport rep = run_suite(name, cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = rep.pass();
        if (!ok) ++failures;
        std::printf("[%s] %2d. %-17s %s (%.1fs)\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                    blurb.c_str(), secs);
        if (!rep.error.empty()) std::printf("       aborted: %s\n", rep.error.c_str());
        for (const auto& c : rep.checks) {
            if (ok) continue;  // detail lines only on failure
            std::printf("       %-55s residual %.3e threshold %.3e %s\n", c.name.c_str(),
                        c.residual, c.threshold, c.pass ? "ok" : "FAIL");
        }
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
