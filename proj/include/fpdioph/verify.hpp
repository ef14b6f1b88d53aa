// Identity suites: every count is produced by at least two independent
// routes (brute force, closed formula, fiber decomposition) and compared
// exactly. A failing check carries the offending primes and both values.
#pragma once

#include "fpdioph/ff.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpd {
namespace verify {

using ff::i64;
using ff::u64;

struct Failure {
    u64 p = 0;
    std::string expected, actual, context;
};

struct CheckResult {
    std::string name;
    u64 p_lo = 0, p_hi = 0;
    bool passed = true;
    std::vector<Failure> failures;  // sorted by p
};

// per-check inclusive prime bounds; the defaults are the desk-scale
// ranges the acceptance gate runs at
struct VerifyConfig {
    u64 pairs_max = 499;    // pairs + triples, brute vs formula
    u64 quads_max = 199;    // quadruples, brute vs formula
    u64 wper_max = 61;      // per-fiber W vs brute buckets
    u64 fourtor_max = 61;   // 4-torsion never fully rational, p = 3 mod 4
    u64 fibsum_max = 199;   // power sums of P(t)
    u64 tsets_max = 199;    // T-set cardinalities and weighted sums
    u64 route_max = 199;    // fiber-route total vs closed formula
    u64 forms_max = 10000;  // coefficient identities
    u64 hecke_max = 97;     // eigenform recursion at p^2
    u64 seeds_max = 9973;   // quadruple seed coverage
    u64 asym_max = 9973;    // growth envelope for the closed formulas
    u64 ext_max = 499;      // extension-count lower bound
    int jobs = 1;
    u64 configured_pmax = 0;  // echoed into reports; 0 = per-check defaults

    // clamp everything to pmax (expensive brutes keep their hard caps)
    static VerifyConfig with_pmax(u64 pmax, int jobs = 1);
};

struct VerificationReport {
    std::string version = "0.1.0";
    std::string suite;
    u64 pmax = 0;  // as configured, 0 = per-check defaults
    int jobs = 1;
    std::vector<CheckResult> results;
    std::vector<std::pair<std::string, i64>> wall_ms;  // per suite
    bool passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }
};

std::vector<u64> primes_in(u64 lo, u64 hi);  // odd primes, inclusive

std::vector<CheckResult> suite_tuples(const VerifyConfig& cfg);
std::vector<CheckResult> suite_forms(const VerifyConfig& cfg);
std::vector<CheckResult> suite_fibers(const VerifyConfig& cfg);
std::vector<CheckResult> suite_tsets(const VerifyConfig& cfg);

// which: tuples | forms | fibers | tsets | all
VerificationReport run_suite(std::string_view which, const VerifyConfig& cfg);

std::string report_to_json(const VerificationReport& rep, bool pretty = true);

}  // namespace verify
}  // namespace fpd
