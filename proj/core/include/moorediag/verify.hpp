#pragma once

#include <cstdint>

#include "moorediag/duality.hpp"
#include "moorediag/jsonio.hpp"

namespace moorediag {

struct PropertyResult {
    std::string name;
    bool pass = true;
    long long instances = 0;
    std::string counterexample;  // replayable payload, empty when passing
};

struct VerifyReport {
    std::string suite;
    int max_order = 8;
    uint64_t seed = 0;
    std::vector<PropertyResult> properties;
    double seconds = 0;

    bool pass() const;
    long long instances() const;
};

/// The named verification suites (without "all"), in execution order.
std::vector<std::string> verify_suite_names();

/// Runs one suite. Reproducible: the same (suite, max_order, seed) visits the
/// same instances in the same order. Throws DomainError for unknown suites.
VerifyReport run_verify(const std::string& suite, int max_order, uint64_t seed);

std::string report_text(const VerifyReport& r);
/// Deterministic: timing is kept out of the JSON encoding so identical runs
/// produce byte-identical reports.
Json report_json(const VerifyReport& r);

// Text renderings of the category J, shared by the CLI and the golden tests.
std::string cj_table_text();
std::string cj_representable_text(CjObject x);

}  // namespace moorediag
