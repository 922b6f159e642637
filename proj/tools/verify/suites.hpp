#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellpl/numeric_core.hpp"
#include "json.hpp"

namespace ellpl::verify {

struct Check {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    // Controls must stay above the tolerance: max_error is the smallest observed defect.
    bool lower_bound = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    std::string config_hash;

    bool passed() const;
};

struct RunConfig {
    Precision prec;
    std::uint64_t seed = 20240611;
    int samples = 0;  // 0 selects the suite default
    int n = -1;       // -1 sweeps the suite default range
    int N = -1;
    int D = -1;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws DomainError for an unknown suite.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

// FNV-1a over a canonical rendering of the suite name and every config field.
std::string config_hash(const std::string& suite, const RunConfig& cfg);

nlohmann::ordered_json to_json(const SuiteReport& r);

}  // namespace ellpl::verify
