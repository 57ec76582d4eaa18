#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arcstat {

struct VerificationOutcome {
    std::string check;
    int min_n = 1;
    int max_n = 0;
    bool passed = false;
    std::optional<std::string> counterexample;  // partition text, when per-partition
    double elapsed_ms = 0.0;
};

struct CheckOptions {
    int max_n = 0;           // 0 = per-check default
    std::uint64_t seed = 1;  // randomized checks only
    int prime = 101;
    int trials = 100;
};

struct CheckSpec {
    std::string name;
    std::string summary;
    int default_max_n;
    int cap;  // enumeration checks refuse to go beyond this
    std::function<VerificationOutcome(const CheckOptions&)> run;
};

/// All registered theorem and invariant checks, in a fixed order.
const std::vector<CheckSpec>& verification_checks();

/// Lookup by name; nullptr if absent.
const CheckSpec* find_check(const std::string& name);

}  // namespace arcstat
