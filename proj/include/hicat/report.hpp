#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hicat {

/// Outcome of one exhaustive check at one (d, n) point or for one model.
/// A failing report always carries the first counterexample found.
struct VerificationReport {
    std::string theorem;
    std::string subject;  // model name or "(d,n)"
    int d = 0;
    int n = 0;
    bool pass = true;
    bool skipped = false;
    std::vector<std::pair<std::string, long long>> counters;
    std::optional<std::string> counterexample;
    std::vector<std::string> notes;
    double seconds = 0.0;

    void count(const std::string& name, long long delta = 1);
    long long counter(const std::string& name) const;
    void fail(std::string witness);
    /// Folds another report's counters and verdict into this one.
    void absorb(const VerificationReport& other, const std::string& prefix = {});
};

}  // namespace hicat
