#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rookalg {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string details;
    std::optional<std::string> witness;  // counterexample in the element grammar
};

struct VerificationReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // insertion order kept
    std::vector<CheckResult> checks;
    long long timing_ms = 0;

    bool all_pass() const;
    // Deterministic serialization; identical inputs give identical bytes
    // except for the timing field, which include_timing can drop.
    std::string to_json(bool include_timing = true) const;
    std::string text() const;  // one line per check
};

// suite in {presentation, basis, reps, hecke, shiftsym, all}
VerificationReport run_suite(const std::string& suite, int n_max, int m_max, int threads);
std::vector<std::string> suite_names();

}  // namespace rookalg
