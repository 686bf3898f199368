#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace selmat {

struct VerifyOptions {
    std::uint64_t seed = 20240917;
    long accepted = 1000000;    // rejection samples per ensemble in criterion 10
    std::vector<int> criteria;  // empty runs 1..11
};

struct CriterionResult {
    int id = 0;
    bool pass = false;
    std::string title;
    std::string detail;  // deterministic; no timings
    double seconds = 0;
};

// "[PASS] 3 title: detail"
std::string format_line(const CriterionResult& r);

using CriterionSink = std::function<void(const CriterionResult&)>;

// runs the selected criteria in increasing order, reporting each through sink as it finishes
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options, const CriterionSink& sink = {});

inline constexpr int kCriterionCount = 11;

}  // namespace selmat
