#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rgd {

enum class CheckStatus { Pass, Fail, Info };

const char* statusName(CheckStatus s);

struct CheckRow {
    std::string id;
    int criterion = 0;
    CheckStatus status = CheckStatus::Info;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string note;
    // Wall-clock measurements; excluded when comparing two runs.
    bool timing = false;
};

struct VerifyOptions {
    std::uint64_t seed = 20240611;
    int threads = 1;
    std::uint64_t mcSamples = 10'000'000;
    // Criteria to run (1..11); empty runs all of them.
    std::vector<int> criteria;
    // Called once per finished row, in report order.
    std::function<void(const CheckRow&)> onRow;
};

struct VerifyReport {
    std::vector<CheckRow> rows;
    double seconds = 0.0;

    bool passed(int criterion) const;
    bool allPassed() const;
    const CheckRow* firstFailure() const;
    // Rows with timing entries dropped, for run-to-run comparison.
    bool sameResults(const VerifyReport& other) const;
};

inline constexpr int kCriteria = 12;

// Short description of each acceptance criterion, index 1..12.
const char* criterionTitle(int criterion);

VerifyReport runVerification(const VerifyOptions& opt = {});

}  // namespace rgd
