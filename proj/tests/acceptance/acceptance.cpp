// Runs the certification suite twice (1 and 2 threads) and prints one line per
// acceptance criterion. Exit status is non-zero if any criterion is red.
#include <cstdio>
#include <map>
#include <string>

#include "rgd/verify.hpp"

using namespace rgd;

namespace {

std::string summary(const VerifyReport& rep, int criterion) {
    int pass = 0;
    int fail = 0;
    const CheckRow* first = nullptr;
    for (const auto& r : rep.rows) {
        if (r.criterion != criterion) continue;
        if (r.status == CheckStatus::Pass) ++pass;
        if (r.status == CheckStatus::Fail) {
            ++fail;
            if (!first) first = &r;
        }
    }
    std::string s = std::to_string(pass) + " passed, " + std::to_string(fail) + " failed";
    if (first) s += "; first failure " + first->id;
    return s;
}

}  // namespace

int main() {
    VerifyOptions one;
    one.threads = 1;
    const VerifyReport a = runVerification(one);

    VerifyOptions two = one;
    two.threads = 2;
    const VerifyReport b = runVerification(two);

    bool all = true;
    for (int c = 1; c < kCriteria; ++c) {
        const bool ok = a.passed(c);
        all = all && ok;
        std::printf("criterion %2d: %s  %s [%s]\n", c, ok ? "PASS" : "FAIL", criterionTitle(c), summary(a, c).c_str());
    }
    const bool same = a.sameResults(b);
    const bool fast = a.seconds <= 60.0;
    const bool ok12 = same && fast;
    all = all && ok12;
    std::printf("criterion %2d: %s  %s [%.1f s single-threaded, %s across thread counts]\n", kCriteria,
                ok12 ? "PASS" : "FAIL", criterionTitle(kCriteria), a.seconds, same ? "identical" : "different");
    return all ? 0 : 1;
}
