#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rgd::cli {

// Malformed command line; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "5", "2:12", "2:40:2" or "1,3,5"
std::vector<int> parseIntRange(const std::string& text, const char* what);
// "0.7", "0.1:2.4:0.1" or "0.5,1"
std::vector<double> parseRealRange(const std::string& text, const char* what);
// LO:HI:STEP, both ends included when the step divides the span
std::vector<double> parseGrid(const std::string& text);
// Comma separated reals, e.g. "1.2,-0.3"
std::vector<double> parseVector(const std::string& text, const char* what);

}  // namespace rgd::cli
