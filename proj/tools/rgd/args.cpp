#include "args.hpp"

#include <charconv>
#include <cmath>

namespace rgd::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
        if (p == std::string::npos) break;
        start = p + 1;
    }
    return out;
}

template <class T>
T parseNumber(const std::string& s, const char* what) {
    T v{};
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last) {
        throw UsageError(std::string(what) + ": cannot parse '" + s + "'");
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(v)) throw UsageError(std::string(what) + ": value must be finite");
    }
    return v;
}

// start:stop[:step] -> points start + k step, k = 0.. while <= stop (with slack for rounding)
std::vector<double> realSteps(double start, double stop, double step, const char* what) {
    if (!(step > 0.0)) throw UsageError(std::string(what) + ": step must be positive");
    if (stop < start) throw UsageError(std::string(what) + ": range end is below its start");
    const double span = (stop - start) / step;
    if (span > 1e7) throw UsageError(std::string(what) + ": range has too many points");
    const long n = static_cast<long>(std::floor(span + 1e-9));
    std::vector<double> out;
    for (long k = 0; k <= n; ++k) out.push_back(start + k * step);
    return out;
}

}  // namespace

std::vector<int> parseIntRange(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.find(',') != std::string::npos) {
        for (const auto& p : split(text, ',')) out.push_back(parseNumber<int>(p, what));
        return out;
    }
    const auto parts = split(text, ':');
    if (parts.size() == 1) return {parseNumber<int>(parts[0], what)};
    if (parts.size() > 3) throw UsageError(std::string(what) + ": expected start:stop[:step]");
    const int start = parseNumber<int>(parts[0], what);
    const int stop = parseNumber<int>(parts[1], what);
    const int step = parts.size() == 3 ? parseNumber<int>(parts[2], what) : 1;
    if (step <= 0) throw UsageError(std::string(what) + ": step must be positive");
    if (stop < start) throw UsageError(std::string(what) + ": range end is below its start");
    for (int v = start; v <= stop; v += step) out.push_back(v);
    return out;
}

std::vector<double> parseRealRange(const std::string& text, const char* what) {
    if (text.find(',') != std::string::npos) return parseVector(text, what);
    const auto parts = split(text, ':');
    if (parts.size() == 1) return {parseNumber<double>(parts[0], what)};
    if (parts.size() != 3) throw UsageError(std::string(what) + ": expected start:stop:step");
    return realSteps(parseNumber<double>(parts[0], what), parseNumber<double>(parts[1], what),
                     parseNumber<double>(parts[2], what), what);
}

std::vector<double> parseGrid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("--grid: expected LO:HI:STEP");
    return realSteps(parseNumber<double>(parts[0], "--grid"), parseNumber<double>(parts[1], "--grid"),
                     parseNumber<double>(parts[2], "--grid"), "--grid");
}

std::vector<double> parseVector(const std::string& text, const char* what) {
    std::vector<double> out;
    for (const auto& p : split(text, ',')) out.push_back(parseNumber<double>(p, what));
    return out;
}

}  // namespace rgd::cli
