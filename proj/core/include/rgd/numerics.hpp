#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

#include "rgd/errors.hpp"

namespace rgd {

// A real number stored as sign and natural log of its magnitude.
// sign == 0 is exact zero; lnmag is meaningless in that case.
struct LogSigned {
    int sign = 0;
    double lnmag = 0.0;

    constexpr LogSigned() = default;
    constexpr LogSigned(int s, double l) : sign(s == 0 ? 0 : (s > 0 ? 1 : -1)), lnmag(s == 0 ? 0.0 : l) {}

    static LogSigned zero() { return {}; }
    static LogSigned one() { return {1, 0.0}; }
    static LogSigned fromReal(double x);
    static LogSigned fromLog(double lnmag, int sign = 1) { return {sign, lnmag}; }

    double toReal() const { return sign == 0 ? 0.0 : sign * std::exp(lnmag); }
    bool isZero() const { return sign == 0; }
    LogSigned abs() const { return {sign == 0 ? 0 : 1, lnmag}; }
    LogSigned operator-() const { return {-sign, lnmag}; }
};

LogSigned logAdd(LogSigned a, LogSigned b);
LogSigned logMul(LogSigned a, LogSigned b);
LogSigned logDiv(LogSigned a, LogSigned b);
LogSigned logPow(LogSigned a, int k);

inline LogSigned operator+(LogSigned a, LogSigned b) { return logAdd(a, b); }
inline LogSigned operator-(LogSigned a, LogSigned b) { return logAdd(a, -b); }
inline LogSigned operator*(LogSigned a, LogSigned b) { return logMul(a, b); }
inline LogSigned operator/(LogSigned a, LogSigned b) { return logDiv(a, b); }
inline LogSigned& operator+=(LogSigned& a, LogSigned b) { return a = logAdd(a, b); }
inline LogSigned& operator-=(LogSigned& a, LogSigned b) { return a = logAdd(a, -b); }
inline LogSigned& operator*=(LogSigned& a, LogSigned b) { return a = logMul(a, b); }
inline LogSigned& operator/=(LogSigned& a, LogSigned b) { return a = logDiv(a, b); }

// Equality treats every zero as equal regardless of lnmag.
inline bool operator==(LogSigned a, LogSigned b) {
    if (a.sign != b.sign) return false;
    return a.sign == 0 || a.lnmag == b.lnmag;
}

std::ostream& operator<<(std::ostream& os, LogSigned v);

// Relative difference |a-b|/max(|a|,|b|) computed without leaving log space.
double relDiff(LogSigned a, LogSigned b);

// Error function, odd by construction, absolute error below 1e-15.
double erf(double x);
// Complementary error function with relative accuracy for large positive x.
double erfc(double x);

// Gamma_m(a) = pi^{m(m-1)/4} prod_{j=1}^m Gamma(a - (j-1)/2).
LogSigned multivariateGamma(int m, double a);

struct QuadratureSpec {
    double absTol = 1e-12;
    double relTol = 1e-10;
    int maxSubdivisions = 2000;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

struct QuadratureResult {
    double value = 0.0;
    double errorEstimate = 0.0;
};

// Adaptive Gauss-Kronrod; infinite endpoints are mapped internally.
// Throws ToleranceNotMet when the error estimate exceeds the request.
QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

// Deterministic stream: mt19937_64 (fully specified by the standard) with
// explicit uniform and Box-Muller transforms so results match across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double gaussian();

    // Stream for a sub-task, derived from the base seed with splitmix64.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
    bool haveSpare_ = false;
    double spare_ = 0.0;
};

Rng rng(std::uint64_t seed);

}  // namespace rgd
